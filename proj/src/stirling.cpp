#include "exptaylor/stirling.hpp"

#include <ostream>
#include <string>

#include "exptaylor/error.hpp"

namespace exptaylor {

StirlingTable::StirlingTable(int n_max) : n_max_(n_max) {
    if (n_max < 0 || n_max > kMaxDepth) {
        throw ValidationError("stirling table depth must lie in [0, " +
                              std::to_string(kMaxDepth) + "], got " + std::to_string(n_max));
    }
    values_.resize(offset(n_max + 1, 0));
    values_[offset(0, 0)] = 1;
    // s(n+1, k) = s(n, k-1) - n s(n, k)
    for (int n = 0; n < n_max; ++n) {
        for (int k = 1; k <= n + 1; ++k) {
            BigInt next = values_[offset(n, k - 1)];
            if (k <= n) next -= BigInt(n) * values_[offset(n, k)];
            values_[offset(n + 1, k)] = std::move(next);
        }
    }
}

std::size_t StirlingTable::offset(int n, int k) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2 +
           static_cast<std::size_t>(k);
}

const BigInt& StirlingTable::signed_value(int n, int k) const {
    if (n < 0 || n > n_max_ || k < 0 || k > n) {
        static const BigInt zero = 0;
        if (n >= 0 && n <= n_max_ && k > n) return zero;
        throw ValidationError("stirling index (" + std::to_string(n) + ", " +
                              std::to_string(k) + ") outside table of depth " +
                              std::to_string(n_max_));
    }
    return values_[offset(n, k)];
}

BigInt StirlingTable::unsigned_value(int n, int k) const {
    return boost::multiprecision::abs(signed_value(n, k));
}

double StirlingTable::signed_double(int n, int k) const {
    return signed_value(n, k).convert_to<double>();
}

void StirlingTable::write_row_csv(std::ostream& out, int n) const {
    if (n < 0 || n > n_max_) {
        throw ValidationError("row " + std::to_string(n) + " outside table");
    }
    out << "n,k,s_nk\n";
    for (int k = 0; k <= n; ++k) {
        out << n << ',' << k << ',' << signed_value(n, k).str() << '\n';
    }
}

StirlingTable build_table(int n_max) { return StirlingTable(n_max); }

std::vector<StirlingRatioRow> build_ratio_rows(int k_max, int j_max) {
    if (k_max < 1 || k_max > 8) {
        throw ValidationError("ratio rows need 1 <= k_max <= 8, got " + std::to_string(k_max));
    }
    if (j_max < 0 || j_max > 1'000'000) {
        throw ValidationError("ratio rows need 0 <= j_max <= 1e6, got " + std::to_string(j_max));
    }
    const auto len = static_cast<std::size_t>(j_max) + 1;

    // Row k = 0 is u_{j,0} = [j == 0]; it only seeds the k = 1 row.
    std::vector<double> prev(len, 0.0);
    prev[0] = 1.0;

    std::vector<StirlingRatioRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        std::vector<double> cur(len, 0.0);
        for (std::size_t j = 0; j + 1 < len; ++j) {
            const double jd = static_cast<double>(j);
            cur[j + 1] = (prev[j] + jd * cur[j]) / (jd + 1.0);
        }
        rows.push_back({k, cur});
        prev = std::move(cur);
    }
    return rows;
}

}  // namespace exptaylor
