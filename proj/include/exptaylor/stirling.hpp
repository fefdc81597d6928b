#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace exptaylor {

using BigInt = boost::multiprecision::cpp_int;

/// Signed Stirling numbers of the first kind s(n, k), 0 <= k <= n <= depth,
/// defined by x(x-1)...(x-n+1) = sum_k s(n, k) x^k.
///
/// Values are exact. The table is immutable after construction.
class StirlingTable {
public:
    static constexpr int kMaxDepth = 256;

    explicit StirlingTable(int n_max);

    int depth() const noexcept { return n_max_; }

    const BigInt& signed_value(int n, int k) const;
    BigInt unsigned_value(int n, int k) const;

    /// s(n, k) rounded to double. Overflows to +-inf only far beyond n = 64.
    double signed_double(int n, int k) const;

    /// Writes the row `n` as CSV with header `n,k,s_nk`.
    void write_row_csv(std::ostream& out, int n) const;

private:
    std::size_t offset(int n, int k) const;

    int n_max_;
    std::vector<BigInt> values_;  // row-major triangle
};

StirlingTable build_table(int n_max);

/// u_{j,k} = |s(j,k)| / j! for j = 0..j_max, computed by the all-positive
/// recurrence u_{j+1,k} = (u_{j,k-1} + j u_{j,k}) / (j+1).
struct StirlingRatioRow {
    int k = 0;
    std::vector<double> values;  // values[j] = u_{j,k}; zero for j < k

    double operator[](std::size_t j) const { return values[j]; }
};

/// Rows k = 1..k_max, each holding j = 0..j_max.
std::vector<StirlingRatioRow> build_ratio_rows(int k_max, int j_max);

}  // namespace exptaylor
