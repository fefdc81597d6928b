#include "exptaylor/multi_index.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "exptaylor/error.hpp"

namespace exptaylor {

MultiIndex::MultiIndex(std::vector<int> components) : c_(std::move(components)) {
    for (int v : c_) {
        if (v < 0) throw ValidationError("multi-index components must be nonnegative");
    }
}

int MultiIndex::order() const noexcept { return std::accumulate(c_.begin(), c_.end(), 0); }

double MultiIndex::factorial() const {
    double f = 1.0;
    for (int v : c_) {
        for (int i = 2; i <= v; ++i) f *= i;
    }
    return f;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c_[i]);
    }
    return s + ")";
}

namespace {

void fill_degree(int n, int remaining, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    const auto axis = cur.size();
    if (static_cast<int>(axis) == n - 1) {
        cur.push_back(remaining);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur.push_back(v);
        fill_degree(n, remaining - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(int n, int degree) {
    if (n < 1) throw ValidationError("multi-index dimension must be at least 1");
    std::vector<MultiIndex> out;
    if (degree < 0) return out;
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(n));
    fill_degree(n, degree, cur, out);
    return out;
}

std::vector<MultiIndex> multi_indices(int n, int N) {
    if (n < 1) throw ValidationError("multi-index dimension must be at least 1");
    if (N < 1) throw ValidationError("multi-index bound N must be at least 1");
    std::vector<MultiIndex> out;
    for (int d = 0; d < N; ++d) {
        auto level = multi_indices_of_degree(n, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

MonomialLayout::MonomialLayout(int n, int K) : n_(n), K_(K) {
    if (n < 1 || K < 0) throw ValidationError("monomial layout needs n >= 1 and K >= 0");
    std::size_t table = 1;
    for (int i = 0; i < n; ++i) {
        table *= static_cast<std::size_t>(K + 1);
        if (table > 20'000'000) throw ValidationError("monomial layout too large");
    }
    code_to_pos_.assign(table, npos);
    for (int d = 0; d <= K; ++d) {
        degree_begin_.push_back(indices_.size());
        for (auto& g : multi_indices_of_degree(n, d)) {
            const auto code = code_of(g);
            code_to_pos_[code] = indices_.size();
            codes_.push_back(code);
            degree_.push_back(d);
            indices_.push_back(std::move(g));
        }
    }
    degree_begin_.push_back(indices_.size());
}

std::size_t MonomialLayout::code_of(const MultiIndex& g) const {
    std::size_t code = 0;
    for (int i = 0; i < n_; ++i) code = code * static_cast<std::size_t>(K_ + 1) + static_cast<std::size_t>(g[i]);
    return code;
}

std::size_t MonomialLayout::position(const MultiIndex& gamma) const {
    if (gamma.size() != n_ || gamma.order() > K_) return npos;
    return code_to_pos_[code_of(gamma)];
}

std::size_t MonomialLayout::sum_position(std::size_t a, std::size_t b) const {
    if (degree_[a] + degree_[b] > K_) return npos;
    return code_to_pos_[codes_[a] + codes_[b]];
}

std::shared_ptr<const MonomialLayout> MonomialLayout::get(int n, int K) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonomialLayout>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, K}];
    if (!slot) slot = std::make_shared<const MonomialLayout>(n, K);
    return slot;
}

}  // namespace exptaylor
