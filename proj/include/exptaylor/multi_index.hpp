#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace exptaylor {

/// Multi-index gamma in N_0^n.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> components);
    static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    int size() const noexcept { return static_cast<int>(c_.size()); }
    int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& components() const noexcept { return c_; }

    int order() const noexcept;      // |gamma|
    double factorial() const;        // gamma!

    /// Graded lexicographic: by |gamma|, then by components with the first
    /// axis most significant and larger exponents first, so (1,0) < (0,1).
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;

    std::string to_string() const;  // "(1,0,2)"

private:
    std::vector<int> c_;
};

/// All gamma with |gamma| < N in graded lexicographic order.
std::vector<MultiIndex> multi_indices(int n, int N);

/// All gamma with |gamma| == degree in graded lexicographic order.
std::vector<MultiIndex> multi_indices_of_degree(int n, int degree);

/// Dense layout for total-degree-truncated coefficient arrays: position of
/// each gamma with |gamma| <= K, in graded lexicographic order.
class MonomialLayout {
public:
    static std::shared_ptr<const MonomialLayout> get(int n, int K);

    int dims() const noexcept { return n_; }
    int order() const noexcept { return K_; }
    std::size_t size() const noexcept { return indices_.size(); }
    const MultiIndex& index(std::size_t pos) const { return indices_[pos]; }
    const std::vector<MultiIndex>& indices() const noexcept { return indices_; }
    int degree(std::size_t pos) const { return degree_[pos]; }

    /// Position of gamma, or npos when |gamma| > K or the dimension differs.
    std::size_t position(const MultiIndex& gamma) const;
    /// Position of index(a) + index(b), or npos when the sum exceeds K.
    std::size_t sum_position(std::size_t a, std::size_t b) const;
    /// First position with degree >= d (d may be K+1).
    std::size_t degree_begin(int d) const { return degree_begin_[static_cast<std::size_t>(d)]; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    MonomialLayout(int n, int K);

private:
    std::size_t code_of(const MultiIndex& g) const;

    int n_;
    int K_;
    std::vector<MultiIndex> indices_;
    std::vector<int> degree_;
    std::vector<std::size_t> codes_;       // mixed-radix code, base K+1
    std::vector<std::size_t> code_to_pos_;
    std::vector<std::size_t> degree_begin_;
};

}  // namespace exptaylor
