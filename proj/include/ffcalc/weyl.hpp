#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffcalc/composition.hpp"

namespace ffcalc::weyl {

/// A permutation of {1..n} in one-line notation, viewed as an element of the
/// Weyl group S_n of GL_n. Simple reflection s_i swaps i and i+1.
class WeylElement {
public:
    /// Throws PreconditionError unless `one_line` is a bijection on {1..n}.
    explicit WeylElement(std::vector<int> one_line);

    static WeylElement identity(int n);
    static WeylElement simple_reflection(int n, int i);
    static WeylElement longest(int n);

    int size() const noexcept { return static_cast<int>(one_line_.size()); }
    std::span<const int> one_line() const noexcept { return one_line_; }
    /// w(a) for 1-based a.
    int operator()(int a) const { return one_line_[static_cast<std::size_t>(a - 1)]; }

    WeylElement inverse() const;
    bool is_identity() const noexcept;

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
    friend auto operator<=>(const WeylElement& a, const WeylElement& b) { return a.one_line_ <=> b.one_line_; }

private:
    std::vector<int> one_line_;
};

/// (a * b)(i) = a(b(i)).
WeylElement operator*(const WeylElement& a, const WeylElement& b);

/// Young subgroup S_{h_1} × ⋯ × S_{h_k}: the Weyl group of a standard Levi.
using YoungSubgroup = Composition;

/// Coxeter length: the number of inversions.
std::int64_t length(const WeylElement& w);

/// Reduced word (a_1, ..., a_l) with w = s_{a_1} ⋯ s_{a_l}, obtained by
/// repeatedly sorting away the smallest right descent.
std::vector<int> reduced_word(const WeylElement& w);

/// Whether w has minimal length in W_left · w · W_right, decided by descents:
/// w is increasing on each right block of positions and w^{-1} on each left
/// block of values.
bool is_minimal_rep(const WeylElement& w, const YoungSubgroup& left, const YoungSubgroup& right);

/// Hard cap on n for full double-coset enumeration.
inline constexpr int kMaxEnumerationRank = 10;

/// One minimal-length representative per double coset W_left \ S_n / W_right,
/// sorted lexicographically by one-line notation.
std::vector<WeylElement> min_double_coset_reps(int n, const YoungSubgroup& left, const YoungSubgroup& right);

/// u ≤ w in Bruhat order: some reduced word of u is a subword of the fixed
/// reduced word of w (greedy left-descent scan).
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// h_ij = #{a in right block j : w(a) in left block i}; constant on double cosets.
IntMatrix matrix_from_rep(const WeylElement& w, const YoungSubgroup& left, const YoungSubgroup& right);

/// Minimal representative of the double coset with rank matrix h; rows give
/// the left composition, columns the right one.
WeylElement coset_rep_from_matrix(const IntMatrix& h);

/// Number of nonnegative integer matrices with the given row and column
/// sums, which is the number of double cosets W_rows \ S_n / W_cols.
std::uint64_t count_contingency_matrices(std::span<const std::int64_t> row_sums, std::span<const std::int64_t> col_sums);

/// |W_left w W_right| = Π h_i! Π h'_j! / Π h_ij!.
std::uint64_t double_coset_size(const WeylElement& w, const YoungSubgroup& left, const YoungSubgroup& right);

}  // namespace ffcalc::weyl
