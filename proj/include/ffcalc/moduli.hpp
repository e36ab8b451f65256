#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ffcalc/bundle.hpp"
#include "ffcalc/composition.hpp"

namespace ffcalc::moduli {

using ffcalc::Composition;

/// Degrees (d_1, ..., d_k) of the semistable blocks of a basic M-bundle.
using DegreeVector = std::vector<std::int64_t>;

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Ranks and degrees of the bigraded pieces of a pair of flags, with the
/// marginals they must reproduce.
struct BifiltrationData {
    IntMatrix h;
    IntMatrix d;
    std::vector<std::int64_t> row_ranks;
    std::vector<std::int64_t> col_ranks;
    std::vector<std::int64_t> row_degs;
    std::vector<std::int64_t> col_degs;
};

struct GradedPiece {
    std::int64_t rank = 0;
    std::int64_t degree = 0;
};

/// Graded pieces of a flag or quasi-flag; a rank-0 piece of positive degree
/// is a torsion subquotient.
using GradedFlagData = std::vector<GradedPiece>;

/// Σ_{i<j} (h_i d_j − h_j d_i).
std::int64_t d_nu(const Composition& h, std::span<const std::int64_t> d);

/// ⟨2ρ_G, μ⟩ for the block-constant slope cocharacter μ = (d_i/h_i repeated h_i
/// times), evaluated coordinate-block by coordinate-block. Positive roots are
/// e_b − e_a for a < b, which makes this agree with d_nu.
std::int64_t d_nu_pairing(const Composition& h, std::span<const std::int64_t> d);

/// Degree of the bundle of flag-preserving endomorphisms: Σ over i ≤ j of
/// deg Hom(gr_j, gr_i). Equals −d_nu on matching data.
std::int64_t filtered_end_degree(std::span<const GradedPiece> pieces);

/// ℓ-dimension of Bun_P^ν. Cross-checks all three d_ν computations and throws
/// std::logic_error if they disagree.
std::int64_t bun_p_stratum_dim(const Composition& h, std::span<const std::int64_t> d);

/// ℓ-dimension of the degree-ν stratum of Laumon's compactification.
std::int64_t laumon_stratum_dim(const Composition& h, std::span<const std::int64_t> d);

/// ℓ-dimension of Bun_{GL_n} at E, from the Picard groupoid of End(E)[1].
/// Throws PreconditionError on the zero bundle.
std::int64_t bun_g_dim(const Bundle& e);

enum class ViolationKind { shape, negative_rank, row_rank, col_rank, row_degree, col_degree };

struct Violation {
    ViolationKind kind;
    std::size_t index = 0;  // 1-based row or column; 0 for shape problems
    std::int64_t expected = 0;
    std::int64_t actual = 0;
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(ViolationKind kind);

std::vector<Violation> validate_bifiltration(const BifiltrationData& b);

/// Σ over bigraded index pairs (i,j) ≤ (p,q) of h_ij d_pq − h_pq d_ij.
/// Throws PreconditionError listing the violations if the data is inconsistent.
std::int64_t relpos_stratum_dim(const BifiltrationData& b);

}  // namespace ffcalc::moduli
