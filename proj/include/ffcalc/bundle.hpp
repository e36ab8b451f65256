#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ffcalc/rational.hpp"

namespace ffcalc {

/// O(slope)^{⊕mult}: one isotypic piece of the Harder-Narasimhan decomposition.
struct Summand {
    Slope slope;
    std::int64_t mult = 1;

    friend bool operator==(const Summand&, const Summand&) = default;
};

/// A vector bundle on the curve over a geometric point, stored as its split
/// Harder-Narasimhan decomposition.
///
/// Summands are kept with pairwise distinct slopes in strictly decreasing
/// order and positive multiplicities, so two bundles are isomorphic exactly
/// when they compare equal. The default-constructed value is the zero bundle.
class Bundle {
public:
    Bundle() = default;

    /// Normalizes an arbitrary list: merges equal slopes, drops zero
    /// multiplicities, sorts. Throws std::invalid_argument on a negative
    /// multiplicity.
    explicit Bundle(std::vector<Summand> parts);

    static Bundle stable(Slope slope, std::int64_t mult = 1);

    std::span<const Summand> summands() const noexcept { return summands_; }
    bool is_zero() const noexcept { return summands_.empty(); }

    /// Multiplicity of O(slope) (0 when absent).
    std::int64_t multiplicity(const Slope& slope) const noexcept;

    friend bool operator==(const Bundle&, const Bundle&) = default;

    std::string to_string() const;

private:
    std::vector<Summand> summands_;
};

/// Direct sum.
Bundle operator+(const Bundle& a, const Bundle& b);

std::int64_t rank(const Bundle& e);
std::int64_t degree(const Bundle& e);

Bundle dual(const Bundle& e);

/// E ⊗ O(n): every slope shifts by n.
Bundle twist(const Bundle& e, std::int64_t n);

/// Stable pieces multiply as O(a)⊗O(b) = O(a+b)^{⊕ r_a r_b / r_{a+b}}, which is
/// forced by semistability of the product plus rank and slope additivity.
Bundle tensor(const Bundle& a, const Bundle& b);

enum class CutKind { at_least, above, below, at_most, equal };

/// Slope truncation E^{≥λ}, E^{>λ}, E^{<λ}, E^{≤λ} or the isotypic piece E^{=λ}.
struct Cut {
    CutKind kind;
    Rational at;

    static Cut at_least(Rational l) { return {CutKind::at_least, l}; }
    static Cut above(Rational l) { return {CutKind::above, l}; }
    static Cut below(Rational l) { return {CutKind::below, l}; }
    static Cut at_most(Rational l) { return {CutKind::at_most, l}; }
    static Cut equal(Rational l) { return {CutKind::equal, l}; }

    bool admits(const Slope& s) const noexcept;
};

/// Since the HN filtration splits, the sub-bundles E^{≥λ}, E^{>λ} and the
/// quotients E^{<λ}, E^{≤λ} are all direct sums of the summands admitted by
/// the cut.
Bundle truncate(const Bundle& e, const Cut& cut);

bool has_slope_zero_summand(const Bundle& e);

struct PolygonVertex {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

/// Concave HN polygon from (0,0) to (rank, degree).
class HNPolygon {
public:
    explicit HNPolygon(std::vector<PolygonVertex> vertices);

    std::span<const PolygonVertex> vertices() const noexcept { return vertices_; }
    const PolygonVertex& end() const noexcept { return vertices_.back(); }

    /// Piecewise-linear value at any x in [0, rank].
    Rational value_at(const Rational& x) const;

    friend bool operator==(const HNPolygon&, const HNPolygon&) = default;

private:
    std::vector<PolygonVertex> vertices_;
};

HNPolygon hn_polygon(const Bundle& e);

/// Kottwitz order for GL_n: b ⪰ b2 iff the endpoints agree and the polygon of
/// b lies on or above that of b2.
bool dominates(const Bundle& b, const Bundle& b2);

}  // namespace ffcalc
