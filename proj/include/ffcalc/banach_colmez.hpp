#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffcalc/bundle.hpp"

namespace ffcalc::bc {

/// Smoothness flag plus ℓ-dimension. A non-smooth space carries no dimension.
class SmoothDim {
public:
    static SmoothDim smooth(std::int64_t dim) { return SmoothDim(dim); }
    static SmoothDim not_smooth() { return SmoothDim(); }

    bool is_smooth() const noexcept { return dim_.has_value(); }
    /// Throws std::logic_error when not smooth.
    std::int64_t dim() const;
    const std::optional<std::int64_t>& maybe_dim() const noexcept { return dim_; }

    friend bool operator==(const SmoothDim&, const SmoothDim&) = default;

private:
    SmoothDim() = default;
    explicit SmoothDim(std::int64_t d) : dim_(d) {}
    std::optional<std::int64_t> dim_;
};

/// {E^{-1} → E^0}; the differential is not part of the data.
struct TwoTermComplex {
    Bundle e_minus1;
    Bundle e_zero;

    friend bool operator==(const TwoTermComplex&, const TwoTermComplex&) = default;
};

/// Direct sum of skyscrapers O_x/t_x^m, keyed by point label. Lengths at a
/// point are kept sorted.
class TorsionSheaf {
public:
    TorsionSheaf() = default;
    /// Throws std::invalid_argument on a length < 1.
    explicit TorsionSheaf(std::map<std::string, std::vector<std::int64_t>> stalks);

    const std::map<std::string, std::vector<std::int64_t>>& stalks() const noexcept { return stalks_; }
    std::int64_t degree() const;

    friend bool operator==(const TorsionSheaf&, const TorsionSheaf&) = default;

private:
    std::map<std::string, std::vector<std::int64_t>> stalks_;
};

SmoothDim h0_dim(const Bundle& e);
SmoothDim h1_dim(const Bundle& e);

struct ComplexDims {
    SmoothDim hminus1;
    SmoothDim h0;
    SmoothDim h1;

    friend bool operator==(const ComplexDims&, const ComplexDims&) = default;
};

/// Hypercohomology of a two-term complex, via H^{-1} ≅ H^0(E^{-1}),
/// H^1 ≅ H^1(E^0) and the extension 0 → H^0(E^0) → H^0 → H^1(E^{-1}) → 0.
ComplexDims complex_h_dims(const TwoTermComplex& c);

/// Picard v-groupoid [H^0/H^{-1}].
SmoothDim picard_dim(const TwoTermComplex& c);

/// Jacobian criterion at a section: the pulled-back tangent complex has
/// vanishing H^1 and smooth H^0 exactly when E^0 has only positive slopes.
bool section_is_smooth_point(const TwoTermComplex& c);

SmoothDim torsion_h0_dim(const TorsionSheaf& q);
SmoothDim ext1_torsion_bundle_dim(const TorsionSheaf& q, const Bundle& g);

struct HomExt {
    SmoothDim hom;
    SmoothDim ext;
};

HomExt torsion_hom_ext_dims(const TorsionSheaf& q1, const TorsionSheaf& q2);

}  // namespace ffcalc::bc
