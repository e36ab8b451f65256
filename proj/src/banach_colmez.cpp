#include "ffcalc/banach_colmez.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffcalc::bc {

std::int64_t SmoothDim::dim() const {
    if (!dim_) throw std::logic_error("dimension requested for a non-smooth space");
    return *dim_;
}

TorsionSheaf::TorsionSheaf(std::map<std::string, std::vector<std::int64_t>> stalks) {
    for (auto& [point, lengths] : stalks) {
        for (auto m : lengths) {
            if (m < 1) throw std::invalid_argument("torsion length at '" + point + "' must be >= 1");
        }
        if (lengths.empty()) continue;
        std::sort(lengths.begin(), lengths.end());
        stalks_.emplace(point, std::move(lengths));
    }
}

std::int64_t TorsionSheaf::degree() const {
    std::int64_t d = 0;
    for (const auto& [point, lengths] : stalks_) {
        for (auto m : lengths) d = checked_add(d, m);
    }
    return d;
}

SmoothDim h0_dim(const Bundle& e) {
    if (has_slope_zero_summand(e)) return SmoothDim::not_smooth();
    return SmoothDim::smooth(degree(truncate(e, Cut::above(0))));
}

SmoothDim h1_dim(const Bundle& e) { return SmoothDim::smooth(checked_neg(degree(truncate(e, Cut::below(0))))); }

ComplexDims complex_h_dims(const TwoTermComplex& c) {
    const SmoothDim hminus1 = has_slope_zero_summand(c.e_minus1)
                                  ? SmoothDim::not_smooth()
                                  : SmoothDim::smooth(degree(truncate(c.e_minus1, Cut::above(0))));
    const SmoothDim h0 = has_slope_zero_summand(c.e_zero)
                             ? SmoothDim::not_smooth()
                             : SmoothDim::smooth(checked_sub(degree(truncate(c.e_zero, Cut::above(0))),
                                                             degree(truncate(c.e_minus1, Cut::below(0)))));
    return {hminus1, h0, h1_dim(c.e_zero)};
}

SmoothDim picard_dim(const TwoTermComplex& c) {
    if (has_slope_zero_summand(c.e_zero)) return SmoothDim::not_smooth();
    return SmoothDim::smooth(checked_sub(degree(truncate(c.e_zero, Cut::at_least(0))), degree(c.e_minus1)));
}

bool section_is_smooth_point(const TwoTermComplex& c) {
    const auto parts = c.e_zero.summands();
    return std::all_of(parts.begin(), parts.end(), [](const Summand& s) { return s.slope.sign() > 0; });
}

SmoothDim torsion_h0_dim(const TorsionSheaf& q) { return SmoothDim::smooth(q.degree()); }

SmoothDim ext1_torsion_bundle_dim(const TorsionSheaf& q, const Bundle& g) {
    return SmoothDim::smooth(checked_mul(q.degree(), rank(g)));
}

HomExt torsion_hom_ext_dims(const TorsionSheaf& q1, const TorsionSheaf& q2) {
    // Hom(O/t^a, O/t^b) and Ext^1(O/t^a, O/t^b) both have length min(a, b)
    // at a common point and vanish across distinct points; expand bilinearly.
    std::int64_t total = 0;
    for (const auto& [point, lengths1] : q1.stalks()) {
        const auto it = q2.stalks().find(point);
        if (it == q2.stalks().end()) continue;
        for (auto a : lengths1) {
            for (auto b : it->second) total = checked_add(total, std::min(a, b));
        }
    }
    return {SmoothDim::smooth(total), SmoothDim::smooth(total)};
}

}  // namespace ffcalc::bc
