#pragma once

#include <cstdint>
#include <random>

#include "ffcalc/banach_colmez.hpp"
#include "ffcalc/bundle.hpp"

namespace ffcalc::sampling {

using Rng = std::mt19937_64;

struct BundleShape {
    std::int64_t max_rank = 6;
    std::int64_t max_den = 4;
    std::int64_t max_abs_slope = 3;
    bool allow_slope_zero = true;
};

/// Uniform-ish random bundle: a random target rank in [0, max_rank] filled
/// with random stable summands respecting the shape bounds.
Bundle random_bundle(Rng& rng, const BundleShape& shape);

bc::TorsionSheaf random_torsion(Rng& rng, int max_points = 3, int max_summands = 3, std::int64_t max_length = 5);

}  // namespace ffcalc::sampling
