#include "ffcalc/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace ffcalc::sampling {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

Bundle random_bundle(Rng& rng, const BundleShape& shape) {
    const std::int64_t target = uniform(rng, 0, shape.max_rank);
    std::vector<Summand> parts;
    std::int64_t r = 0;
    while (r < target) {
        const std::int64_t den = uniform(rng, 1, std::min(shape.max_den, target - r));
        std::int64_t num = 0;
        do {
            num = uniform(rng, -shape.max_abs_slope * den, shape.max_abs_slope * den);
        } while (std::gcd(num, den) != 1 || (!shape.allow_slope_zero && num == 0));
        parts.push_back({Slope(num, den), 1});
        r += den;
    }
    return Bundle(std::move(parts));
}

bc::TorsionSheaf random_torsion(Rng& rng, int max_points, int max_summands, std::int64_t max_length) {
    std::map<std::string, std::vector<std::int64_t>> stalks;
    const auto points = uniform(rng, 0, max_points);
    for (std::int64_t p = 0; p < points; ++p) {
        // labels drawn from a small pool so two sheaves often share support
        const std::string label = "x" + std::to_string(uniform(rng, 0, max_points));
        const auto count = uniform(rng, 1, max_summands);
        for (std::int64_t c = 0; c < count; ++c) stalks[label].push_back(uniform(rng, 1, max_length));
    }
    return bc::TorsionSheaf(std::move(stalks));
}

}  // namespace ffcalc::sampling
