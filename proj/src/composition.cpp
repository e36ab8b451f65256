#include "ffcalc/composition.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffcalc/errors.hpp"
#include "ffcalc/rational.hpp"

namespace ffcalc {

Composition::Composition(std::vector<std::int64_t> parts, const std::string& field) : parts_(std::move(parts)) {
    if (parts_.empty()) throw PreconditionError(field, "composition must be nonempty");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw PreconditionError(field + "[" + std::to_string(i) + "]", "composition parts must be >= 1");
        }
        total_ = checked_add(total_, parts_[i]);
    }
}

std::size_t Composition::block_of(std::int64_t c) const {
    if (c < 1 || c > total_) throw std::out_of_range("coordinate outside composition");
    std::int64_t end = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        end += parts_[i];
        if (c <= end) return i;
    }
    return parts_.size() - 1;
}

}  // namespace ffcalc
