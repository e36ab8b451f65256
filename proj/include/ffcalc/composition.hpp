#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ffcalc {

/// Block sizes (h_1, ..., h_k) of a standard Levi GL_{h_1} × ⋯ × GL_{h_k} in
/// GL_n, equivalently of the Young subgroup S_{h_1} × ⋯ × S_{h_k} of S_n.
class Composition {
public:
    /// Throws PreconditionError (located at `field`) if empty or any part < 1.
    explicit Composition(std::vector<std::int64_t> parts, const std::string& field = "h");

    std::span<const std::int64_t> parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    std::int64_t operator[](std::size_t i) const { return parts_[i]; }
    std::int64_t total() const noexcept { return total_; }

    /// 0-based index of the block containing 1-based coordinate c.
    std::size_t block_of(std::int64_t c) const;

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<std::int64_t> parts_;
    std::int64_t total_ = 0;
};

}  // namespace ffcalc
