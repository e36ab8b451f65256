#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffcalc {

// Checked 64-bit integer arithmetic. Every slope and degree computation in
// the library funnels through these, so untrusted input can only ever
// produce std::overflow_error, never wraparound.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

/// Exact rational number in lowest terms with a positive denominator.
///
/// Doubles as the slope type: O(s/r) is the stable bundle of rank r and
/// degree s, so `num()` is the degree and `den()` the rank of the stable
/// bundle with this slope. Zero is stored as 0/1.
class Rational {
public:
    constexpr Rational() noexcept = default;
    Rational(std::int64_t n) noexcept : num_(n), den_(1) {}  // NOLINT: implicit by design of integer promotion
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    Rational operator-() const { return Rational(checked_neg(num_), den_, normalized_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string to_string() const;

private:
    struct normalized_tag {};
    Rational(std::int64_t n, std::int64_t d, normalized_tag) noexcept : num_(n), den_(d) {}

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

using Slope = Rational;

}  // namespace ffcalc
