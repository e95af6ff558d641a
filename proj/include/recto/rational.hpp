#pragma once

// Exact rational arithmetic over checked 64-bit integers.
//
// Every fractional quantity in this project is exact; results are compared
// with integer equality, never with a floating tolerance. Magnitudes stay
// small (the largest denominator anywhere in the domain is a few thousand),
// so int64 with overflow checks is plenty.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace recto {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Always stored reduced: gcd(num, den) == 1 and den > 0.
class Rational {
public:
    Rational() = default;

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { reduce(); }

    static Rational integer(std::int64_t n) { return Rational(n, 1); }

    // 1/den for den >= 1.
    static Rational unit(std::int64_t den) {
        if (den < 1)
            throw std::invalid_argument("unit fraction denominator must be positive");
        return Rational(1, den);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_unit_fraction() const { return num_ == 1; }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }

    Rational operator-(const Rational& o) const {
        return Rational(checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend bool operator<(const Rational& a, const Rational& b) {
        // denominators are positive, so cross multiplication keeps the order
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void reduce() {
        if (den_ == 0)
            throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::string to_string(const Rational& r) {
    return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

} // namespace recto
