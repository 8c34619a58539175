#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pda {

namespace detail {

inline std::int64_t checked_narrow(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

} // namespace detail

/// Exact fraction over 64-bit integers, kept in canonical form
/// (reduced, denominator > 0). Arithmetic throws std::overflow_error
/// instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {}

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0)
            throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return make(__int128(x.num_) * y.den_ + __int128(y.num_) * x.den_,
                    __int128(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return make(__int128(x.num_) * y.den_ - __int128(y.num_) * x.den_,
                    __int128(x.den_) * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return make(__int128(x.num_) * y.num_, __int128(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0)
            throw std::invalid_argument("Rational: division by zero");
        return make(__int128(x.num_) * y.den_, __int128(x.den_) * y.num_);
    }

    Rational& operator+=(const Rational& x) { return *this = *this + x; }
    Rational& operator-=(const Rational& x) { return *this = *this - x; }
    Rational& operator*=(const Rational& x) { return *this = *this * x; }
    Rational& operator/=(const Rational& x) { return *this = *this / x; }

    friend bool operator==(const Rational& x, const Rational& y) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        return __int128(x.num_) * y.den_ <=> __int128(y.num_) * x.den_;
    }

    double to_double() const { return double(num_) / double(den_); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static Rational make(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const __int128 a = num < 0 ? -num : num;
        __int128 g = gcd128(a, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        Rational r;
        r.num_ = detail::checked_narrow(num, "Rational");
        r.den_ = detail::checked_narrow(den, "Rational");
        if (r.den_ == 0)
            throw std::invalid_argument("Rational: zero denominator");
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace pda
