#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tristar {

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("rational: multiplication overflow");
    return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("rational: addition overflow");
    return out;
}

} // namespace detail

/// Exact rational number over checked 64-bit integers. Always normalized:
/// denominator positive, gcd(num, den) == 1. Every arithmetic operation
/// throws OverflowError instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {} // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den)
    {
        if (den == 0)
            throw std::domain_error("rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// Smallest integer >= *this.
    std::int64_t ceil() const
    {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0)
            ++q;
        return q;
    }

    std::int64_t floor() const
    {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0)
            --q;
        return q;
    }

    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const
    {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rational operator-() const { return Rational(detail::checked_mul(num_, -1), den_); }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        std::int64_t g = std::gcd(a.den_, b.den_);
        std::int64_t lhs = detail::checked_mul(a.num_, b.den_ / g);
        std::int64_t rhs = detail::checked_mul(b.num_, a.den_ / g);
        return {detail::checked_add(lhs, rhs), detail::checked_mul(a.den_ / g, b.den_)};
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        // cross-reduce first to keep intermediates small
        std::int64_t g1 = std::gcd(a.num_, b.den_);
        std::int64_t g2 = std::gcd(b.num_, a.den_);
        if (g1 == 0)
            g1 = 1;
        if (g2 == 0)
            g2 = 1;
        return {detail::checked_mul(a.num_ / g1, b.num_ / g2), detail::checked_mul(a.den_ / g2, b.den_ / g1)};
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0)
            throw std::domain_error("rational: division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        // denominators are positive, so cross-multiplication preserves order
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize()
    {
        if (den_ < 0) {
            num_ = detail::checked_mul(num_, -1);
            den_ = detail::checked_mul(den_, -1);
        }
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace tristar
