#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "mcolor/error.hpp"

namespace mcolor {

/// Small exact rational used for guarantee thresholds. Comparisons go through
/// 128-bit cross products, so any num/den pair of up to ~62 bits is exact.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit from integers is intended
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        require(d != 0, ErrorKind::InvalidParams, "zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const auto g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    /// Exact value of a double (every finite double is a dyadic rational).
    /// Limited to magnitudes and precisions that fit the 64-bit fields.
    static Rational from_double(double x) {
        require(std::isfinite(x), ErrorKind::InvalidParams, "non-finite value");
        int exp = 0;
        const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
        auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
        int e = exp - 53;
        while (e < 0 && (m % 2) == 0 && m != 0) {
            m /= 2;
            ++e;
        }
        if (m == 0) return Rational(0);
        if (e >= 0) {
            require(e < 10, ErrorKind::InvalidParams, "value too large for exact rational");
            return Rational(m << e);
        }
        require(e >= -61, ErrorKind::InvalidParams, "value too small for exact rational");
        return Rational(m, std::int64_t{1} << (-e));
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 lhs = static_cast<__int128>(a.num) * b.den;
        const __int128 rhs = static_cast<__int128>(b.num) * a.den;
        return lhs <=> rhs;
    }
    friend bool operator==(const Rational& a, const Rational& b) { return (a <=> b) == 0; }

    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

/// True iff count * (degree + 1) >= (1 - eps) * palette, i.e. a node of this
/// degree holding `count` colors meets the (1-eps)/(degree+1) fraction. Exact.
inline bool meets_fraction(std::uint64_t count, std::size_t degree, std::uint64_t palette, const Rational& eps) {
    // count*(deg+1)*den >= (den - num) * palette
    const __int128 lhs = static_cast<__int128>(count) * static_cast<__int128>(degree + 1) * eps.den;
    const __int128 rhs = static_cast<__int128>(eps.den - eps.num) * static_cast<__int128>(palette);
    return lhs >= rhs;
}

/// Smallest integer count satisfying meets_fraction.
inline std::uint64_t required_count(std::size_t degree, std::uint64_t palette, const Rational& eps) {
    const __int128 rhs = static_cast<__int128>(eps.den - eps.num) * static_cast<__int128>(palette);
    if (rhs <= 0) return 0;
    const __int128 per = static_cast<__int128>(degree + 1) * eps.den;
    return static_cast<std::uint64_t>((rhs + per - 1) / per);
}

}  // namespace mcolor
