#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcolor/error.hpp"

namespace mcolor {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for all
/// 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (const auto p : bases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (const auto a : bases) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Smallest prime >= m.
inline std::uint64_t next_prime(std::uint64_t m) {
    require(m >= 2, ErrorKind::InvalidParams, "next_prime needs m >= 2");
    std::uint64_t c = m;
    while (!is_prime(c)) {
        require(c != ~std::uint64_t{0}, ErrorKind::InvalidParams, "no 64-bit prime above m");
        ++c;
    }
    return c;
}

/// GF(q) for prime q. Elements are plain integers in [0, q).
class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t q) : q_(q) {
        require(is_prime(q), ErrorKind::InvalidParams, "field order " + std::to_string(q) + " is not prime");
    }

    std::uint64_t order() const { return q_; }

    bool contains(Element a) const { return a < q_; }

    Element add(Element a, Element b) const {
        const Element s = a + b;
        return (s >= q_ || s < a) ? s - q_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + (q_ - b); }
    Element neg(Element a) const { return a == 0 ? 0 : q_ - a; }
    Element mul(Element a, Element b) const { return detail::mulmod(a, b, q_); }
    Element pow(Element a, std::uint64_t e) const { return detail::powmod(a, e, q_); }

    Element inv(Element a) const {
        require(a % q_ != 0, ErrorKind::InvalidElement, "zero has no inverse");
        return pow(a, q_ - 2);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t q_;
};

/// A polynomial with an explicit degree bound d: exactly d+1 coefficients,
/// constant term first, trailing zeros allowed.
class Poly {
public:
    Poly(PrimeField field, std::vector<PrimeField::Element> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
        require(!coeffs_.empty(), ErrorKind::InvalidParams, "polynomial needs at least one coefficient");
        for (const auto c : coeffs_) {
            require(field_.contains(c), ErrorKind::InvalidElement, "coefficient outside the field");
        }
    }

    const PrimeField& field() const { return field_; }
    std::size_t degree_bound() const { return coeffs_.size() - 1; }
    const std::vector<PrimeField::Element>& coeffs() const { return coeffs_; }

    /// Horner evaluation.
    PrimeField::Element operator()(PrimeField::Element z) const {
        require(field_.contains(z), ErrorKind::InvalidElement,
                "evaluation point " + std::to_string(z) + " outside GF(" + std::to_string(field_.order()) + ")");
        PrimeField::Element acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, z), *it);
        return acc;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    PrimeField field_;
    std::vector<PrimeField::Element> coeffs_;
};

inline PrimeField::Element poly_eval(const Poly& p, PrimeField::Element z) { return p(z); }

/// q^(d+1), saturating at 2^64-1.
inline std::uint64_t poly_count(std::uint64_t q, std::size_t d) {
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i <= d; ++i) {
        total *= q;
        if (total > ~std::uint64_t{0}) return ~std::uint64_t{0};
    }
    return static_cast<std::uint64_t>(total);
}

/// The injection value -> polynomial with coefficients equal to the base-q
/// digits of value (least significant first).
inline Poly encode_poly(std::uint64_t value, const PrimeField& field, std::size_t d) {
    const std::uint64_t q = field.order();
    require(value < poly_count(q, d) || poly_count(q, d) == ~std::uint64_t{0}, ErrorKind::InvalidParams,
            "value " + std::to_string(value) + " does not fit in " + std::to_string(d + 1) + " base-" +
                std::to_string(q) + " digits");
    std::vector<PrimeField::Element> coeffs(d + 1);
    for (auto& c : coeffs) {
        c = value % q;
        value /= q;
    }
    return Poly(field, std::move(coeffs));
}

inline std::uint64_t decode_poly(const Poly& p) {
    std::uint64_t value = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * p.field().order() + *it;
    return value;
}

/// Evaluates encode_poly(value, GF(q), d) at z without materializing the
/// polynomial. Hot path of the algebraic colorings.
inline std::uint64_t eval_encoded(std::uint64_t value, std::uint64_t q, std::size_t d, std::uint64_t z) {
    std::uint64_t acc = 0;
    std::uint64_t zpow = 1;
    for (std::size_t i = 0; i <= d; ++i) {
        acc = (acc + detail::mulmod(value % q, zpow, q)) % q;
        value /= q;
        zpow = detail::mulmod(zpow, z, q);
    }
    return acc;
}

}  // namespace mcolor
