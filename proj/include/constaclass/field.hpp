#pragma once

// Arithmetic in GF(2^m), 1 <= m <= 16, polynomial basis.
//
// An element is stored as an m-bit integer: bit i is the coefficient of x^i.
// A FieldCtx is a small immutable value (degree + modulus); elements do not
// carry their context, so every multiplicative operation goes through it.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace constaclass {

struct FieldElem {
    std::uint32_t bits = 0;

    constexpr bool is_zero() const noexcept { return bits == 0; }

    friend constexpr bool operator==(FieldElem, FieldElem) = default;
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

    // Characteristic 2: addition and subtraction are both XOR.
    friend constexpr FieldElem operator+(FieldElem a, FieldElem b) noexcept { return {a.bits ^ b.bits}; }
    friend constexpr FieldElem operator-(FieldElem a, FieldElem b) noexcept { return {a.bits ^ b.bits}; }
    constexpr FieldElem& operator+=(FieldElem o) noexcept {
        bits ^= o.bits;
        return *this;
    }
};

/// Thrown when a proposed modulus has a nontrivial factor over GF(2).
class ReducibleModulus : public std::invalid_argument {
public:
    ReducibleModulus(std::uint32_t modulus, unsigned factor_degree);
    unsigned factor_degree() const noexcept { return factor_degree_; }

private:
    unsigned factor_degree_;
};

class FieldCtx {
public:
    static constexpr unsigned kMaxDegree = 16;

    /// Validates 1 <= m <= 16, deg(modulus) == m and irreducibility over GF(2).
    FieldCtx(unsigned m, std::uint32_t modulus);

    /// GF(2^m) with the lexicographically first irreducible modulus of degree m.
    static FieldCtx standard(unsigned m);
    static std::uint32_t default_modulus(unsigned m);

    unsigned m() const noexcept { return m_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t order() const noexcept { return std::uint32_t{1} << m_; }

    FieldElem zero() const noexcept { return {0}; }
    FieldElem one() const noexcept { return {1}; }
    /// Element from its integer encoding; throws if value >= 2^m.
    FieldElem elem(std::uint32_t value) const;
    bool contains(FieldElem a) const noexcept { return a.bits < order(); }

    FieldElem add(FieldElem a, FieldElem b) const noexcept { return a + b; }
    FieldElem mul(FieldElem a, FieldElem b) const noexcept;
    FieldElem square(FieldElem a) const noexcept { return mul(a, a); }
    FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
    /// Throws std::domain_error on zero.
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    /// The unique b with b^2 = a, computed as a^(2^(m-1)).
    FieldElem sqrt(FieldElem a) const noexcept;

    friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

    std::string describe() const;

private:
    unsigned m_;
    std::uint32_t modulus_;
};

namespace gf2 {

// Dense GF(2)[x] polynomials packed in a machine word (degree <= 63).
int degree(std::uint64_t p) noexcept;
std::uint64_t mod(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) noexcept;

/// 0 if f is irreducible, otherwise the degree of the smallest irreducible factor.
unsigned smallest_factor_degree(std::uint64_t f) noexcept;

}  // namespace gf2

}  // namespace constaclass
