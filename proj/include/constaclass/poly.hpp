#pragma once

// Dense univariate polynomials over GF(2^m).

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "constaclass/field.hpp"

namespace constaclass {

/// Coefficients ascending by degree, normalized: zero is the empty sequence,
/// otherwise the leading coefficient is nonzero.
class Poly {
public:
    explicit Poly(FieldCtx ctx) : ctx_(ctx) {}
    Poly(FieldCtx ctx, std::vector<FieldElem> coeffs);
    /// Coefficients from their integer encodings, ascending degree.
    Poly(FieldCtx ctx, std::initializer_list<std::uint32_t> coeffs);

    static Poly constant(FieldCtx ctx, FieldElem c);
    static Poly monomial(FieldCtx ctx, FieldElem c, std::size_t degree);
    static Poly x(FieldCtx ctx) { return monomial(ctx, ctx.one(), 1); }
    static Poly one(FieldCtx ctx) { return constant(ctx, ctx.one()); }
    /// x^n - c
    static Poly binomial(FieldCtx ctx, std::size_t n, FieldElem c);
    /// Builds from a bit mask of GF(2) coefficients (bit i -> x^i).
    static Poly from_gf2_mask(FieldCtx ctx, std::uint64_t mask);

    const FieldCtx& ctx() const noexcept { return ctx_; }
    std::span<const FieldElem> coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == ctx_.one(); }
    bool is_monic() const noexcept { return !is_zero() && coeffs_.back() == ctx_.one(); }
    FieldElem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FieldElem{}; }
    FieldElem lead() const noexcept { return is_zero() ? FieldElem{} : coeffs_.back(); }

    void set_coeff(std::size_t i, FieldElem c);

    Poly monic() const;
    Poly scaled(FieldElem c) const;
    /// Multiplication by x^k.
    Poly shifted(std::size_t k) const;
    /// Coefficients of degree < k.
    Poly truncated(std::size_t k) const;
    Poly derivative() const;
    FieldElem eval(FieldElem at) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o) { return *this += o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a += b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
    }

    /// Ascending integer encodings of the coefficients.
    std::vector<std::uint32_t> to_ints() const;
    /// Text form `c0+c1*x+...`, unit coefficients elided: `1+x^4+x^8`, `3*x^2`, `0`.
    std::string to_string() const;

private:
    void normalize();

    FieldCtx ctx_;
    std::vector<FieldElem> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error when b is zero.
DivMod divmod(const Poly& a, const Poly& b);

Poly pow(const Poly& base, std::uint64_t e);
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& modulus);
/// base^(2^k) mod modulus, via k squarings.
Poly frobenius_pow_mod(const Poly& base, std::uint64_t k, const Poly& modulus);

/// Monic gcd; gcd(0, 0) is zero.
Poly gcd(const Poly& a, const Poly& b);

struct ExtGcd {
    Poly g;  // monic gcd
    Poly s;  // s*a + t*b = g
    Poly t;
};

/// Throws std::invalid_argument when both inputs are zero.
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);

/// Parses the text form produced by Poly::to_string. Accepts `c`, `x`, `x^e`,
/// `c*x`, `c*x^e` terms joined by `+` (whitespace ignored); repeated powers add.
Poly parse_poly(FieldCtx ctx, std::string_view text);

/// Total order used for deterministic factor lists: degree first, then the
/// coefficients compared from the leading term down.
bool canonical_less(const Poly& a, const Poly& b) noexcept;

}  // namespace constaclass
