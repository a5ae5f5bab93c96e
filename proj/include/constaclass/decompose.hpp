#pragma once

// CRT data of A = GF(2^m)[x]/<(x^{2n} - delta)^2> for odd n: the idempotents
// splitting A into the local rings K_j = GF(2^m)[x]/<f_j^4>, and the units
// omega_j with omega_j^2 f_j^2 = alpha^{-1}(x^{2n} - delta) in K_j.

#include <cstdint>
#include <iterator>
#include <vector>

#include "constaclass/factor.hpp"
#include "constaclass/poly.hpp"

namespace constaclass {

struct FactorData {
    Poly f;         // monic irreducible factor of x^n - delta0
    unsigned degree;
    Poly cofactor;  // F_j = (x^n - delta0) / f_j
    Poly bezout_g;  // bezout_g * F_j^4 + bezout_h * f_j^4 = 1
    Poly bezout_h;
    Poly epsilon;   // idempotent, reduced mod (x^{2n} - delta)^2
    Poly omega;     // alpha0 * F_j, reduced mod f_j^4
};

class Decomposition {
public:
    /// Builds and verifies every idempotent and unit identity; a decomposition
    /// that fails one is never returned (std::logic_error).
    static Decomposition build(const FieldCtx& ctx, unsigned n, FieldElem delta, FieldElem alpha,
                               std::uint64_t seed = kDefaultSeed);

    const FieldCtx& field() const noexcept { return ctx_; }
    unsigned n() const noexcept { return n_; }
    unsigned length() const noexcept { return 2 * n_; }
    FieldElem delta() const noexcept { return delta_; }
    FieldElem alpha() const noexcept { return alpha_; }
    FieldElem delta0() const noexcept { return delta0_; }
    FieldElem alpha0() const noexcept { return alpha0_; }
    FieldElem alpha_inv() const { return ctx_.inv(alpha_); }

    std::size_t size() const noexcept { return factors_.size(); }
    const std::vector<FactorData>& factors() const noexcept { return factors_; }
    const FactorData& factor(std::size_t j) const { return factors_.at(j); }

    /// (x^{2n} - delta)^2, the modulus of A.
    const Poly& modulus() const noexcept { return modulus_; }
    /// alpha^{-1}(x^{2n} - delta), the image of v^2.
    const Poly& v_square() const noexcept { return v_square_; }
    /// f_j^4
    Poly local_modulus(std::size_t j) const;

    /// Re-runs every construction-time identity; throws std::logic_error on failure.
    void verify() const;

private:
    Decomposition(FieldCtx ctx) : ctx_(ctx), modulus_(ctx), v_square_(ctx) {}

    FieldCtx ctx_;
    unsigned n_ = 0;
    FieldElem delta_, alpha_, delta0_, alpha0_;
    Poly modulus_;
    Poly v_square_;
    std::vector<FactorData> factors_;
};

/// All polynomials of degree < d over GF(2^m), in lexicographic coefficient
/// order (index t has digit i of t in base 2^m as the coefficient of x^i).
class TeichmullerSet {
public:
    TeichmullerSet(FieldCtx ctx, unsigned d);

    std::uint64_t size() const noexcept { return size_; }
    Poly at(std::uint64_t index) const;

    class iterator {
    public:
        using value_type = Poly;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const TeichmullerSet* set, std::uint64_t i) : set_(set), i_(i) {}
        Poly operator*() const { return set_->at(i_); }
        iterator& operator++() {
            ++i_;
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++i_;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

    private:
        const TeichmullerSet* set_ = nullptr;
        std::uint64_t i_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size_}; }

private:
    FieldCtx ctx_;
    unsigned d_;
    std::uint64_t size_;
};

inline TeichmullerSet teichmuller_set(const FieldCtx& ctx, unsigned d) { return {ctx, d}; }

}  // namespace constaclass
