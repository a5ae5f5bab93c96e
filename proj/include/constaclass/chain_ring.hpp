#pragma once

// K = GF(2^m)[x]/<f^4> for a monic irreducible f of degree d: a finite chain
// ring whose maximal ideal is generated by pi = f, with nilpotency index 4 and
// residue field of size 2^(md). Elements are Polys of degree < 4d.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "constaclass/poly.hpp"

namespace constaclass {

class ChainRing {
public:
    static constexpr unsigned kIndex = 4;

    /// f must be monic irreducible.
    explicit ChainRing(Poly f);

    const FieldCtx& field() const noexcept { return pi_.ctx(); }
    const Poly& pi() const noexcept { return pi_; }
    const Poly& modulus() const noexcept { return modulus_; }
    unsigned residue_degree() const noexcept { return d_; }
    /// log2 |T| = m * d
    unsigned digit_bits() const noexcept { return field().m() * d_; }
    /// |T|; requires m*d < 64.
    std::uint64_t residue_size() const;

    Poly zero() const { return Poly(field()); }
    Poly one() const { return Poly::one(field()); }
    Poly reduce(const Poly& a) const { return a % modulus_; }
    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % modulus_; }
    const Poly& pi_pow(unsigned k) const;

    /// Unique f-adic digits b_0..b_3 (each of degree < d) with a = sum f^k b_k.
    std::array<Poly, kIndex> expand(const Poly& a) const;
    /// sum f^k digits[k]
    Poly compose(std::span<const Poly> digits) const;

    /// pi-degree: least k with nonzero digit, 4 for zero.
    unsigned valuation(const Poly& a) const;
    bool is_unit(const Poly& a) const { return valuation(a) == 0; }
    /// Throws std::domain_error for non-units.
    Poly inverse(const Poly& unit) const;
    /// a mod pi^k, i.e. only the first k digits kept.
    Poly truncate(const Poly& a, unsigned k) const;
    /// s with a = pi^k s, digits shifted down; requires valuation(a) >= k.
    Poly divide_by_pi_pow(const Poly& a, unsigned k) const;

    /// Factors a = pi^v e with e a unit (v = valuation(a) < 4).
    struct UnitPart {
        unsigned valuation;
        Poly unit;
    };
    UnitPart split(const Poly& a) const;

private:
    Poly pi_;
    unsigned d_;
    Poly modulus_;
    std::vector<Poly> powers_;  // pi^0 .. pi^4 (pi^4 stored as zero)
};

/// A row (first, second) of K^2. For K_j + vK_j the pair means first + v*second.
struct ModuleRow {
    Poly first;
    Poly second;
};

/// A K-submodule of K^2 held in a canonical triangular form:
///   (pi^a, b mod pi^w) and (0, pi^w)
/// where either row is absent when its pivot exponent is 4. Canonical forms
/// are unique, so equality of submodules is equality of forms.
class Submodule2 {
public:
    static Submodule2 generated_by(const ChainRing& ring, std::span<const ModuleRow> rows);

    bool contains(const ModuleRow& row) const;
    /// Exponent of the first-column pivot (4 when absent).
    unsigned lead_exponent() const noexcept { return lead_; }
    /// Exponent of the second-column pivot (4 when absent).
    unsigned tail_exponent() const noexcept { return tail_; }
    const Poly& lead_offset() const noexcept { return offset_; }

    /// Standard-form profile (k0, k1, k2, k3): number of rows whose pivot is pi^i.
    std::array<unsigned, 4> profile() const;
    /// log_|T| |S| = 4k0 + 3k1 + 2k2 + k3.
    unsigned size_exponent() const;
    /// Canonical generator rows (0, 1 or 2 of them).
    std::vector<ModuleRow> rows() const;

    friend bool operator==(const Submodule2& a, const Submodule2& b) {
        return a.lead_ == b.lead_ && a.tail_ == b.tail_ && a.offset_ == b.offset_;
    }

private:
    Submodule2(const ChainRing& ring) : ring_(&ring), offset_(ring.zero()) {}

    const ChainRing* ring_;
    unsigned lead_ = ChainRing::kIndex;
    unsigned tail_ = ChainRing::kIndex;
    Poly offset_;  // second entry of the lead row, reduced mod pi^tail
};

}  // namespace constaclass
