#pragma once

// Codes over R = GF(2^m)[u]/<u^4> of length 2n: the ring R[x]/<x^{2n} - gamma>
// with gamma = delta + alpha u^2, the isomorphism Psi from A + vA, the bridge
// polynomials that carry x^i eps_j f_j^l across it, and explicit bases of the
// code attached to each ideal descriptor.

#include <array>
#include <vector>

#include "constaclass/decompose.hpp"
#include "constaclass/ideal_enum.hpp"

namespace constaclass {

/// a[0] + u a[1] + u^2 a[2] + u^3 a[3].
struct RElem {
    std::array<FieldElem, 4> a{};

    bool is_zero() const noexcept { return a[0].bits == 0 && a[1].bits == 0 && a[2].bits == 0 && a[3].bits == 0; }
    bool is_unit() const noexcept { return a[0].bits != 0; }
    friend bool operator==(const RElem&, const RElem&) = default;
    friend RElem operator+(RElem x, const RElem& y) noexcept {
        for (int k = 0; k < 4; ++k) x.a[k] += y.a[k];
        return x;
    }
};

RElem mul(const FieldCtx& ctx, const RElem& x, const RElem& y) noexcept;

struct CodeWord {
    std::vector<RElem> entries;

    std::size_t size() const noexcept { return entries.size(); }
    bool is_zero() const noexcept;
    /// Number of nonzero entries.
    std::size_t weight() const noexcept;
    friend bool operator==(const CodeWord&, const CodeWord&) = default;
};

/// R[x]/<x^{2n} - (delta + alpha u^2)>.
class CodeRing {
public:
    CodeRing(FieldCtx ctx, unsigned n, FieldElem delta, FieldElem alpha);
    explicit CodeRing(const Decomposition& dec);

    const FieldCtx& field() const noexcept { return ctx_; }
    std::size_t length() const noexcept { return len_; }
    const RElem& gamma() const noexcept { return gamma_; }

    CodeWord zero() const { return {std::vector<RElem>(len_)}; }
    CodeWord add(const CodeWord& a, const CodeWord& b) const;
    CodeWord mul(const CodeWord& a, const CodeWord& b) const;
    CodeWord scale(const RElem& c, const CodeWord& a) const;
    CodeWord scale(FieldElem c, const CodeWord& a) const;
    /// x * a: (gamma c_{N-1}, c_0, ..., c_{N-2}).
    CodeWord shift(const CodeWord& a) const;
    CodeWord shift(const CodeWord& a, std::size_t k) const;
    CodeWord u_times(const CodeWord& a) const;

    /// The word whose layer k is the polynomial layers[k] (degree < 2n).
    CodeWord from_layers(const std::array<Poly, 4>& layers) const;
    std::array<Poly, 4> to_layers(const CodeWord& w) const;

private:
    FieldCtx ctx_;
    std::size_t len_;
    RElem gamma_;
};

/// xi0 + v xi1 in A + vA, each part reduced mod (x^{2n} - delta)^2.
struct AvElem {
    Poly xi0;
    Poly xi1;
};

AvElem av_add(const AvElem& a, const AvElem& b);
/// v^2 = alpha^{-1}(x^{2n} - delta).
AvElem av_mul(const Decomposition& dec, const AvElem& a, const AvElem& b);

CodeWord psi(const Decomposition& dec, const Poly& xi0, const Poly& xi1);
inline CodeWord psi(const Decomposition& dec, const AvElem& e) { return psi(dec, e.xi0, e.xi1); }
AvElem psi_inverse(const Decomposition& dec, const CodeWord& w);

struct FactorBridge {
    std::vector<std::array<Poly, 4>> g;  // g[i][l], 0 <= i < d_j, 0 <= l <= 3
    std::vector<std::array<Poly, 4>> h;
    std::array<Poly, 4> p;  // p[l], q[l]; index 0 holds eps_j omega_j
    std::array<Poly, 4> q;
};

struct BridgeTable {
    std::vector<FactorBridge> factors;
};

/// Throws std::logic_error if a vanishing identity (g[i][2], g[i][3], p[2], p[3]) fails.
BridgeTable bridge_table(const Decomposition& dec);

/// Basis words of the component code Psi(eps_j C_j) before the x^i sweep,
/// each as four layer polynomials, tagged by (eta?, k).
struct BasisSeed {
    bool eta;
    unsigned k;
    std::array<Poly, 4> layers;
};
std::vector<BasisSeed> component_seeds(const IdealDescriptor& desc, const BridgeTable& table,
                                       const Decomposition& dec);

/// The GF(2^m)-basis {x^i seed}: xi seeds before eta seeds, ascending k, ascending i.
std::vector<CodeWord> component_basis(const IdealDescriptor& desc, const BridgeTable& table,
                                      const Decomposition& dec);

struct ConstaCode {
    std::vector<IdealDescriptor> descriptors;
    std::vector<CodeWord> basis;
    unsigned log2_size = 0;
};

/// One descriptor per factor, in factor order.
ConstaCode assemble(const Decomposition& dec, const BridgeTable& table, std::vector<IdealDescriptor> descs);

/// Product of the per-factor ideal counts; the stated scheme multiplies count_formula.
BigInt total_count(const Decomposition& dec, Scheme scheme = Scheme::Stated);

}  // namespace constaclass
