#include "constaclass/code_builder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace constaclass {

RElem mul(const FieldCtx& ctx, const RElem& x, const RElem& y) noexcept {
    RElem r;
    for (int i = 0; i < 4; ++i) {
        if (x.a[i].bits == 0) continue;
        for (int j = 0; i + j < 4; ++j) r.a[i + j] += ctx.mul(x.a[i], y.a[j]);
    }
    return r;
}

bool CodeWord::is_zero() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](const RElem& e) { return e.is_zero(); });
}

std::size_t CodeWord::weight() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const RElem& e) { return !e.is_zero(); }));
}

CodeRing::CodeRing(FieldCtx ctx, unsigned n, FieldElem delta, FieldElem alpha)
    : ctx_(ctx), len_(2 * static_cast<std::size_t>(n)) {
    if (n == 0) throw std::invalid_argument("code length must be positive");
    gamma_.a[0] = delta;
    gamma_.a[2] = alpha;
}

CodeRing::CodeRing(const Decomposition& dec) : CodeRing(dec.field(), dec.n(), dec.delta(), dec.alpha()) {}

namespace {

void check_len(const CodeWord& w, std::size_t len) {
    if (w.size() != len) throw std::invalid_argument("codeword length mismatch");
}

}  // namespace

CodeWord CodeRing::add(const CodeWord& a, const CodeWord& b) const {
    check_len(a, len_);
    check_len(b, len_);
    CodeWord r = a;
    for (std::size_t i = 0; i < len_; ++i) r.entries[i] = r.entries[i] + b.entries[i];
    return r;
}

CodeWord CodeRing::mul(const CodeWord& a, const CodeWord& b) const {
    check_len(a, len_);
    check_len(b, len_);
    std::vector<RElem> full(2 * len_);
    for (std::size_t i = 0; i < len_; ++i) {
        if (a.entries[i].is_zero()) continue;
        for (std::size_t j = 0; j < len_; ++j)
            full[i + j] = full[i + j] + constaclass::mul(ctx_, a.entries[i], b.entries[j]);
    }
    CodeWord r = zero();
    for (std::size_t t = 0; t < len_; ++t)
        r.entries[t] = full[t] + constaclass::mul(ctx_, gamma_, full[t + len_]);
    return r;
}

CodeWord CodeRing::scale(const RElem& c, const CodeWord& a) const {
    check_len(a, len_);
    CodeWord r = a;
    for (auto& e : r.entries) e = constaclass::mul(ctx_, c, e);
    return r;
}

CodeWord CodeRing::scale(FieldElem c, const CodeWord& a) const {
    RElem s;
    s.a[0] = c;
    return scale(s, a);
}

CodeWord CodeRing::shift(const CodeWord& a) const {
    check_len(a, len_);
    CodeWord r = zero();
    r.entries[0] = constaclass::mul(ctx_, gamma_, a.entries[len_ - 1]);
    std::copy(a.entries.begin(), a.entries.end() - 1, r.entries.begin() + 1);
    return r;
}

CodeWord CodeRing::shift(const CodeWord& a, std::size_t k) const {
    CodeWord r = a;
    for (std::size_t i = 0; i < k; ++i) r = shift(r);
    return r;
}

CodeWord CodeRing::u_times(const CodeWord& a) const {
    check_len(a, len_);
    CodeWord r = zero();
    for (std::size_t i = 0; i < len_; ++i)
        for (int k = 3; k > 0; --k) r.entries[i].a[k] = a.entries[i].a[k - 1];
    return r;
}

CodeWord CodeRing::from_layers(const std::array<Poly, 4>& layers) const {
    CodeWord w = zero();
    for (int k = 0; k < 4; ++k) {
        if (layers[k].degree() >= static_cast<int>(len_))
            throw std::invalid_argument("layer polynomial degree must be < 2n");
        for (std::size_t i = 0; i < len_; ++i) w.entries[i].a[k] = layers[k].coeff(i);
    }
    return w;
}

std::array<Poly, 4> CodeRing::to_layers(const CodeWord& w) const {
    check_len(w, len_);
    std::array<Poly, 4> out{Poly(ctx_), Poly(ctx_), Poly(ctx_), Poly(ctx_)};
    for (int k = 0; k < 4; ++k) {
        std::vector<FieldElem> c(len_);
        for (std::size_t i = 0; i < len_; ++i) c[i] = w.entries[i].a[k];
        out[k] = Poly(ctx_, std::move(c));
    }
    return out;
}

AvElem av_add(const AvElem& a, const AvElem& b) { return {a.xi0 + b.xi0, a.xi1 + b.xi1}; }

AvElem av_mul(const Decomposition& dec, const AvElem& a, const AvElem& b) {
    const Poly& mod = dec.modulus();
    const Poly prod11 = (a.xi1 * b.xi1) % mod;
    return {(a.xi0 * b.xi0 + dec.v_square() * prod11) % mod, (a.xi0 * b.xi1 + a.xi1 * b.xi0) % mod};
}

CodeWord psi(const Decomposition& dec, const Poly& xi0, const Poly& xi1) {
    const CodeRing ring(dec);
    auto [a2, a0] = divmod(xi0 % dec.modulus(), dec.v_square());
    auto [a3, a1] = divmod(xi1 % dec.modulus(), dec.v_square());
    return ring.from_layers({a0, a1, a2, a3});
}

AvElem psi_inverse(const Decomposition& dec, const CodeWord& w) {
    const CodeRing ring(dec);
    const auto l = ring.to_layers(w);
    return {l[0] + dec.v_square() * l[2], l[1] + dec.v_square() * l[3]};
}

BridgeTable bridge_table(const Decomposition& dec) {
    const auto& ctx = dec.field();
    const Poly& mod = dec.modulus();
    const Poly& vsq = dec.v_square();
    BridgeTable table;
    for (std::size_t j = 0; j < dec.size(); ++j) {
        const auto& fd = dec.factor(j);
        const Poly zero(ctx);
        const std::array<Poly, 4> blank{zero, zero, zero, zero};
        FactorBridge fb{std::vector(fd.degree, blank), std::vector(fd.degree, blank), blank, blank};
        Poly ef = fd.epsilon % mod;  // eps_j f_j^l
        for (unsigned l = 0; l < 4; ++l) {
            for (unsigned i = 0; i < fd.degree; ++i) {
                auto [h, g] = divmod(ef.shifted(i) % mod, vsq);
                fb.g[i][l] = std::move(g);
                fb.h[i][l] = std::move(h);
            }
            auto [q, p] = divmod((ef * fd.omega) % mod, vsq);
            fb.p[l] = std::move(p);
            fb.q[l] = std::move(q);
            ef = (ef * fd.f) % mod;
        }
        for (unsigned i = 0; i < fd.degree; ++i)
            if (!fb.g[i][2].is_zero() || !fb.g[i][3].is_zero())
                throw std::logic_error("bridge identity g[i][2] = g[i][3] = 0 fails for factor " +
                                       std::to_string(j + 1));
        if (!fb.p[2].is_zero() || !fb.p[3].is_zero())
            throw std::logic_error("bridge identity p[2] = p[3] = 0 fails for factor " + std::to_string(j + 1));
        table.factors.push_back(std::move(fb));
    }
    return table;
}

std::vector<BasisSeed> component_seeds(const IdealDescriptor& desc, const BridgeTable& table,
                                       const Decomposition& dec) {
    validate(desc, dec);
    if (table.factors.size() != dec.size()) throw std::invalid_argument("bridge table does not match decomposition");
    const auto& b = table.factors[desc.factor];
    const Poly zero(dec.field());
    // sum_i c_i h[i][l] and sum_i c_i g[i][l]
    auto sh = [&](const Poly& c, unsigned l) {
        Poly acc = zero;
        for (std::size_t i = 0; i < b.h.size(); ++i)
            if (c.coeff(i).bits != 0) acc += b.h[i][l].scaled(c.coeff(i));
        return acc;
    };
    auto sg = [&](const Poly& c, unsigned l) {
        Poly acc = zero;
        for (std::size_t i = 0; i < b.g.size(); ++i)
            if (c.coeff(i).bits != 0) acc += b.g[i][l].scaled(c.coeff(i));
        return acc;
    };
    const auto& g = b.g[0];
    const auto& h = b.h[0];
    // Psi(eps f^l) and Psi(v eps f^l)
    auto xi = [&](unsigned l) { return BasisSeed{false, l, {g[l], zero, h[l], zero}}; };
    auto eta = [&](unsigned l) { return BasisSeed{true, l, {zero, g[l], zero, h[l]}}; };

    const auto& prm = desc.params;
    std::vector<BasisSeed> s;
    switch (desc.family) {
        case Family::I:
            s = {{false, 0, {b.p[1], g[0], b.q[1] + sh(prm[0], 2) + sh(prm[1], 3), h[0]}},
                 {false, 1, {zero, g[1], b.q[2] + sh(prm[0], 3), h[1]}},
                 {false, 2, {zero, zero, b.q[3], h[2]}},
                 {false, 3, {zero, zero, zero, h[3]}}};
            break;
        case Family::II_1:
            s = {{false, 3, {zero, zero, zero, h[3]}}};
            break;
        case Family::II_2:
            s = {{false, 2, {zero, zero, sh(prm[0], 3), h[2]}}, {false, 3, {zero, zero, zero, h[3]}}};
            break;
        case Family::II_3:
            s = {{false, 1, {zero, g[1], b.q[2] + sh(prm[0], 3), h[1]}},
                 {false, 2, {zero, zero, b.q[3], h[2]}},
                 {false, 3, {zero, zero, zero, h[3]}}};
            break;
        case Family::III:
            for (unsigned l = desc.k; l < 4; ++l) s.push_back(xi(l));
            for (unsigned l = desc.k; l < 4; ++l) s.push_back(eta(l));
            break;
        case Family::IV_1:
            for (unsigned l = 1; l < 4; ++l) s.push_back(xi(l));
            for (unsigned l = 0; l < 4; ++l) s.push_back(eta(l));
            break;
        case Family::IV_2:
            s = {{false, 2, {zero, zero, h[2], zero}},
                 {false, 3, {zero, zero, h[3], zero}},
                 {true, 0, {sg(prm[0], 1), g[0], sh(prm[0], 1), h[0]}},
                 {true, 1, {zero, g[1], sh(prm[0], 2), h[1]}},
                 {true, 2, {zero, zero, sh(prm[0], 3), h[2]}},
                 {true, 3, {zero, zero, zero, h[3]}}};
            break;
        case Family::IV_3:
            s = {{false, 3, {zero, zero, h[3], zero}},
                 {true, 0, {b.p[1], g[0], b.q[1] + sh(prm[0], 2), h[0]}},
                 {true, 1, {zero, g[1], b.q[2] + sh(prm[0], 3), h[1]}},
                 {true, 2, {zero, zero, b.q[3], h[2]}},
                 {true, 3, {zero, zero, zero, h[3]}}};
            break;
        case Family::VI:
            for (unsigned l = desc.k + 1; l < 4; ++l) s.push_back(xi(l));
            for (unsigned l = desc.k; l < 4; ++l) s.push_back(eta(l));
            break;
        case Family::V:
            s = {{false, 3, {zero, zero, h[3], zero}},
                 {true, 1, {zero, g[1], sh(prm[0], 2), h[1]}},
                 {true, 2, {zero, zero, sh(prm[0], 3), h[2]}},
                 {true, 3, {zero, zero, zero, h[3]}}};
            break;
    }
    return s;
}

std::vector<CodeWord> component_basis(const IdealDescriptor& desc, const BridgeTable& table,
                                      const Decomposition& dec) {
    const CodeRing ring(dec);
    const auto d = dec.factor(desc.factor).degree;
    std::vector<CodeWord> out;
    for (const auto& seed : component_seeds(desc, table, dec)) {
        CodeWord w = ring.from_layers(seed.layers);
        for (unsigned i = 0; i < d; ++i) {
            out.push_back(w);
            w = ring.shift(w);
        }
    }
    return out;
}

ConstaCode assemble(const Decomposition& dec, const BridgeTable& table, std::vector<IdealDescriptor> descs) {
    if (descs.size() != dec.size())
        throw std::invalid_argument("expected " + std::to_string(dec.size()) + " descriptors, got " +
                                    std::to_string(descs.size()));
    ConstaCode code;
    for (std::size_t j = 0; j < descs.size(); ++j) {
        if (descs[j].factor != j)
            throw std::invalid_argument("descriptor " + std::to_string(j + 1) + " names factor " +
                                        std::to_string(descs[j].factor + 1));
        auto part = component_basis(descs[j], table, dec);
        code.log2_size += ideal_log2_size(descs[j], dec);
        code.basis.insert(code.basis.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    code.descriptors = std::move(descs);
    return code;
}

BigInt total_count(const Decomposition& dec, Scheme scheme) {
    BigInt total = 1;
    for (const auto& fd : dec.factors()) total *= count_ideals(dec.field().m(), fd.degree, scheme);
    return total;
}

}  // namespace constaclass
