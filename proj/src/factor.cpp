#include "constaclass/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

namespace constaclass {

std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("CONSTACLASS_SEED"); s != nullptr && *s != '\0') {
        try {
            return std::stoull(s, nullptr, 0);
        } catch (const std::exception&) {
        }
    }
    return kDefaultSeed;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const auto& ctx = f.ctx();
    const Poly x = Poly::x(ctx);
    Poly xp = x % f;
    for (int k = 1; 2 * k <= f.degree(); ++k) {
        xp = frobenius_pow_mod(xp, ctx.m(), f);  // x^(q^k)
        if (gcd(f, xp - x).degree() > 0) return false;
    }
    return true;
}

namespace {

Poly random_poly(const FieldCtx& ctx, int below_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> coeff(0, ctx.order() - 1);
    std::vector<FieldElem> c(static_cast<std::size_t>(below_degree));
    for (auto& e : c) e = FieldElem{coeff(rng)};
    return Poly(ctx, std::move(c));
}

// Absolute trace h + h^2 + ... + h^(2^(mk-1)) mod g.
Poly trace_map(const Poly& h, unsigned mk, const Poly& g) {
    Poly term = h % g;
    Poly acc = term;
    for (unsigned i = 1; i < mk; ++i) {
        term = (term * term) % g;
        acc += term;
    }
    return acc;
}

// g is a product of distinct irreducibles all of degree k.
void equal_degree_split(const Poly& g, unsigned k, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == static_cast<int>(k)) {
        out.push_back(g.monic());
        return;
    }
    const unsigned mk = g.ctx().m() * k;
    for (;;) {
        Poly h = random_poly(g.ctx(), g.degree(), rng);
        if (h.degree() < 1) continue;
        Poly d = gcd(g, trace_map(h, mk, g));
        if (d.degree() > 0 && d.degree() < g.degree()) {
            equal_degree_split(d, k, rng, out);
            equal_degree_split(g / d, k, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Poly> factor_xn_minus(const FieldCtx& ctx, unsigned n, FieldElem delta0, std::uint64_t seed) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("n must be a positive odd integer");
    if (delta0.is_zero() || !ctx.contains(delta0)) throw std::invalid_argument("delta0 must be a nonzero field element");

    const Poly target = Poly::binomial(ctx, n, delta0);
    if (gcd(target, target.derivative()).degree() != 0)
        throw std::logic_error("x^n - delta0 is not squarefree");

    std::mt19937_64 rng(seed);
    std::vector<Poly> factors;
    Poly rest = target;
    const Poly x = Poly::x(ctx);
    Poly xq = x;
    for (unsigned k = 1; rest.degree() >= 2 * static_cast<int>(k); ++k) {
        xq = frobenius_pow_mod(xq, ctx.m(), rest);
        Poly g = gcd(rest, xq - x);
        if (g.degree() > 0) {
            equal_degree_split(g, k, rng, factors);
            rest = rest / g;
            xq = xq % rest;
        }
    }
    if (rest.degree() > 0) factors.push_back(rest.monic());

    std::sort(factors.begin(), factors.end(), canonical_less);
    return factors;
}

}  // namespace constaclass
