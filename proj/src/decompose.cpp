#include "constaclass/decompose.hpp"

#include <stdexcept>
#include <string>

namespace constaclass {

namespace {

void check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("decomposition identity failed: " + what);
}

}  // namespace

Decomposition Decomposition::build(const FieldCtx& ctx, unsigned n, FieldElem delta, FieldElem alpha,
                                   std::uint64_t seed) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("n must be odd");
    if (delta.is_zero() || !ctx.contains(delta)) throw std::invalid_argument("delta must be a unit of GF(2^m)");
    if (alpha.is_zero() || !ctx.contains(alpha)) throw std::invalid_argument("alpha must be a unit of GF(2^m)");

    Decomposition dec(ctx);
    dec.n_ = n;
    dec.delta_ = delta;
    dec.alpha_ = alpha;
    dec.delta0_ = ctx.sqrt(delta);
    dec.alpha0_ = ctx.sqrt(ctx.inv(alpha));

    const Poly x2n_minus_delta = Poly::binomial(ctx, 2 * n, delta);
    dec.modulus_ = x2n_minus_delta * x2n_minus_delta;
    dec.v_square_ = x2n_minus_delta.scaled(ctx.inv(alpha));

    const Poly xn_minus_delta0 = Poly::binomial(ctx, n, dec.delta0_);
    for (auto& f : factor_xn_minus(ctx, n, dec.delta0_, seed)) {
        FactorData fd{f, static_cast<unsigned>(f.degree()), xn_minus_delta0 / f, Poly(ctx), Poly(ctx), Poly(ctx),
                      Poly(ctx)};
        const Poly cof4 = pow(fd.cofactor, 4);
        const Poly f4 = pow(f, 4);
        auto [g, s, t] = ext_gcd(cof4, f4);
        check(g.is_one(), "gcd(F_j^4, f_j^4) = 1");
        fd.bezout_g = std::move(s);
        fd.bezout_h = std::move(t);
        fd.epsilon = (fd.bezout_g * cof4) % dec.modulus_;
        fd.omega = fd.cofactor.scaled(dec.alpha0_) % f4;
        dec.factors_.push_back(std::move(fd));
    }
    dec.verify();
    return dec;
}

Poly Decomposition::local_modulus(std::size_t j) const { return pow(factor(j).f, 4); }

void Decomposition::verify() const {
    const auto& ctx = ctx_;
    check(ctx.square(delta0_) == delta_, "delta0^2 = delta");
    check(ctx.square(alpha0_) == ctx.inv(alpha_), "alpha0^2 = alpha^-1");

    unsigned total_degree = 0;
    Poly sum(ctx);
    Poly twisted_sum(ctx);
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        const auto& fd = factors_[j];
        total_degree += fd.degree;
        const Poly f4 = pow(fd.f, 4);
        check(((fd.bezout_g * pow(fd.cofactor, 4)) + (fd.bezout_h * f4)).is_one(), "Bezout identity");
        check((fd.epsilon * fd.epsilon) % modulus_ == fd.epsilon, "epsilon_j^2 = epsilon_j");
        for (std::size_t l = j + 1; l < factors_.size(); ++l)
            check(((fd.epsilon * factors_[l].epsilon) % modulus_).is_zero(), "epsilon_j epsilon_l = 0");
        sum += fd.epsilon;

        // omega_j unit mod f_j, and omega_j^2 f_j^2 = alpha^{-1}(x^{2n} - delta) in K_j.
        check(!(fd.omega % fd.f).is_zero(), "omega_j is a unit");
        const Poly f2 = fd.f * fd.f;
        const Poly w2f2 = fd.omega * fd.omega * f2;
        check(w2f2 % f4 == v_square_ % f4, "omega_j^2 f_j^2 = alpha^-1 (x^2n - delta) mod f_j^4");
        twisted_sum += fd.epsilon * w2f2;
    }
    check(total_degree == n_, "sum of factor degrees = n");
    check(sum % modulus_ == Poly::one(ctx), "sum of epsilon_j = 1");
    check(twisted_sum % modulus_ == v_square_ % modulus_, "sum epsilon_j omega_j^2 f_j^2 = alpha^-1 (x^2n - delta)");
}

TeichmullerSet::TeichmullerSet(FieldCtx ctx, unsigned d) : ctx_(ctx), d_(d) {
    if (d == 0) throw std::invalid_argument("Teichmuller set needs d >= 1");
    if (static_cast<std::uint64_t>(ctx.m()) * d >= 64) throw std::length_error("Teichmuller set too large to index");
    size_ = std::uint64_t{1} << (ctx.m() * d);
}

Poly TeichmullerSet::at(std::uint64_t index) const {
    std::vector<FieldElem> c(d_);
    const std::uint64_t mask = ctx_.order() - 1;
    for (unsigned i = 0; i < d_; ++i) c[i] = FieldElem{static_cast<std::uint32_t>((index >> (ctx_.m() * i)) & mask)};
    return Poly(ctx_, std::move(c));
}

}  // namespace constaclass
