#include <random>

#include "constaclass/chain_ring.hpp"
#include "doctest.h"

using namespace constaclass;

TEST_CASE("chain ring: digit expansion round trip and valuation") {
    std::mt19937 rng(3);
    const auto ctx = FieldCtx::standard(2);
    const ChainRing k(parse_poly(ctx, "2+x+x^2"));
    CHECK(k.digit_bits() == 4);
    CHECK(k.residue_size() == 16);
    std::uniform_int_distribution<std::uint32_t> c(0, 3);
    for (int t = 0; t < 200; ++t) {
        std::vector<FieldElem> v(8);
        for (auto& e : v) e = FieldElem{c(rng)};
        const Poly a(ctx, v);
        const auto digits = k.expand(a);
        for (const auto& dg : digits) CHECK(dg.degree() < 2);
        CHECK(k.compose(digits) == a);
        const auto val = k.valuation(a);
        if (val < 4) {
            const auto [v2, unit] = k.split(a);
            CHECK(v2 == val);
            CHECK(k.is_unit(unit));
            CHECK(k.mul(k.pi_pow(val), unit) == a);
            CHECK(k.mul(unit, k.inverse(unit)) == k.one());
        }
    }
    CHECK_THROWS_AS(k.inverse(k.pi()), std::domain_error);
    CHECK(k.pi_pow(4).is_zero());
}

TEST_CASE("chain ring: submodule canonical forms") {
    const auto ctx = FieldCtx::standard(1);
    const ChainRing k(Poly::x(ctx));
    const Poly one = k.one();
    const Poly pi = k.pi();
    const Poly zero = k.zero();

    const ModuleRow r1{one, pi};
    const auto s = Submodule2::generated_by(k, std::vector<ModuleRow>{r1});
    CHECK(s.profile() == std::array<unsigned, 4>{1, 0, 0, 0});
    CHECK(s.size_exponent() == 4);
    CHECK(s.contains({pi, k.pi_pow(2)}));
    CHECK_FALSE(s.contains({zero, one}));

    // Same module from a different generating set.
    const auto t = Submodule2::generated_by(k, std::vector<ModuleRow>{{one, pi}, {pi, k.pi_pow(2)}});
    CHECK(s == t);

    const auto full = Submodule2::generated_by(k, std::vector<ModuleRow>{{one, zero}, {zero, one}});
    CHECK(full.size_exponent() == 8);
    const auto none = Submodule2::generated_by(k, std::vector<ModuleRow>{{zero, zero}});
    CHECK(none.size_exponent() == 0);
    CHECK(none.rows().empty());
}
