#include <random>

#include "constaclass/poly.hpp"
#include "doctest.h"

using namespace constaclass;

namespace {

Poly random_poly(const FieldCtx& ctx, std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<std::uint32_t> c(0, ctx.order() - 1);
    std::vector<FieldElem> v(static_cast<std::size_t>(max_deg + 1));
    for (auto& e : v) e = FieldElem{c(rng)};
    return Poly(ctx, std::move(v));
}

}  // namespace

TEST_CASE("poly: text round trip") {
    const auto f2 = FieldCtx::standard(1);
    const auto p = parse_poly(f2, "1+x^4+x^8");
    CHECK(p.degree() == 8);
    CHECK(p.to_string() == "1+x^4+x^8");
    CHECK(parse_poly(f2, " x + x ").is_zero());
    CHECK(parse_poly(f2, "0").to_string() == "0");

    const auto f4 = FieldCtx::standard(2);
    const auto q = parse_poly(f4, "2+3*x^2+x^5");
    CHECK(q.to_string() == "2+3*x^2+x^5");
    CHECK(q.to_ints() == std::vector<std::uint32_t>{2, 0, 3, 0, 0, 1});
    CHECK_THROWS(parse_poly(f4, "4*x"));
    CHECK_THROWS(parse_poly(f4, "x^"));
}

TEST_CASE("poly: division identity and gcd on random inputs") {
    std::mt19937 rng(11);
    for (unsigned m : {1U, 2U, 3U, 8U}) {
        const auto ctx = FieldCtx::standard(m);
        for (int t = 0; t < 50; ++t) {
            const auto a = random_poly(ctx, rng, 12);
            auto b = random_poly(ctx, rng, 5);
            if (b.is_zero()) continue;
            const auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
            const auto e = ext_gcd(a, b);
            CHECK(e.s * a + e.t * b == e.g);
            CHECK(e.g == gcd(a, b));
            CHECK(a % e.g == Poly(ctx));
        }
    }
}

TEST_CASE("poly: modular inverse and powers") {
    const auto ctx = FieldCtx::standard(1);
    const auto m = parse_poly(ctx, "1+x+x^3");
    const auto a = parse_poly(ctx, "x^2+1");
    CHECK((a * inverse_mod(a, m)) % m == Poly::one(ctx));
    CHECK(pow_mod(Poly::x(ctx), 7, m) == Poly::one(ctx));
    CHECK(frobenius_pow_mod(Poly::x(ctx), 3, m) == Poly::x(ctx));
    CHECK_THROWS_AS(inverse_mod(parse_poly(ctx, "1+x"), parse_poly(ctx, "1+x^2")), std::domain_error);
    CHECK(pow(parse_poly(ctx, "1+x"), 4) == parse_poly(ctx, "1+x^4"));
}

TEST_CASE("poly: canonical order compares from the leading term") {
    const auto ctx = FieldCtx::standard(1);
    CHECK(canonical_less(parse_poly(ctx, "1+x"), parse_poly(ctx, "1+x+x^3")));
    CHECK(canonical_less(parse_poly(ctx, "1+x+x^3"), parse_poly(ctx, "1+x^2+x^3")));
    CHECK_FALSE(canonical_less(parse_poly(ctx, "1+x^2+x^3"), parse_poly(ctx, "1+x+x^3")));
}
