#include "constaclass/decompose.hpp"
#include "constaclass/json_io.hpp"
#include "doctest.h"

using namespace constaclass;

TEST_CASE("decompose: length 14 example over GF(2)") {
    const auto ctx = FieldCtx::standard(1);
    const auto dec = Decomposition::build(ctx, 7, ctx.one(), ctx.one());
    REQUIRE(dec.size() == 3);
    const char* eps[] = {"1+x^4+x^8+x^12+x^16+x^20+x^24", "1+x^4+x^8+x^16", "1+x^12+x^20+x^24"};
    const char* omega[] = {"x^3", "1+x+x^2+x^4", "1+x^2+x^3+x^4"};
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(dec.factor(j).epsilon.to_string() == eps[j]);
        CHECK(dec.factor(j).omega.to_string() == omega[j]);
    }
    CHECK(dec.v_square().to_string() == "1+x^14");
}

TEST_CASE("decompose: n = 1 has the single idempotent 1") {
    const auto ctx = FieldCtx::standard(1);
    const auto dec = Decomposition::build(ctx, 1, ctx.one(), ctx.one());
    REQUIRE(dec.size() == 1);
    CHECK(dec.factor(0).epsilon.is_one());
}

TEST_CASE("decompose: idempotent identities across fields and twists") {
    struct Case {
        unsigned m, n;
        std::uint32_t delta, alpha;
    };
    for (const auto& c : {Case{1, 3, 1, 1}, Case{1, 15, 1, 1}, Case{2, 3, 2, 3}, Case{2, 5, 3, 2}, Case{3, 7, 6, 5},
                          Case{4, 9, 7, 12}}) {
        const auto ctx = FieldCtx::standard(c.m);
        const auto dec = Decomposition::build(ctx, c.n, FieldElem{c.delta}, FieldElem{c.alpha});
        CHECK(ctx.square(dec.delta0()) == dec.delta());
        CHECK(ctx.mul(ctx.square(dec.alpha0()), dec.alpha()) == ctx.one());
        Poly sum(ctx);
        for (std::size_t j = 0; j < dec.size(); ++j) {
            const auto& ej = dec.factor(j).epsilon;
            sum += ej;
            CHECK((ej * ej) % dec.modulus() == ej);
            for (std::size_t k = j + 1; k < dec.size(); ++k)
                CHECK(((ej * dec.factor(k).epsilon) % dec.modulus()).is_zero());
            CHECK(dec.factor(j).omega.degree() < static_cast<int>(4 * dec.factor(j).degree));
        }
        CHECK(sum == Poly::one(ctx));
        CHECK_NOTHROW(dec.verify());
    }
}

TEST_CASE("decompose: preconditions") {
    const auto ctx = FieldCtx::standard(2);
    CHECK_THROWS_WITH(Decomposition::build(ctx, 4, ctx.one(), ctx.one()), "n must be odd");
    CHECK_THROWS(Decomposition::build(ctx, 3, ctx.zero(), ctx.one()));
    CHECK_THROWS(Decomposition::build(ctx, 3, ctx.one(), ctx.zero()));
}

TEST_CASE("decompose: JSON export lists factors with 1-based indices") {
    const auto ctx = FieldCtx::standard(1);
    const auto dec = Decomposition::build(ctx, 7, ctx.one(), ctx.one());
    const auto j = to_json(dec);
    CHECK(j["r"] == 3);
    CHECK(j["factors"][0]["index"] == 1);
    CHECK(j["factors"][1]["f"] == Json({1, 1, 0, 1}));
    CHECK(j["factors"][2]["omega"] == Json({1, 0, 1, 1, 1}));
    CHECK(j["field"]["modulus"] == 2);
}
