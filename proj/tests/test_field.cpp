#include <random>

#include "constaclass/field.hpp"
#include "doctest.h"

using namespace constaclass;

TEST_CASE("field: default moduli are the first irreducibles") {
    CHECK(FieldCtx::default_modulus(1) == 0b10);  // x
    CHECK(FieldCtx::default_modulus(2) == 0b111);
    CHECK(FieldCtx::default_modulus(3) == 0b1011);
    CHECK(FieldCtx::default_modulus(4) == 0b10011);
    CHECK(FieldCtx::default_modulus(8) == 0x11b);
}

TEST_CASE("field: reducible or mis-sized moduli are rejected") {
    CHECK_THROWS_AS(FieldCtx(2, 0b101), ReducibleModulus);
    CHECK_THROWS_AS(FieldCtx(4, 0b10101), ReducibleModulus);
    CHECK_THROWS_AS(FieldCtx(3, 0b111), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(0, 0b1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(17, 0), std::invalid_argument);
    try {
        FieldCtx(4, 0b10101);
    } catch (const ReducibleModulus& e) {
        CHECK(e.factor_degree() == 2);
    }
}

TEST_CASE("field: GF(4) multiplication table") {
    const auto f = FieldCtx::standard(2);
    const FieldElem w{2};
    CHECK(f.mul(w, w) == FieldElem{3});
    CHECK(f.mul(w, FieldElem{3}) == f.one());
    CHECK(f.inv(w) == FieldElem{3});
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
    CHECK_THROWS(f.elem(4));
}

TEST_CASE("field: axioms on random elements for m = 1..16") {
    std::mt19937 rng(7);
    for (unsigned m = 1; m <= 16; ++m) {
        const auto f = FieldCtx::standard(m);
        std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
        for (int t = 0; t < 200; ++t) {
            const FieldElem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, b + c) == f.mul(a, b) + f.mul(a, c));
            CHECK(f.square(f.sqrt(a)) == a);
            if (!a.is_zero()) {
                CHECK(f.mul(a, f.inv(a)) == f.one());
                CHECK(f.pow(a, f.order() - 1) == f.one());
            }
        }
    }
}
