#include "constaclass/length2.hpp"
#include "doctest.h"

using namespace constaclass;

TEST_CASE("length 2: shape counts over GF(2)[x]/<x^4>") {
    const auto ctx = FieldCtx::standard(1);
    const ChainRing k(Poly::x(ctx));
    CHECK(classify_length2_unrestricted(k).size() == 83);
    CHECK(classify_length2(k, k.one()).size() == 21);
    CHECK(classify_length2(k, k.one(), Scheme::Complete).size() == 23);
    CHECK(residues_mod_pi_pow(k, 2).size() == 4);
}

TEST_CASE("length 2: counts over GF(4) follow q^4 + 3q^3 + 5q^2 + 7q + 9") {
    const auto ctx = FieldCtx::standard(2);
    const ChainRing k(Poly::x(ctx));
    CHECK(classify_length2_unrestricted(k).size() == 256 + 192 + 80 + 28 + 9);
    CHECK(classify_length2(k, k.one()).size() == 43);
}

TEST_CASE("length 2: listed shapes are closed and pairwise distinct") {
    const auto ctx = FieldCtx::standard(1);
    const ChainRing k(parse_poly(ctx, "1+x+x^2"));
    const Poly omega = parse_poly(ctx, "x^2");  // twist units are squares omega_j^2
    const auto shapes = classify_length2(k, omega, Scheme::Complete);
    CHECK(shapes.size() == 45);
    std::vector<Submodule2> mods;
    for (const auto& g : shapes) {
        const auto s = Submodule2::generated_by(k, g.rows);
        CHECK(closed_under_twist(s, k, omega));
        for (const auto& t : mods) CHECK_FALSE(t == s);
        mods.push_back(s);
    }
}
