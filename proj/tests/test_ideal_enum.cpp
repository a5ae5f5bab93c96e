#include <set>

#include "constaclass/ideal_enum.hpp"
#include "constaclass/json_io.hpp"
#include "doctest.h"

using namespace constaclass;

TEST_CASE("ideal counts") {
    CHECK(count_formula(1, 1) == 21);
    CHECK(count_formula(1, 3) == 111);
    CHECK(count_formula(2, 1) == 43);
    CHECK(count_ideals(1, 1, Scheme::Complete) == 23);
    CHECK(count_formula(16, 4) == (BigInt(1) << 128) + 5 * (BigInt(1) << 64) + 7);
    CHECK_THROWS(count_formula(0, 1));
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned d = 1; d <= 3; ++d)
            for (auto scheme : {Scheme::Stated, Scheme::Complete}) {
                BigInt sum = 0;
                for (auto f : scheme_families(scheme)) sum += family_count(f, m, d);
                CHECK(sum == count_ideals(m, d, scheme));
            }
}

TEST_CASE("family filters and names") {
    CHECK(parse_family_filter("II").size() == 3);
    CHECK(parse_family_filter("II-2") == std::vector<Family>{Family::II_2});
    CHECK(parse_family_filter("I") == std::vector<Family>{Family::I});
    CHECK_THROWS(parse_family_filter("VII"));
    CHECK(parse_scheme("complete") == Scheme::Complete);
    CHECK_FALSE(parse_scheme("full").has_value());
    CHECK(scheme_families(Scheme::Stated).size() == 9);
}

TEST_CASE("enumeration at length 14") {
    const auto ctx = FieldCtx::standard(1);
    const auto dec = Decomposition::build(ctx, 7, ctx.one(), ctx.one());
    CHECK(enumerate_ideals(dec, 0).size() == 21);
    CHECK(enumerate_ideals(dec, 1).size() == 111);
    CHECK(enumerate_ideals(dec, 2, scheme_families(Scheme::Complete)).size() == 113);
    const auto fam = parse_family_filter("III");
    for (std::size_t j = 0; j < 3; ++j) CHECK(enumerate_ideals(dec, j, fam).size() == 5);

    // Distinct descriptors, valid sizes, sizes from 0 to 8 m d.
    std::set<std::string> seen;
    for (const auto& d : enumerate_ideals(dec, 1, scheme_families(Scheme::Complete))) {
        CHECK(seen.insert(to_string(d)).second);
        CHECK(ideal_log2_size(d, dec) <= 24);
    }
}

TEST_CASE("descriptor validation") {
    const auto ctx = FieldCtx::standard(1);
    const auto dec = Decomposition::build(ctx, 7, ctx.one(), ctx.one());
    CHECK_THROWS(validate({0, Family::II_2, {parse_poly(ctx, "x")}, 0}, dec));  // degree >= d_1
    CHECK_THROWS(validate({5, Family::III, {}, 0}, dec));
    CHECK_THROWS(validate({0, Family::III, {}, 5}, dec));
    CHECK_THROWS(validate({0, Family::VI, {}, 0}, dec));
    CHECK_THROWS(validate({0, Family::I, {Poly(ctx)}, 0}, dec));
    CHECK_NOTHROW(validate({1, Family::I, {parse_poly(ctx, "x^2"), Poly(ctx)}, 0}, dec));
}

TEST_CASE("generators have the stated sizes") {
    for (unsigned m : {1U, 2U}) {
        const auto ctx = FieldCtx::standard(m);
        const auto dec = Decomposition::build(ctx, m == 1 ? 7 : 5, ctx.one(), ctx.one());
        for (std::size_t j = 0; j < dec.size(); ++j) {
            const auto ring = local_ring(dec, j);
            for (const auto& d : enumerate_ideals(dec, j, scheme_families(Scheme::Complete))) {
                const auto s = ideal_submodule(d, dec, ring);
                CHECK(s.size_exponent() * ring.digit_bits() == ideal_log2_size(d, dec));
            }
        }
    }
}
