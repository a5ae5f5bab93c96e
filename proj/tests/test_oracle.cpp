#include <algorithm>
#include <random>
#include <set>

#include "constaclass/json_io.hpp"
#include "constaclass/oracle.hpp"
#include "constaclass/verify.hpp"
#include "doctest.h"

using namespace constaclass;
using namespace constaclass::oracle;

TEST_CASE("small space: echelon form is canonical") {
    SmallSpace a(8), b(8);
    a.insert(0b1100);
    a.insert(0b0110);
    b.insert(0b1010);
    b.insert(0b0110);
    CHECK(a == b);
    CHECK(a.size() == 4);
    CHECK(a.elements() == std::vector<std::uint32_t>{0, 0b0110, 0b1010, 0b1100});
    CHECK_FALSE(a.insert(0b1010));
    CHECK_THROWS(a.insert(0x100));
}

TEST_CASE("complete scheme equals brute force on small factors") {
    struct Case {
        unsigned m, d;
    };
    for (const auto& c : {Case{1, 1}, Case{2, 1}, Case{1, 2}}) {
        const auto ctx = FieldCtx::standard(c.m);
        const auto dec = Decomposition::build(ctx, smallest_length_with_degree(c.m, c.d), ctx.one(), ctx.one());
        std::size_t j = 0;
        while (dec.factor(j).degree != c.d) ++j;
        const auto ring = ExhaustiveRing::for_factor(dec, j);
        const auto brute = brute_ideals(ring);
        std::vector<SmallSpace> mine;
        for (const auto& d : enumerate_ideals(dec, j, scheme_families(Scheme::Complete)))
            mine.push_back(expand_descriptor(ring, d, dec));
        std::sort(mine.begin(), mine.end());
        CHECK(mine == brute.ideals);
        CHECK(brute.ideals.size() == count_ideals(c.m, c.d, Scheme::Complete));
        // The stated families miss exactly family VI.
        CHECK(brute.ideals.size() - enumerate_ideals(dec, j).size() == 2);
    }
}

TEST_CASE("exhaustive ring multiplication agrees with the encoding") {
    const auto ctx = FieldCtx::standard(1);
    const auto dec = Decomposition::build(ctx, 3, ctx.one(), ctx.one());
    const auto ring = ExhaustiveRing::for_factor(dec, 0);
    std::mt19937 rng(1);
    for (int t = 0; t < 200; ++t) {
        const std::uint32_t a = rng() % ring.size(), b = rng() % ring.size(), c = rng() % ring.size();
        CHECK(ring.mul(a, b) == ring.mul(b, a));
        CHECK(ring.mul(a, b ^ c) == (ring.mul(a, b) ^ ring.mul(a, c)));
        CHECK(ring.encode(ring.decode(a)) == a);
    }
    CHECK_THROWS_AS(ExhaustiveRing::for_factor(Decomposition::build(ctx, 7, ctx.one(), ctx.one()), 1),
                    std::length_error);
}

TEST_CASE("min distance: packed scan equals the reference") {
    const auto ctx = FieldCtx::standard(1);
    const auto dec = Decomposition::build(ctx, 7, ctx.one(), ctx.one());
    const auto table = bridge_table(dec);
    std::mt19937_64 rng(17);
    std::vector<std::vector<IdealDescriptor>> lists;
    for (std::size_t j = 0; j < 3; ++j) lists.push_back(enumerate_ideals(dec, j));
    int checked = 0;
    while (checked < 25) {
        std::vector<IdealDescriptor> descs;
        for (const auto& l : lists) descs.push_back(l[std::uniform_int_distribution<std::size_t>(0, l.size() - 1)(rng)]);
        const auto code = assemble(dec, table, descs);
        if (code.log2_size > 16) continue;
        CHECK(min_distance(code, dec) == min_distance_reference(code, dec));
        ++checked;
    }
    std::vector<IdealDescriptor> zero;
    for (std::size_t j = 0; j < 3; ++j) zero.push_back(parse_descriptor("III:k=4", j, dec));
    CHECK_FALSE(min_distance(assemble(dec, table, zero), dec).has_value());
    std::vector<IdealDescriptor> big;
    for (std::size_t j = 0; j < 3; ++j) big.push_back(parse_descriptor("III:k=0", j, dec));
    CHECK_THROWS_AS(min_distance(assemble(dec, table, big), dec), std::length_error);
}

TEST_CASE("additive views of the length 14 codes") {
    const auto ctx = FieldCtx::standard(1);
    const auto dec = Decomposition::build(ctx, 7, ctx.one(), ctx.one());
    const auto table = bridge_table(dec);
    auto code = [&](const char* a, const char* b, const char* c) {
        return assemble(dec, table, {parse_descriptor(a, 0, dec), parse_descriptor(b, 1, dec), parse_descriptor(c, 2, dec)});
    };
    const auto c2 = AdditiveCodeView::from_code(code("III:k=4", "II-2:b=0", "III:k=4"), dec, Alphabet::S3);
    CHECK(c2.words.size() == 64);
    CHECK(min_distance(c2) == 4u);
    CHECK(check_tau_constacyclic(c2, false));

    const auto c3code = code("III:k=4", "III:k=4", "II-3:c=1+x");
    CHECK_THROWS(AdditiveCodeView::from_code(c3code, dec, Alphabet::S2));
    const auto c3 = AdditiveCodeView::from_code(c3code, dec, Alphabet::S1);
    CHECK(c3.words.size() == 512);
    CHECK(check_tau_constacyclic(c3, true));
    CHECK_FALSE(check_tau_constacyclic(c3, false));
    CHECK(min_distance(c3) == 8u);

    CHECK(tau(RElem{{FieldElem{0}, FieldElem{1}, FieldElem{0}, FieldElem{1}}}) ==
          RElem{{FieldElem{0}, FieldElem{1}, FieldElem{0}, FieldElem{0}}});
}

TEST_CASE("square-root counts") {
    const auto ctx = FieldCtx::standard(1);
    const auto dec = Decomposition::build(ctx, 7, ctx.one(), ctx.one());
    for (std::size_t j = 0; j < 3; ++j) {
        const auto c = square_root_counts(dec, j);
        CHECK(c.checked_mod_f);
        CHECK(c.mod_f_solutions == 1);
        CHECK(c.mod_f_is_omega);
        CHECK(c.checked_mod_f2);
        CHECK(c.mod_f2_solutions == (std::uint64_t{1} << dec.factor(j).degree));
        CHECK(c.mod_f2_match_family);
    }
}
