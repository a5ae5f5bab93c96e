#include <random>

#include "constaclass/code_builder.hpp"
#include "constaclass/json_io.hpp"
#include "constaclass/packed.hpp"
#include "doctest.h"

using namespace constaclass;

namespace {

Decomposition length14() {
    const auto ctx = FieldCtx::standard(1);
    return Decomposition::build(ctx, 7, ctx.one(), ctx.one());
}

Poly random_below(const FieldCtx& ctx, std::mt19937_64& rng, std::size_t len) {
    std::uniform_int_distribution<std::uint32_t> c(0, ctx.order() - 1);
    std::vector<FieldElem> v(len);
    for (auto& e : v) e = FieldElem{c(rng)};
    return Poly(ctx, std::move(v));
}

}  // namespace

TEST_CASE("code ring: twisted shift folds x^(2n) onto gamma") {
    const auto ctx = FieldCtx::standard(1);
    const CodeRing ring(ctx, 1, ctx.one(), ctx.one());
    CodeWord w = ring.zero();
    w.entries[1].a[0] = ctx.one();  // x
    const auto s = ring.shift(w);   // x^2 = 1 + u^2
    CHECK(s.entries[0].a[0] == ctx.one());
    CHECK(s.entries[0].a[2] == ctx.one());
    CHECK(s.entries[1].is_zero());
    CHECK(ring.shift(w, 4) == ring.mul(ring.shift(w, 3), ring.shift(ring.from_layers({Poly::one(ctx), Poly(ctx), Poly(ctx), Poly(ctx)}))));
    CHECK_THROWS(ring.from_layers({Poly::monomial(ctx, ctx.one(), 2), Poly(ctx), Poly(ctx), Poly(ctx)}));
}

TEST_CASE("psi is a ring isomorphism") {
    std::mt19937_64 rng(99);
    for (unsigned m : {1U, 2U}) {
        const auto ctx = FieldCtx::standard(m);
        const auto dec = Decomposition::build(ctx, 3, ctx.one(), m == 1 ? ctx.one() : FieldElem{2});
        const CodeRing ring(dec);
        const auto deg = 4 * dec.n();
        for (int t = 0; t < 100; ++t) {
            const AvElem a{random_below(ctx, rng, deg), random_below(ctx, rng, deg)};
            const AvElem b{random_below(ctx, rng, deg), random_below(ctx, rng, deg)};
            CHECK(psi(dec, av_add(a, b)) == ring.add(psi(dec, a), psi(dec, b)));
            CHECK(psi(dec, av_mul(dec, a, b)) == ring.mul(psi(dec, a), psi(dec, b)));
            const auto back = psi_inverse(dec, psi(dec, a));
            CHECK(back.xi0 == a.xi0);
            CHECK(back.xi1 == a.xi1);
        }
        // v maps to u
        CodeWord u = ring.zero();
        u.entries[0].a[1] = ctx.one();
        CHECK(psi(dec, Poly(ctx), Poly::one(ctx)) == u);
    }
}

TEST_CASE("bridge table: q3 equals h03 times omega, reduced") {
    // eps f^3 = v^2 h03 and h03 f = 0 mod x^(2n) - delta, so q3 = h03 (omega mod f) mod (x^(2n) - delta).
    for (unsigned n : {3U, 7U, 9U}) {
        const auto ctx = FieldCtx::standard(1);
        const auto dec = Decomposition::build(ctx, n, ctx.one(), ctx.one());
        const auto table = bridge_table(dec);
        const Poly base = Poly::binomial(ctx, 2 * n, ctx.one());
        for (std::size_t j = 0; j < dec.size(); ++j) {
            const auto& fd = dec.factor(j);
            const auto& fb = table.factors[j];
            CHECK(fb.q[3] == (fb.h[0][3] * (fd.omega % fd.f)) % base);
            CHECK(fb.p[2].is_zero());
            CHECK(fb.p[3].is_zero());
        }
    }
    const auto dec = length14();
    const auto table = bridge_table(dec);
    CHECK(table.factors[0].q[3].to_string() == "1+x+x^2+x^3+x^4+x^5+x^6+x^7+x^8+x^9+x^10+x^11+x^12+x^13");
    CHECK(table.factors[1].q[3] == table.factors[1].h[0][3]);
    CHECK(table.factors[2].q[3].to_string() == "x^2+x^4+x^5+x^6+x^9+x^11+x^12+x^13");
}

TEST_CASE("II-2 seeds at length 14 match the listed basis") {
    const auto dec = length14();
    const auto& ctx = dec.field();
    const auto table = bridge_table(dec);
    const auto seeds = component_seeds(parse_descriptor("II-2:b=1+x^2", 1, dec), table, dec);
    REQUIRE(seeds.size() == 2);
    const auto h03 = parse_poly(ctx, "1+x+x^2+x^4+x^7+x^8+x^9+x^11");
    const auto h23 = parse_poly(ctx, "x^2+x^3+x^4+x^6+x^9+x^10+x^11+x^13");
    CHECK(seeds[0].layers[0].is_zero());
    CHECK(seeds[0].layers[1].is_zero());
    CHECK(seeds[0].layers[2] == h03 + h23);
    CHECK(seeds[0].layers[3] == parse_poly(ctx, "1+x^2+x^4+x^8"));
    CHECK(seeds[1].layers[2].is_zero());
    CHECK(seeds[1].layers[3] == h03);
}

TEST_CASE("assemble: zero code, sizes and tuple length") {
    const auto dec = length14();
    const auto table = bridge_table(dec);
    std::vector<IdealDescriptor> zero;
    for (std::size_t j = 0; j < 3; ++j) zero.push_back(parse_descriptor("III:k=4", j, dec));
    const auto z = assemble(dec, table, zero);
    CHECK(z.basis.empty());
    CHECK(z.log2_size == 0);

    std::vector<IdealDescriptor> full;
    for (std::size_t j = 0; j < 3; ++j) full.push_back(parse_descriptor("III:k=0", j, dec));
    const auto f = assemble(dec, table, full);
    CHECK(f.log2_size == 56);
    CHECK(code_span(f, dec).rank() == 56);

    zero.pop_back();
    CHECK_THROWS_AS(assemble(dec, table, zero), std::invalid_argument);
    CHECK(total_count(dec) == 258741);
    CHECK(total_count(dec, Scheme::Complete) == 293687);
}

TEST_CASE("assembled codes are closed, independent and of the predicted size") {
    std::mt19937_64 rng(5);
    struct Case {
        unsigned m, n;
    };
    for (const auto& c : {Case{1, 1}, Case{1, 3}, Case{1, 7}, Case{2, 1}, Case{2, 3}}) {
        const auto ctx = FieldCtx::standard(c.m);
        const auto dec = Decomposition::build(ctx, c.n, ctx.one(), c.m == 1 ? ctx.one() : FieldElem{3});
        const auto table = bridge_table(dec);
        const CodeRing ring(dec);
        const WordPacker packer(ctx, dec.length());
        std::vector<std::vector<IdealDescriptor>> lists;
        for (std::size_t j = 0; j < dec.size(); ++j)
            lists.push_back(enumerate_ideals(dec, j, scheme_families(Scheme::Complete)));
        for (int t = 0; t < 40; ++t) {
            std::vector<IdealDescriptor> descs;
            unsigned size = 0;
            for (const auto& l : lists) {
                descs.push_back(l[std::uniform_int_distribution<std::size_t>(0, l.size() - 1)(rng)]);
                size += ideal_log2_size(descs.back(), dec);
            }
            const auto code = assemble(dec, table, descs);
            const auto span = packer.span(code.basis);
            CHECK(code.log2_size == size);
            CHECK(span.rank() == size);
            for (const auto& w : code.basis) {
                CHECK(span.contains(packer.pack(ring.shift(w))));
                CHECK(span.contains(packer.pack(ring.u_times(w))));
            }
        }
    }
}
