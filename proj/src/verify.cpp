#include "constaclass/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "constaclass/code_builder.hpp"
#include "constaclass/length2.hpp"
#include "constaclass/oracle.hpp"
#include "constaclass/packed.hpp"
#include "constaclass/worked_example.hpp"

namespace constaclass {

bool Report::passed() const noexcept { return failures() == 0; }

std::size_t Report::failures() const noexcept {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void Report::add(std::string name, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    add(std::move(name), std::move(expected), std::move(actual), pass);
}

void Report::add(std::string name, std::string expected, std::string actual, bool pass) {
    checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

void Report::append(const Report& other) {
    for (const auto& c : other.checks) checks.push_back({other.suite + ": " + c.name, c.expected, c.actual, c.pass});
}

Json Report::to_json() const {
    Json list = Json::array();
    for (const auto& c : checks)
        list.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    return Json{{"suite", suite}, {"checks", std::move(list)}, {"failures", failures()}, {"pass", passed()}};
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "suite " << suite << '\n';
    for (const auto& c : checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << ": ";
        if (c.pass)
            out << c.actual;
        else
            out << "expected " << c.expected << ", actual " << c.actual;
        out << '\n';
    }
    out << checks.size() << " checks, " << failures() << " failed\n";
    return out.str();
}

namespace {

std::string str(const BigInt& v) { return v.str(); }
template <class T>
std::string str(const T& v) {
    return std::to_string(v);
}

std::string ratio(std::size_t good, std::size_t total) { return str(good) + "/" + str(total); }

std::string group_of(Family f) {
    const std::string name(family_name(f));
    return name.substr(0, name.find('-'));
}

/// "I=4 II=5 ..." in family order, plus any extra labelled counts.
std::string census_text(const std::map<std::string, std::size_t>& counts, std::span<const Family> families) {
    std::string out;
    std::vector<std::string> seen;
    for (auto f : families) {
        const auto g = group_of(f);
        if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
        seen.push_back(g);
        const auto it = counts.find(g);
        if (!out.empty()) out += ' ';
        out += g + "=" + str(it == counts.end() ? std::size_t{0} : it->second);
    }
    for (const auto& [k, v] : counts)
        if (std::find(seen.begin(), seen.end(), k) == seen.end()) out += " " + k + "=" + str(v);
    return out;
}

std::optional<oracle::Alphabet> alphabet_of(std::string_view s) {
    if (s == "S1") return oracle::Alphabet::S1;
    if (s == "S2") return oracle::Alphabet::S2;
    if (s == "S3") return oracle::Alphabet::S3;
    return std::nullopt;
}

const Poly* bridge_entry(const FactorBridge& fb, std::string_view name) {
    auto digit = [](char c) { return static_cast<std::size_t>(c - '0'); };
    if ((name[0] == 'g' || name[0] == 'h') && name.size() == 3) {
        const auto i = digit(name[1]);
        const auto l = digit(name[2]);
        const auto& tab = name[0] == 'g' ? fb.g : fb.h;
        if (i >= tab.size() || l > 3) return nullptr;
        return &tab[i][l];
    }
    if ((name[0] == 'p' || name[0] == 'q') && name.size() == 2) {
        const auto l = digit(name[1]);
        if (l < 1 || l > 3) return nullptr;
        return name[0] == 'p' ? &fb.p[l] : &fb.q[l];
    }
    return nullptr;
}

std::vector<std::vector<IdealDescriptor>> per_factor_lists(const Decomposition& dec, Scheme scheme) {
    std::vector<std::vector<IdealDescriptor>> lists;
    for (std::size_t j = 0; j < dec.size(); ++j) lists.push_back(enumerate_ideals(dec, j, scheme_families(scheme)));
    return lists;
}

}  // namespace

unsigned smallest_length_with_degree(unsigned m, unsigned d) {
    if (m == 0 || d == 0) throw std::invalid_argument("m and d must be positive");
    for (std::uint64_t n = 1; n < (std::uint64_t{1} << 24); n += 2) {
        // multiplicative order of 2^m modulo n
        const std::uint64_t q = (std::uint64_t{1} << std::min(m, 40U)) % n;
        std::uint64_t e = q % n;
        unsigned ord = 1;
        const std::uint64_t one = 1 % n;
        while (e != one && ord <= d) {
            e = (e * q) % n;
            ++ord;
        }
        if (ord == d) return static_cast<unsigned>(n);
    }
    throw std::invalid_argument("no odd length found for degree " + std::to_string(d));
}

Report verify_worked_example(const VerifyOptions& opt) {
    namespace we = worked_example;
    Report rep{"worked-example", {}};
    const auto ctx = FieldCtx::standard(we::kM);
    const auto dec = Decomposition::build(ctx, we::kN, ctx.elem(we::kDelta), ctx.elem(we::kAlpha), opt.seed);

    const auto refs = we::factors();
    rep.add("factor count", str(refs.size()), str(dec.size()));
    for (std::size_t j = 0; j < std::min(refs.size(), dec.size()); ++j) {
        const auto& fd = dec.factor(j);
        const auto tag = " j=" + str(j + 1);
        rep.add("f" + tag, parse_poly(ctx, refs[j].f).to_string(), fd.f.to_string());
        rep.add("epsilon" + tag, parse_poly(ctx, refs[j].epsilon).to_string(), fd.epsilon.to_string());
        rep.add("omega" + tag, parse_poly(ctx, refs[j].omega).to_string(), fd.omega.to_string());
        rep.add("ideal count" + tag, str(refs[j].ideal_count), str(count_ideals(we::kM, fd.degree, opt.scheme)));
    }
    rep.add("total count", str(we::kTotalCount), str(total_count(dec, opt.scheme)));

    BridgeTable table;
    try {
        table = bridge_table(dec);
        rep.add("vanishing identities", "hold", "hold");
    } catch (const std::logic_error& e) {
        rep.add("vanishing identities", "hold", e.what());
        return rep;
    }
    for (const auto& b : we::bridge_values()) {
        const auto name = "bridge j=" + str(b.factor) + " " + std::string(b.name);
        const Poly* got = b.factor <= table.factors.size() ? bridge_entry(table.factors[b.factor - 1], b.name) : nullptr;
        rep.add(name, parse_poly(ctx, b.value).to_string(), got ? got->to_string() : "missing");
    }

    for (const auto& c : we::code_parameters()) {
        const std::string label(c.label);
        std::vector<IdealDescriptor> descs;
        for (std::size_t j = 0; j < 3; ++j) descs.push_back(parse_descriptor(c.desc[j], j, dec));
        const auto code = assemble(dec, table, descs);
        rep.add(label + " log2|C|", str(c.log2_size), str(code.log2_size));
        const auto d = oracle::min_distance(code, dec);
        rep.add(label + " distance", str(c.distance), d ? str(*d) : "none");
        try {
            const auto view = oracle::AdditiveCodeView::from_code(code, dec, *alphabet_of(c.alphabet));
            const bool closed = oracle::check_tau_constacyclic(view, c.tau);
            rep.add(label + (c.tau ? " tau-constacyclic over " : " cyclic over ") + std::string(c.alphabet), "yes",
                    closed ? "yes" : "no");
        } catch (const std::invalid_argument&) {
            rep.add(label + " alphabet", std::string(c.alphabet), "entry outside");
        }
    }
    return rep;
}

Report verify_brute_ideals(const VerifyOptions& opt) {
    Report rep{"brute-ideals", {}};
    const auto ctx = FieldCtx::standard(opt.m);
    const unsigned n = smallest_length_with_degree(opt.m, opt.d);
    const auto dec = Decomposition::build(ctx, n, ctx.one(), ctx.one(), opt.seed);
    std::size_t j = 0;
    while (j < dec.size() && dec.factor(j).degree != opt.d) ++j;
    if (j == dec.size()) throw std::logic_error("no factor of the requested degree");

    const auto ring = oracle::ExhaustiveRing::for_factor(dec, j);
    const auto brute = oracle::brute_ideals(ring);
    const auto families = scheme_families(opt.scheme);
    const auto descs = enumerate_ideals(dec, j, families);
    const auto expected = str(count_ideals(opt.m, opt.d, opt.scheme));

    rep.add("factor f=" + dec.factor(j).f.to_string() + " (n=" + str(n) + ")", "degree " + str(opt.d),
            "degree " + str(dec.factor(j).degree));
    rep.add("brute-force ideal count", expected, str(brute.ideals.size()));
    rep.add("descriptor count", expected, str(descs.size()));

    std::vector<oracle::SmallSpace> expanded;
    std::size_t size_ok = 0;
    for (const auto& d : descs) {
        expanded.push_back(oracle::expand_descriptor(ring, d, dec));
        if (expanded.back().rank() == ideal_log2_size(d, dec)) ++size_ok;
    }
    rep.add("descriptor sizes", ratio(descs.size(), descs.size()), ratio(size_ok, descs.size()));

    std::set<oracle::SmallSpace> distinct(expanded.begin(), expanded.end());
    rep.add("distinct descriptor ideals", str(descs.size()), str(distinct.size()));

    std::size_t found = 0;
    for (const auto& s : expanded)
        if (std::binary_search(brute.ideals.begin(), brute.ideals.end(), s)) ++found;
    rep.add("descriptor ideals found by brute force", ratio(descs.size(), descs.size()), ratio(found, descs.size()));

    std::map<std::string, std::size_t> census;
    std::map<std::string, std::size_t> expected_census;
    for (auto f : families) expected_census[group_of(f)] += static_cast<std::size_t>(family_count(f, opt.m, opt.d));
    for (const auto& s : brute.ideals) {
        const auto it = std::find(expanded.begin(), expanded.end(), s);
        ++census[it == expanded.end() ? std::string("unclassified") : group_of(descs[it - expanded.begin()].family)];
    }
    rep.add("family census", census_text(expected_census, families), census_text(census, families));
    return rep;
}

Report verify_closure(const VerifyOptions& opt) {
    Report rep{"closure", {}};
    const auto ctx = FieldCtx::standard(opt.m);
    const auto dec = Decomposition::build(ctx, opt.n, ctx.elem(opt.delta), ctx.elem(opt.alpha), opt.seed);
    const auto table = bridge_table(dec);
    const auto lists = per_factor_lists(dec, opt.scheme);
    const CodeRing ring(dec);
    const WordPacker packer(ctx, dec.length());

    std::mt19937_64 rng(opt.seed);
    std::size_t shift_ok = 0, u_ok = 0, indep_ok = 0, size_ok = 0;
    for (std::size_t s = 0; s < opt.sample; ++s) {
        std::vector<IdealDescriptor> descs;
        unsigned expect_log2 = 0;
        for (const auto& list : lists) {
            descs.push_back(list[std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(rng)]);
            expect_log2 += ideal_log2_size(descs.back(), dec);
        }
        const auto code = assemble(dec, table, descs);
        const auto span = packer.span(code.basis);
        bool shift = true, u = true;
        for (const auto& w : code.basis) {
            shift = shift && span.contains(packer.pack(ring.shift(w)));
            u = u && span.contains(packer.pack(ring.u_times(w)));
        }
        shift_ok += shift;
        u_ok += u;
        indep_ok += span.rank() == code.basis.size() * opt.m;
        size_ok += span.rank() == expect_log2 && code.log2_size == expect_log2;
    }
    const auto all = ratio(opt.sample, opt.sample);
    rep.add("twisted shift closure", all, ratio(shift_ok, opt.sample));
    rep.add("closure under u", all, ratio(u_ok, opt.sample));
    rep.add("basis independence", all, ratio(indep_ok, opt.sample));
    rep.add("size is the product of component sizes", all, ratio(size_ok, opt.sample));

    // Exhaustive distinctness when the full code list is small.
    const auto total = total_count(dec, opt.scheme);
    if (total <= 5000) {
        std::set<BitWords> keys;
        std::vector<std::size_t> idx(lists.size(), 0);
        for (;;) {
            std::vector<IdealDescriptor> descs;
            for (std::size_t j = 0; j < lists.size(); ++j) descs.push_back(lists[j][idx[j]]);
            keys.insert(packer.span(assemble(dec, table, descs).basis).canonical_key());
            std::size_t j = 0;
            while (j < idx.size() && ++idx[j] == lists[j].size()) idx[j++] = 0;
            if (j == idx.size()) break;
        }
        rep.add("distinct codes", str(total), str(keys.size()));
    }
    return rep;
}

Report verify_units(const VerifyOptions& opt) {
    Report rep{"units", {}};
    struct Case {
        unsigned m, n;
        std::uint32_t delta, alpha;
    };
    std::vector<Case> cases = {{1, 1, 1, 1}, {1, 3, 1, 1}, {1, 5, 1, 1}, {1, 7, 1, 1}, {1, 9, 1, 1},
                               {1, 15, 1, 1}, {2, 1, 2, 3}, {2, 3, 1, 2}, {2, 3, 3, 3}, {2, 5, 2, 1},
                               {3, 3, 2, 6}, {3, 7, 5, 3}, {4, 3, 3, 11}, {4, 5, 7, 9}};
    if (std::none_of(cases.begin(), cases.end(), [&](const Case& c) {
            return c.m == opt.m && c.n == opt.n && c.delta == opt.delta && c.alpha == opt.alpha;
        }))
        cases.push_back({opt.m, opt.n, opt.delta, opt.alpha});

    for (const auto& c : cases) {
        const auto ctx = FieldCtx::standard(c.m);
        const auto dec = Decomposition::build(ctx, c.n, ctx.elem(c.delta), ctx.elem(c.alpha), opt.seed);
        const auto tag = " (m=" + str(c.m) + " n=" + str(c.n) + " delta=" + str(c.delta) + " alpha=" + str(c.alpha) + ")";

        Poly sum(ctx);
        bool local_ok = true;
        for (std::size_t j = 0; j < dec.size(); ++j) {
            const auto& fd = dec.factor(j);
            const Poly wf = fd.omega * fd.f;
            const Poly local = wf * wf;
            local_ok = local_ok && (local % dec.local_modulus(j)) == (dec.v_square() % dec.local_modulus(j));
            sum += fd.epsilon * local;
        }
        rep.add("omega_j^2 f_j^2 = v^2 mod f_j^4" + tag, "holds", local_ok ? "holds" : "fails");
        rep.add("sum eps_j omega_j^2 f_j^2 = v^2" + tag, dec.v_square().to_string(), (sum % dec.modulus()).to_string());

        for (std::size_t j = 0; j < dec.size(); ++j) {
            const auto counts = oracle::square_root_counts(dec, j);
            const unsigned md = c.m * dec.factor(j).degree;
            const auto ftag = tag.substr(0, tag.size() - 1) + " j=" + str(j + 1) + ")";
            if (counts.checked_mod_f)
                rep.add("roots of z^2 = omega^2 mod f" + ftag, "1, omega",
                        str(counts.mod_f_solutions) + (counts.mod_f_is_omega ? ", omega" : ", other"));
            if (counts.checked_mod_f2)
                rep.add("roots of z^2 = omega^2 mod f^2" + ftag, str(std::uint64_t{1} << md) + ", omega + f T",
                        str(counts.mod_f2_solutions) + (counts.mod_f2_match_family ? ", omega + f T" : ", other"));
        }
    }
    return rep;
}

Report verify_length2(const VerifyOptions& opt) {
    Report rep{"length2", {}};
    const auto ctx = FieldCtx::standard(opt.m);
    const ChainRing ring(Poly::x(ctx));
    const Poly omega = ring.one();
    const auto lin = oracle::brute_linear2(ring, omega);
    const BigInt q = BigInt(1) << opt.m;
    const BigInt total = q * q * q * q + 3 * q * q * q + 5 * q * q + 7 * q + 9;
    rep.add("linear codes of length 2", str(total), str(lin.total()));

    const oracle::ExhaustiveRing er(ring, ring.mul(omega, ring.pi_pow(2)));
    auto expand_all = [&](const std::vector<GenMatrix2>& shapes) {
        std::vector<oracle::SmallSpace> out;
        for (const auto& g : shapes) out.push_back(oracle::expand_matrix(er, g));
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto unrestricted = expand_all(classify_length2_unrestricted(ring));
    rep.add("unrestricted shapes equal brute force", str(lin.total()),
            unrestricted == lin.all ? str(unrestricted.size()) : "differs (" + str(unrestricted.size()) + " shapes)");

    const auto expected = str(count_ideals(opt.m, 1, opt.scheme));
    rep.add("codes satisfying the twist condition", expected, str(lin.filtered()));
    const auto shapes = classify_length2(ring, omega, opt.scheme);
    rep.add("classified shapes", expected, str(shapes.size()));
    const auto restricted = expand_all(shapes);
    std::size_t closed = 0;
    for (const auto& s : restricted)
        if (std::binary_search(lin.closed.begin(), lin.closed.end(), s)) ++closed;
    rep.add("classified shapes satisfy the twist condition", ratio(shapes.size(), shapes.size()),
            ratio(closed, shapes.size()));
    std::size_t covered = 0;
    for (const auto& s : lin.closed)
        if (std::binary_search(restricted.begin(), restricted.end(), s)) ++covered;
    rep.add("twist-closed codes covered by shapes", ratio(lin.filtered(), lin.filtered()),
            ratio(covered, lin.filtered()));
    return rep;
}

std::vector<std::string_view> suite_names() {
    return {"worked-example", "brute-ideals", "closure", "units", "length2", "all"};
}

Report run_suite(std::string_view name, const VerifyOptions& opt) {
    if (name == "worked-example") return verify_worked_example(opt);
    if (name == "brute-ideals") return verify_brute_ideals(opt);
    if (name == "closure") return verify_closure(opt);
    if (name == "units") return verify_units(opt);
    if (name == "length2") return verify_length2(opt);
    if (name == "all") {
        Report rep{"all", {}};
        for (auto s : suite_names())
            if (s != "all") rep.append(run_suite(s, opt));
        return rep;
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace constaclass
