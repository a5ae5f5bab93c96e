// Acceptance criteria 1-10, one PASS/FAIL line each.
//
// Exit status: 0 when every criterion passes. With --known-failures a,b,...
// the status is 0 exactly when the failing set equals that list, so a known
// red criterion stays visible without masking new regressions or fixes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "constaclass/code_builder.hpp"
#include "constaclass/factor.hpp"
#include "constaclass/json_io.hpp"
#include "constaclass/length2.hpp"
#include "constaclass/oracle.hpp"
#include "constaclass/packed.hpp"
#include "constaclass/verify.hpp"
#include "constaclass/worked_example.hpp"

using namespace constaclass;
namespace we = constaclass::worked_example;

namespace {

// Time limits in seconds.
constexpr double kLimitGolden = 1.0;
constexpr double kLimitOracle = 30.0;
constexpr double kLimitLength2 = 60.0;
constexpr double kLimitScan = 10.0;
constexpr double kLimitPsi = 5.0;

constexpr std::size_t kPropertyTuplesPerCase = 150;
constexpr std::size_t kPsiPairs = 1000;

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Decomposition example_dec() {
    const auto ctx = FieldCtx::standard(we::kM);
    return Decomposition::build(ctx, we::kN, ctx.elem(we::kDelta), ctx.elem(we::kAlpha));
}

IdealDescriptor desc(const char* text, std::size_t j, const Decomposition& dec) { return parse_descriptor(text, j, dec); }

Outcome c1_factorization() {
    const auto ctx = FieldCtx::standard(1);
    const auto t0 = Clock::now();
    const auto fs = factor_xn_minus(ctx, 7, ctx.one());
    const double t = seconds_since(t0);
    std::string got;
    for (const auto& f : fs) got += (got.empty() ? "" : ", ") + f.to_string();
    const bool exact = fs.size() == 3 && fs[0] == parse_poly(ctx, "x+1") && fs[1] == parse_poly(ctx, "x^3+x+1") &&
                       fs[2] == parse_poly(ctx, "x^3+x^2+1");
    return {exact && t < kLimitGolden, "{" + got + "} in " + std::to_string(t) + " s"};
}

Outcome c2_decomposition() {
    const auto t0 = Clock::now();
    const auto dec = example_dec();
    std::size_t bad = 0;
    const auto refs = we::factors();
    for (std::size_t j = 0; j < refs.size(); ++j) {
        bad += dec.factor(j).epsilon != parse_poly(dec.field(), refs[j].epsilon);
        bad += dec.factor(j).omega != parse_poly(dec.field(), refs[j].omega);
    }
    const double t = seconds_since(t0);
    return {bad == 0 && dec.size() == 3 && t < kLimitGolden,
            std::to_string(6 - bad) + "/6 of eps_j, omega_j equal, " + std::to_string(t) + " s"};
}

Outcome c3_bridge() {
    const auto t0 = Clock::now();
    const auto dec = example_dec();
    BridgeTable table;
    try {
        table = bridge_table(dec);
    } catch (const std::logic_error& e) {
        return {false, e.what()};
    }
    std::size_t total = 0, bad = 0;
    std::string mismatches;
    for (const auto& b : we::bridge_values()) {
        const auto& fb = table.factors.at(b.factor - 1);
        const std::string name(b.name);
        const auto l = static_cast<std::size_t>(name.back() - '0');
        const auto i = static_cast<std::size_t>(name[1] - '0');
        const Poly& got = name[0] == 'g' ? fb.g.at(i)[l] : name[0] == 'h' ? fb.h.at(i)[l] : name[0] == 'p' ? fb.p[l] : fb.q[l];
        const Poly want = parse_poly(dec.field(), b.value);
        ++total;
        if (got != want) {
            ++bad;
            mismatches += "; j=" + std::to_string(b.factor) + " " + name + " listed " + want.to_string() + " computed " +
                          got.to_string();
        }
    }
    const double t = seconds_since(t0);
    return {bad == 0 && t < kLimitGolden,
            std::to_string(total - bad) + "/" + std::to_string(total) +
                " listed values equal, zero identities hold, " + std::to_string(t) + " s" + mismatches};
}

Outcome c4_count() {
    const auto dec = example_dec();
    const auto total = total_count(dec);
    const bool ok = total == 258741 && count_formula(1, 1) == 21 && count_formula(1, 3) == 111;
    return {ok, "total " + total.str() + ", N(1,1) = " + count_formula(1, 1).str() + ", N(1,3) = " +
                    count_formula(1, 3).str() + "; complete scheme total " +
                    total_count(dec, Scheme::Complete).str()};
}

Outcome c5_oracle() {
    const auto t0 = Clock::now();
    const auto r = verify_brute_ideals({});
    const double t = seconds_since(t0);
    std::string detail;
    for (const auto& c : r.checks)
        if (c.name == "brute-force ideal count" || c.name == "family census" ||
            c.name == "descriptor ideals found by brute force")
            detail += (detail.empty() ? "" : "; ") + c.name + " " + c.actual + " (want " + c.expected + ")";
    return {r.passed() && t < kLimitOracle, detail + "; " + std::to_string(t) + " s"};
}

Outcome c6_length2() {
    const auto t0 = Clock::now();
    const auto r = verify_length2({});
    const double t = seconds_since(t0);
    std::string detail;
    for (const auto& c : r.checks)
        if (c.name == "linear codes of length 2" || c.name == "codes satisfying the twist condition" ||
            c.name == "classified shapes satisfy the twist condition")
            detail += (detail.empty() ? "" : "; ") + c.name + " " + c.actual + " (want " + c.expected + ")";
    return {r.passed() && t < kLimitLength2, detail + "; " + std::to_string(t) + " s"};
}

Outcome c7_distance() {
    const auto dec = example_dec();
    const auto table = bridge_table(dec);
    bool ok = true;
    std::ostringstream out;
    double scan = 0;
    std::set<std::string> groups_bad;
    std::map<std::string, std::set<std::string>> seen;
    for (const auto& c : we::code_parameters()) {
        const auto code = assemble(dec, table, {desc(c.desc[0].data(), 0, dec), desc(c.desc[1].data(), 1, dec),
                                                desc(c.desc[2].data(), 2, dec)});
        const auto t0 = Clock::now();
        const auto d = oracle::min_distance(code, dec);
        const double t = seconds_since(t0);
        if (c.log2_size == 15) scan = std::max(scan, t);
        const std::string label(c.label);
        const std::string group = label.substr(0, label.find(' '));
        const bool good = d && *d == c.distance && code.log2_size == c.log2_size;
        ok = ok && good;
        seen[group].insert("(14, 2^" + std::to_string(code.log2_size) + ", " + (d ? std::to_string(*d) : "-") + ")");
        if (!good) groups_bad.insert(group + " listed d " + std::to_string(c.distance));
    }
    for (const auto& [g, params] : seen) {
        out << g << ":";
        for (const auto& p : params) out << ' ' << p;
        out << "; ";
    }
    for (const auto& g : groups_bad) out << "mismatch " << g << "; ";
    out << "slowest 2^15 scan " << scan << " s";
    return {ok && scan < kLimitScan, out.str()};
}

Outcome c8_properties() {
    struct Case {
        unsigned m, n;
    };
    std::mt19937_64 rng(seed_from_env());
    std::size_t tuples = 0, failures = 0;
    for (const auto& c : {Case{1, 1}, Case{1, 3}, Case{1, 7}, Case{2, 1}}) {
        const auto ctx = FieldCtx::standard(c.m);
        const auto dec = Decomposition::build(ctx, c.n, ctx.one(), ctx.one());
        const auto table = bridge_table(dec);
        const CodeRing ring(dec);
        const WordPacker packer(ctx, dec.length());
        std::vector<std::vector<IdealDescriptor>> lists;
        for (std::size_t j = 0; j < dec.size(); ++j) lists.push_back(enumerate_ideals(dec, j));
        for (std::size_t s = 0; s < kPropertyTuplesPerCase; ++s) {
            std::vector<IdealDescriptor> descs;
            unsigned size = 0;
            for (const auto& l : lists) {
                descs.push_back(l[std::uniform_int_distribution<std::size_t>(0, l.size() - 1)(rng)]);
                size += ideal_log2_size(descs.back(), dec);
            }
            const auto code = assemble(dec, table, descs);
            const auto span = packer.span(code.basis);
            bool good = span.rank() == code.basis.size() * c.m && span.rank() == size && code.log2_size == size;
            for (const auto& w : code.basis)
                good = good && span.contains(packer.pack(ring.shift(w))) && span.contains(packer.pack(ring.u_times(w)));
            ++tuples;
            failures += !good;
        }
    }
    return {failures == 0 && tuples >= 500,
            std::to_string(tuples) + " random tuples, " + std::to_string(failures) + " failures"};
}

Outcome c9_psi() {
    const auto ctx = FieldCtx::standard(1);
    const auto dec = Decomposition::build(ctx, 3, ctx.one(), ctx.one());
    const CodeRing ring(dec);
    std::mt19937_64 rng(seed_from_env());
    auto random_poly = [&] {
        std::vector<FieldElem> v(4 * dec.n());
        for (auto& e : v) e = FieldElem{static_cast<std::uint32_t>(rng() & 1U)};
        return Poly(ctx, std::move(v));
    };
    const auto t0 = Clock::now();
    std::size_t failures = 0;
    for (std::size_t i = 0; i < kPsiPairs; ++i) {
        const AvElem a{random_poly(), random_poly()};
        const AvElem b{random_poly(), random_poly()};
        failures += !(psi(dec, av_mul(dec, a, b)) == ring.mul(psi(dec, a), psi(dec, b)));
        failures += !(psi(dec, av_add(a, b)) == ring.add(psi(dec, a), psi(dec, b)));
    }
    const double t = seconds_since(t0);
    return {failures == 0 && t < kLimitPsi,
            std::to_string(kPsiPairs) + " pairs, " + std::to_string(failures) + " failures, " + std::to_string(t) + " s"};
}

Outcome c10_units() {
    const auto r = verify_units({});
    std::size_t identity = 0, roots = 0;
    for (const auto& c : r.checks) (c.name.rfind("roots", 0) == 0 ? roots : identity) += 1;
    return {r.passed(), std::to_string(identity) + " identity checks, " + std::to_string(roots) +
                            " exhaustive root counts, " + std::to_string(r.failures()) + " failures"};
}

std::set<int> parse_list(const std::string& s) {
    std::set<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.insert(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::optional<std::set<int>> known;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--known-failures" && i + 1 < argc) known = parse_list(argv[++i]);
    }

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"factorization of x^7 - 1", c1_factorization},
        {"idempotents and units", c2_decomposition},
        {"bridge polynomial listing", c3_bridge},
        {"code count 258741", c4_count},
        {"brute-force ideals (m=1, d=1)", c5_oracle},
        {"length-2 codes over GF(2)[x]/<x^4>", c6_length2},
        {"distances of the length 14 codes", c7_distance},
        {"closure, independence and size of random codes", c8_properties},
        {"Psi is a ring homomorphism", c9_psi},
        {"unit identities and square-root counts", c10_units},
    };

    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) failed.insert(static_cast<int>(i + 1));
        std::printf("criterion %2zu %s: %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
    if (!known) return failed.empty() ? 0 : 1;
    if (failed == *known) {
        std::printf("failing set matches the documented known failures\n");
        return 0;
    }
    std::printf("failing set differs from the documented known failures\n");
    return 1;
}
