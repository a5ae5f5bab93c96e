// constaclass: decompose, enumerate, build, verify and distance front end.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "constaclass/code_builder.hpp"
#include "constaclass/decompose.hpp"
#include "constaclass/ideal_enum.hpp"
#include "constaclass/json_io.hpp"
#include "constaclass/oracle.hpp"
#include "constaclass/verify.hpp"

using namespace constaclass;

namespace {

struct Job {
    unsigned m = 1;
    unsigned n = 1;
    std::uint32_t delta = 1;
    std::uint32_t alpha = 1;
    std::optional<std::uint32_t> modulus;
    std::string format = "json";
    std::string output;
    std::string scheme = "stated";

    FieldCtx field() const { return modulus ? FieldCtx(m, *modulus) : FieldCtx::standard(m); }
    Decomposition decomposition() const {
        const auto ctx = field();
        return Decomposition::build(ctx, n, ctx.elem(delta), ctx.elem(alpha), seed_from_env());
    }
    Scheme parsed_scheme() const {
        const auto s = parse_scheme(scheme);
        if (!s) throw std::invalid_argument("scheme must be 'stated' or 'complete'");
        return *s;
    }
    bool text() const { return format == "text"; }
};

void add_ring_options(CLI::App* app, Job& job) {
    app->add_option("-m", job.m, "extension degree of GF(2^m)")->check(CLI::Range(1, 16));
    app->add_option("-n", job.n, "odd n; codes have length 2n")->check(CLI::PositiveNumber);
    app->add_option("--delta", job.delta, "delta as a field-element integer");
    app->add_option("--alpha", job.alpha, "alpha as a field-element integer");
    app->add_option("--modulus", job.modulus, "field modulus as a GF(2) bit mask (default: first irreducible)");
}

void add_output_options(CLI::App* app, Job& job) {
    app->add_option("--format", job.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app->add_option("-o,--output", job.output, "write to a file instead of stdout");
}

void add_scheme_option(CLI::App* app, Job& job) {
    app->add_option("--scheme", job.scheme, "stated (families I-V) or complete (adds VI)")
        ->check(CLI::IsMember({"stated", "complete"}));
}

void emit(const Job& job, const std::string& text) {
    if (job.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(job.output);
    if (!out) throw std::runtime_error("cannot open " + job.output);
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string field_name(const FieldCtx& ctx) { return "GF(2^" + std::to_string(ctx.m()) + ")"; }

int cmd_decompose(const Job& job, bool with_bridge) {
    const auto dec = job.decomposition();
    if (!job.text()) {
        Json j = to_json(dec);
        if (with_bridge) j["bridge"] = to_json(bridge_table(dec), dec);
        emit(job, dump(j));
        return 0;
    }
    std::ostringstream out;
    out << "x^" << dec.n() << " - " << dec.delta0().bits << " over " << field_name(dec.field()) << ": r = " << dec.size()
        << "\n";
    for (std::size_t j = 0; j < dec.size(); ++j) {
        const auto& fd = dec.factor(j);
        const auto s = std::to_string(j + 1);
        out << "f_" << s << " = " << fd.f.to_string() << "  (d = " << fd.degree << ")\n";
        out << "eps_" << s << " = " << fd.epsilon.to_string() << "\n";
        out << "omega_" << s << " = " << fd.omega.to_string() << "\n";
    }
    if (with_bridge) {
        const auto table = bridge_table(dec);
        for (std::size_t j = 0; j < dec.size(); ++j) {
            const auto& fb = table.factors[j];
            const auto s = "^(" + std::to_string(j + 1) + ")";
            for (std::size_t i = 0; i < fb.g.size(); ++i)
                for (int l = 0; l < 4; ++l) {
                    const auto idx = std::to_string(i) + "," + std::to_string(l);
                    out << "g_" << idx << s << " = " << fb.g[i][l].to_string() << "; h_" << idx << s << " = "
                        << fb.h[i][l].to_string() << "\n";
                }
            for (int l = 1; l < 4; ++l)
                out << "p_" << l << s << " = " << fb.p[l].to_string() << "; q_" << l << s << " = "
                    << fb.q[l].to_string() << "\n";
        }
    }
    emit(job, out.str());
    return 0;
}

int cmd_enumerate(const Job& job, bool count_only, const std::string& family, std::size_t factor, bool tuples) {
    const auto dec = job.decomposition();
    const auto scheme = job.parsed_scheme();
    std::vector<Family> families;
    for (auto f : scheme_families(scheme)) families.push_back(f);
    if (!family.empty()) {
        const auto wanted = parse_family_filter(family);
        std::erase_if(families, [&](Family f) { return std::find(wanted.begin(), wanted.end(), f) == wanted.end(); });
        if (families.empty()) throw std::invalid_argument("family " + family + " is not part of the selected scheme");
    }
    if (factor > dec.size()) throw std::invalid_argument("factor index out of range (r = " + std::to_string(dec.size()) + ")");

    std::vector<std::vector<IdealDescriptor>> lists;
    BigInt total = 1;
    for (std::size_t j = 0; j < dec.size(); ++j) {
        if (factor != 0 && j + 1 != factor) continue;
        BigInt count = 0;
        for (auto f : families) count += family_count(f, dec.field().m(), dec.factor(j).degree);
        total *= count;
        lists.push_back(count_only ? std::vector<IdealDescriptor>{} : enumerate_ideals(dec, j, families));
    }

    if (count_only) {
        emit(job, job.text() ? total.str() + "\n" : dump(Json{{"total", total.str()}}));
        return 0;
    }
    if (tuples) {
        // One line per code, factors in order; the stream has `total` lines.
        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!job.output.empty()) {
            file.open(job.output);
            if (!file) throw std::runtime_error("cannot open " + job.output);
            out = &file;
        }
        std::vector<std::size_t> idx(lists.size(), 0);
        if (std::any_of(lists.begin(), lists.end(), [](const auto& l) { return l.empty(); })) return 0;
        for (;;) {
            if (job.text()) {
                for (std::size_t j = 0; j < lists.size(); ++j) *out << (j ? " | " : "") << to_string(lists[j][idx[j]]);
                *out << "\n";
            } else {
                Json row = Json::array();
                for (std::size_t j = 0; j < lists.size(); ++j) row.push_back(to_json(lists[j][idx[j]], dec));
                *out << row.dump() << "\n";
            }
            std::size_t j = lists.size();
            while (j > 0 && ++idx[j - 1] == lists[j - 1].size()) idx[--j] = 0;
            if (j == 0) break;
        }
        return 0;
    }
    if (job.text()) {
        std::ostringstream out;
        for (const auto& list : lists) {
            if (list.empty()) continue;
            const auto j = list.front().factor;
            out << "factor " << j + 1 << " (f = " << dec.factor(j).f.to_string() << "): " << list.size() << " ideals\n";
            for (const auto& d : list) out << "  " << to_string(d) << "  log2|C| = " << ideal_log2_size(d, dec) << "\n";
        }
        out << "total " << total.str() << "\n";
        emit(job, out.str());
        return 0;
    }
    Json fs = Json::array();
    for (const auto& list : lists) {
        if (list.empty()) continue;
        Json ideals = Json::array();
        for (const auto& d : list) ideals.push_back(to_json(d, dec));
        const auto j = list.front().factor;
        fs.push_back(Json{{"factor", j + 1}, {"f", to_json(dec.factor(j).f)}, {"count", list.size()}, {"ideals", ideals}});
    }
    emit(job, dump(Json{{"scheme", std::string(scheme_name(scheme))}, {"factors", fs}, {"total", total.str()}}));
    return 0;
}

std::vector<IdealDescriptor> read_descriptors(const Decomposition& dec, const std::vector<std::string>& texts,
                                              const std::string& json_path) {
    std::vector<IdealDescriptor> descs;
    if (!json_path.empty()) {
        std::ifstream in(json_path);
        if (!in) throw std::runtime_error("cannot open " + json_path);
        const auto j = Json::parse(in);
        const Json& list = j.is_object() ? j.at("descriptors") : j;
        for (const auto& d : list) descs.push_back(descriptor_from_json(d, dec));
    } else {
        for (std::size_t j = 0; j < texts.size(); ++j) descs.push_back(parse_descriptor(texts[j], j, dec));
    }
    if (descs.size() != dec.size())
        throw std::invalid_argument("descriptor tuple has " + std::to_string(descs.size()) + " entries but r = " +
                                    std::to_string(dec.size()));
    return descs;
}

int cmd_build(const Job& job, const std::vector<std::string>& texts, const std::string& json_path) {
    const auto dec = job.decomposition();
    const auto code = assemble(dec, bridge_table(dec), read_descriptors(dec, texts, json_path));
    if (!job.text()) {
        emit(job, dump(to_json(code, dec)));
        return 0;
    }
    const CodeRing ring(dec);
    std::ostringstream out;
    for (const auto& d : code.descriptors) out << "C_" << d.factor + 1 << ": " << to_string(d) << "\n";
    out << "log2|C| = " << code.log2_size << ", " << code.basis.size() << " basis words\n";
    for (const auto& w : code.basis) out << "  " << to_text(w, ring) << "\n";
    emit(job, out.str());
    return 0;
}

int cmd_distance(const Job& job, const std::vector<std::string>& texts, const std::string& json_path,
                 std::uint64_t cap_log2) {
    const auto dec = job.decomposition();
    const auto code = assemble(dec, bridge_table(dec), read_descriptors(dec, texts, json_path));
    const auto d = oracle::min_distance(code, dec, std::uint64_t{1} << cap_log2);
    if (job.text()) {
        emit(job, "(" + std::to_string(dec.length()) + ", 2^" + std::to_string(code.log2_size) + ", " +
                      (d ? std::to_string(*d) : std::string("-")) + ")\n");
    } else {
        Json j{{"length", dec.length()}, {"log2_size", code.log2_size}};
        j["distance"] = d ? Json(*d) : Json(nullptr);
        emit(job, dump(j));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify, enumerate, build and verify (delta + alpha u^2)-constacyclic codes of length 2n over "
                 "GF(2^m)[u]/<u^4>"};
    app.require_subcommand(1);
    Job job;

    auto* dec_cmd = app.add_subcommand("decompose", "factor x^n - delta0 and print idempotents and units");
    add_ring_options(dec_cmd, job);
    add_output_options(dec_cmd, job);
    bool with_bridge = false;
    dec_cmd->add_flag("--bridge", with_bridge, "include the bridge polynomials g, h, p, q");

    auto* enum_cmd = app.add_subcommand("enumerate", "list ideal descriptors per factor and the code count");
    add_ring_options(enum_cmd, job);
    add_output_options(enum_cmd, job);
    add_scheme_option(enum_cmd, job);
    bool count_only = false;
    bool tuples = false;
    std::string family;
    std::size_t factor = 0;
    enum_cmd->add_flag("--count-only", count_only, "print only the number of codes");
    enum_cmd->add_flag("--tuples", tuples, "stream every descriptor tuple, one code per line");
    enum_cmd->add_option("--family", family, "restrict to a family (I, II, II-2, ...)");
    enum_cmd->add_option("--factor", factor, "restrict to one factor (1-based)");

    std::vector<std::string> desc_texts;
    std::string desc_json;
    auto* build_cmd = app.add_subcommand("build", "assemble a code from one descriptor per factor");
    auto* dist_cmd = app.add_subcommand("distance", "minimum Hamming distance of an assembled code");
    std::uint64_t cap_log2 = 24;
    for (auto* c : {build_cmd, dist_cmd}) {
        add_ring_options(c, job);
        add_output_options(c, job);
        c->add_option("--desc", desc_texts, "descriptor per factor, e.g. II-2:b=1+x or III:k=4 (repeat in factor order)");
        c->add_option("--desc-json", desc_json, "JSON file with a descriptor array");
    }
    dist_cmd->add_option("--cap", cap_log2, "refuse codes larger than 2^cap")->check(CLI::Range(1, 40));

    VerifyOptions vopt;
    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite; exit status 1 on any failed check");
    add_ring_options(verify_cmd, job);
    add_output_options(verify_cmd, job);
    add_scheme_option(verify_cmd, job);
    verify_cmd->add_option("--suite", suite, "verification suite")
        ->check(CLI::IsMember({"worked-example", "brute-ideals", "closure", "units", "length2", "all"}));
    verify_cmd->add_option("-d", vopt.d, "residue degree for brute-ideals")->check(CLI::Range(1, 16));
    verify_cmd->add_option("--sample", vopt.sample, "random tuples for closure");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec_cmd->parsed()) return cmd_decompose(job, with_bridge);
        if (enum_cmd->parsed()) return cmd_enumerate(job, count_only, family, factor, tuples);
        if (build_cmd->parsed()) return cmd_build(job, desc_texts, desc_json);
        if (dist_cmd->parsed()) return cmd_distance(job, desc_texts, desc_json, cap_log2);
        if (verify_cmd->parsed()) {
            vopt.scheme = job.parsed_scheme();
            vopt.seed = seed_from_env();
            vopt.m = job.m;
            vopt.n = verify_cmd->count("-n") ? job.n : 3;
            vopt.delta = job.delta;
            vopt.alpha = job.alpha;
            const auto report = run_suite(suite, vopt);
            emit(job, job.text() ? report.to_text() : dump(report.to_json()));
            return report.passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
