#include "constaclass/json_io.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace constaclass {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Json to_json(const FieldCtx& ctx) { return Json{{"m", ctx.m()}, {"modulus", ctx.modulus()}}; }

Json to_json(const Poly& p) { return Json(p.to_ints()); }

Poly poly_from_json(const FieldCtx& ctx, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an integer array");
    std::vector<FieldElem> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        if (!c.is_number_unsigned() && !c.is_number_integer())
            throw std::invalid_argument("polynomial coefficient must be an integer");
        const auto v = c.get<std::int64_t>();
        if (v < 0) throw std::invalid_argument("polynomial coefficient must be non-negative");
        coeffs.push_back(ctx.elem(static_cast<std::uint32_t>(v)));
    }
    return Poly(ctx, std::move(coeffs));
}

Json to_json(const Decomposition& dec) {
    Json out;
    out["field"] = to_json(dec.field());
    out["n"] = dec.n();
    out["length"] = dec.length();
    out["delta"] = dec.delta().bits;
    out["alpha"] = dec.alpha().bits;
    out["delta0"] = dec.delta0().bits;
    out["alpha0"] = dec.alpha0().bits;
    out["r"] = dec.size();
    Json factors = Json::array();
    for (std::size_t j = 0; j < dec.size(); ++j) {
        const auto& fd = dec.factor(j);
        factors.push_back(Json{{"index", j + 1},
                               {"f", to_json(fd.f)},
                               {"degree", fd.degree},
                               {"cofactor", to_json(fd.cofactor)},
                               {"bezout_g", to_json(fd.bezout_g)},
                               {"bezout_h", to_json(fd.bezout_h)},
                               {"epsilon", to_json(fd.epsilon)},
                               {"omega", to_json(fd.omega)}});
    }
    out["factors"] = std::move(factors);
    return out;
}

Json to_json(const BridgeTable& table, const Decomposition& dec) {
    Json out = Json::array();
    for (std::size_t j = 0; j < table.factors.size(); ++j) {
        const auto& fb = table.factors[j];
        Json g = Json::array();
        Json h = Json::array();
        for (std::size_t i = 0; i < fb.g.size(); ++i) {
            Json gi = Json::array();
            Json hi = Json::array();
            for (int l = 0; l < 4; ++l) {
                gi.push_back(to_json(fb.g[i][l]));
                hi.push_back(to_json(fb.h[i][l]));
            }
            g.push_back(std::move(gi));
            h.push_back(std::move(hi));
        }
        Json p = Json::array();
        Json q = Json::array();
        for (int l = 1; l < 4; ++l) {
            p.push_back(to_json(fb.p[l]));
            q.push_back(to_json(fb.q[l]));
        }
        out.push_back(Json{{"factor", j + 1},
                           {"degree", dec.factor(j).degree},
                           {"g", std::move(g)},
                           {"h", std::move(h)},
                           {"p", std::move(p)},
                           {"q", std::move(q)}});
    }
    return out;
}

Json to_json(const IdealDescriptor& desc, const Decomposition& dec) {
    Json out;
    out["factor"] = desc.factor + 1;
    out["family"] = std::string(family_name(desc.family));
    Json params = Json::object();
    const auto names = param_names(desc.family);
    for (std::size_t i = 0; i < names.size(); ++i) params[std::string(names[i])] = to_json(desc.params.at(i));
    out["params"] = std::move(params);
    if (desc.family == Family::III || desc.family == Family::VI) out["k"] = desc.k;
    out["log2_size"] = ideal_log2_size(desc, dec);
    return out;
}

IdealDescriptor descriptor_from_json(const Json& j, const Decomposition& dec) {
    if (!j.is_object()) throw std::invalid_argument("descriptor JSON must be an object");
    IdealDescriptor desc;
    const auto factor = j.at("factor").get<std::int64_t>();
    if (factor < 1) throw std::invalid_argument("descriptor factor indices start at 1");
    desc.factor = static_cast<std::size_t>(factor - 1);
    const auto name = j.at("family").get<std::string>();
    const auto fam = parse_family(name);
    if (!fam) throw std::invalid_argument("unknown ideal family '" + name + "'");
    desc.family = *fam;
    if (j.contains("k")) desc.k = j.at("k").get<unsigned>();
    const Json params = j.value("params", Json::object());
    for (auto pname : param_names(desc.family)) {
        const std::string key(pname);
        if (!params.contains(key))
            throw std::invalid_argument("family " + name + " needs parameter '" + key + "'");
        desc.params.push_back(poly_from_json(dec.field(), params.at(key)));
    }
    if (params.size() != desc.params.size())
        throw std::invalid_argument("unexpected parameter for family " + name);
    validate(desc, dec);
    return desc;
}

IdealDescriptor parse_descriptor(std::string_view text, std::size_t factor, const Decomposition& dec) {
    text = trim(text);
    const auto colon = text.find(':');
    const std::string name(trim(text.substr(0, colon)));
    const auto fam = parse_family(name);
    if (!fam) throw std::invalid_argument("unknown ideal family '" + name + "'");

    IdealDescriptor desc{factor, *fam, {}, 0};
    const auto names = param_names(desc.family);
    std::vector<std::optional<Poly>> slots(names.size());
    bool have_k = false;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto item = trim(rest.substr(0, comma));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos)
                throw std::invalid_argument("expected name=value in descriptor '" + std::string(text) + "'");
            const auto key = trim(item.substr(0, eq));
            const auto value = trim(item.substr(eq + 1));
            if (key == "k") {
                desc.k = static_cast<unsigned>(std::stoul(std::string(value)));
                have_k = true;
                continue;
            }
            std::size_t i = 0;
            while (i < names.size() && names[i] != key) ++i;
            if (i == names.size())
                throw std::invalid_argument("family " + name + " has no parameter '" + std::string(key) + "'");
            slots[i] = parse_poly(dec.field(), value);
        }
    }
    if ((desc.family == Family::III || desc.family == Family::VI) && !have_k)
        throw std::invalid_argument("family " + name + " needs k");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!slots[i]) throw std::invalid_argument("family " + name + " needs parameter '" + std::string(names[i]) + "'");
        desc.params.push_back(*slots[i]);
    }
    validate(desc, dec);
    return desc;
}

std::string to_string(const IdealDescriptor& desc) {
    std::string out(family_name(desc.family));
    const auto names = param_names(desc.family);
    char sep = ':';
    for (std::size_t i = 0; i < names.size(); ++i) {
        out += sep;
        out += names[i];
        out += '=';
        out += desc.params.at(i).to_string();
        sep = ',';
    }
    if (desc.family == Family::III || desc.family == Family::VI) {
        out += sep;
        out += "k=" + std::to_string(desc.k);
    }
    return out;
}

Json to_json(const CodeWord& w) {
    Json out = Json::array();
    for (const auto& e : w.entries) out.push_back(Json{e.a[0].bits, e.a[1].bits, e.a[2].bits, e.a[3].bits});
    return out;
}

Json to_json(const ConstaCode& code, const Decomposition& dec) {
    Json out;
    Json descs = Json::array();
    for (const auto& d : code.descriptors) descs.push_back(to_json(d, dec));
    out["descriptors"] = std::move(descs);
    out["log2_size"] = code.log2_size;
    Json basis = Json::array();
    for (const auto& w : code.basis) basis.push_back(to_json(w));
    out["basis"] = std::move(basis);
    return out;
}

std::string to_text(const CodeWord& w, const CodeRing& ring) {
    const auto layers = ring.to_layers(w);
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (layers[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 1) out += "u";
        if (k > 1) out += "u^" + std::to_string(k);
        out += "(" + layers[k].to_string() + ")";
    }
    return out.empty() ? "0" : out;
}

}  // namespace constaclass
