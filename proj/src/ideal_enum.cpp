#include "constaclass/ideal_enum.hpp"

#include <stdexcept>
#include <string>

namespace constaclass {

namespace {

constexpr std::array<std::string_view, 2> kParamsI = {"c1", "c2"};
constexpr std::array<std::string_view, 1> kParamsB = {"b"};
constexpr std::array<std::string_view, 1> kParamsC = {"c"};

}  // namespace

std::string_view family_name(Family f) noexcept {
    switch (f) {
        case Family::I: return "I";
        case Family::II_1: return "II-1";
        case Family::II_2: return "II-2";
        case Family::II_3: return "II-3";
        case Family::III: return "III";
        case Family::IV_1: return "IV-1";
        case Family::IV_2: return "IV-2";
        case Family::IV_3: return "IV-3";
        case Family::V: return "V";
        case Family::VI: return "VI";
    }
    return "?";
}

std::span<const Family> scheme_families(Scheme scheme) noexcept {
    const std::span<const Family> all = kAllFamilies;
    return scheme == Scheme::Complete ? all : all.first(all.size() - 1);
}

std::string_view scheme_name(Scheme scheme) noexcept { return scheme == Scheme::Complete ? "complete" : "stated"; }

std::optional<Scheme> parse_scheme(std::string_view text) {
    if (text == "stated") return Scheme::Stated;
    if (text == "complete") return Scheme::Complete;
    return std::nullopt;
}

std::optional<Family> parse_family(std::string_view text) {
    for (auto f : kAllFamilies)
        if (family_name(f) == text) return f;
    return std::nullopt;
}

std::vector<Family> parse_family_filter(std::string_view text) {
    std::vector<Family> out;
    for (auto f : kAllFamilies) {
        const auto name = family_name(f);
        if (name == text || (name.size() > text.size() && name.substr(0, text.size()) == text &&
                             name[text.size()] == '-'))
            out.push_back(f);
    }
    if (out.empty()) throw std::invalid_argument("unknown ideal family '" + std::string(text) + "'");
    return out;
}

std::span<const std::string_view> param_names(Family f) noexcept {
    switch (f) {
        case Family::I: return kParamsI;
        case Family::II_2: return kParamsB;
        case Family::II_3:
        case Family::IV_2:
        case Family::IV_3:
        case Family::V: return kParamsC;
        default: return {};
    }
}

unsigned family_size_units(Family f, unsigned k) {
    switch (f) {
        case Family::I: return 4;
        case Family::II_1: return 1;
        case Family::II_2: return 2;
        case Family::II_3: return 3;
        case Family::III: return 8 - 2 * k;
        case Family::IV_1: return 7;
        case Family::IV_2: return 6;
        case Family::IV_3: return 5;
        case Family::V: return 4;
        case Family::VI: return 7 - 2 * k;
    }
    return 0;
}

BigInt count_formula(unsigned m, unsigned d) {
    if (m == 0 || d == 0) throw std::invalid_argument("count_formula needs m, d >= 1");
    const BigInt t = BigInt(1) << (m * d);
    return t * t + 5 * t + 7;
}

BigInt count_ideals(unsigned m, unsigned d, Scheme scheme) {
    return count_formula(m, d) + (scheme == Scheme::Complete ? 2 : 0);
}

BigInt family_count(Family f, unsigned m, unsigned d) {
    const BigInt t = BigInt(1) << (m * d);
    switch (f) {
        case Family::I: return t * t;
        case Family::III: return 5;
        case Family::VI: return 2;
        case Family::II_1:
        case Family::IV_1: return 1;
        default: return t;
    }
}

void validate(const IdealDescriptor& desc, const Decomposition& dec) {
    if (desc.factor >= dec.size())
        throw std::invalid_argument("descriptor factor index " + std::to_string(desc.factor + 1) + " out of range");
    const auto d = static_cast<int>(dec.factor(desc.factor).degree);
    const auto names = param_names(desc.family);
    if (desc.params.size() != names.size())
        throw std::invalid_argument("family " + std::string(family_name(desc.family)) + " takes " +
                                    std::to_string(names.size()) + " parameter(s)");
    for (const auto& p : desc.params) {
        if (!(p.ctx() == dec.field())) throw std::invalid_argument("descriptor parameter over the wrong field");
        if (p.degree() >= d)
            throw std::invalid_argument("descriptor parameter " + p.to_string() + " has degree >= d_j = " +
                                        std::to_string(d));
    }
    if (desc.family == Family::III && desc.k > 4) throw std::invalid_argument("family III needs 0 <= k <= 4");
    if (desc.family == Family::VI && (desc.k < 1 || desc.k > 2))
        throw std::invalid_argument("family VI needs k = 1 or 2");
    if (desc.family != Family::III && desc.family != Family::VI && desc.k != 0)
        throw std::invalid_argument("only families III and VI take k");
}

unsigned ideal_log2_size(const IdealDescriptor& desc, const Decomposition& dec) {
    validate(desc, dec);
    return family_size_units(desc.family, desc.k) * dec.field().m() * dec.factor(desc.factor).degree;
}

void for_each_ideal(const Decomposition& dec, std::size_t j, const std::function<void(const IdealDescriptor&)>& fn,
                    std::span<const Family> families) {
    if (j >= dec.size()) throw std::out_of_range("factor index out of range");
    const auto teich = teichmuller_set(dec.field(), dec.factor(j).degree);
    for (auto fam : kAllFamilies) {
        bool wanted = false;
        for (auto f : families) wanted = wanted || f == fam;
        if (!wanted) continue;
        IdealDescriptor desc{j, fam, {}, 0};
        switch (param_names(fam).size()) {
            case 0:
                if (fam == Family::III || fam == Family::VI) {
                    const unsigned lo = fam == Family::III ? 0 : 1;
                    const unsigned hi = fam == Family::III ? 4 : 2;
                    for (unsigned k = lo; k <= hi; ++k) {
                        desc.k = k;
                        fn(desc);
                    }
                } else {
                    fn(desc);
                }
                break;
            case 1:
                for (auto t : teich) {
                    desc.params = {t};
                    fn(desc);
                }
                break;
            case 2:
                for (auto c1 : teich)
                    for (auto c2 : teich) {
                        desc.params = {c1, c2};
                        fn(desc);
                    }
                break;
        }
    }
}

std::vector<IdealDescriptor> enumerate_ideals(const Decomposition& dec, std::size_t j,
                                              std::span<const Family> families) {
    std::vector<IdealDescriptor> out;
    for_each_ideal(dec, j, [&](const IdealDescriptor& d) { out.push_back(d); }, families);
    return out;
}

ChainRing local_ring(const Decomposition& dec, std::size_t j) { return ChainRing(dec.factor(j).f); }

std::vector<ModuleRow> ideal_generators(const IdealDescriptor& desc, const Decomposition& dec) {
    validate(desc, dec);
    const auto& fd = dec.factor(desc.factor);
    const Poly f4 = dec.local_modulus(desc.factor);
    const auto& ctx = dec.field();
    const Poly& f = fd.f;
    const Poly& w = fd.omega;
    const Poly zero(ctx);
    const Poly one = Poly::one(ctx);
    const Poly f2 = f * f;
    const Poly f3 = f2 * f;
    auto r = [&](const Poly& p) { return p % f4; };

    switch (desc.family) {
        case Family::I:
            return {{r(f * (w + f * desc.params[0] + f2 * desc.params[1])), one}};
        case Family::II_1:
            return {{zero, f3}};
        case Family::II_2:
            return {{r(f3 * desc.params[0]), f2}};
        case Family::II_3:
            return {{r(f2 * (w + f * desc.params[0])), f}};
        case Family::III: {
            const Poly fk = r(pow(f, desc.k));
            return {{fk, zero}, {zero, fk}};
        }
        case Family::IV_1:
            return {{zero, one}, {f, zero}};
        case Family::IV_2:
            return {{r(f * desc.params[0]), one}, {f2, zero}};
        case Family::IV_3:
            return {{r(f * (w + f * desc.params[0])), one}, {f3, zero}};
        case Family::V:
            return {{r(f2 * desc.params[0]), f}, {f3, zero}};
        case Family::VI:
            return {{r(pow(f, desc.k + 1)), zero}, {zero, r(pow(f, desc.k))}};
    }
    throw std::logic_error("unhandled family");
}

Submodule2 ideal_submodule(const IdealDescriptor& desc, const Decomposition& dec, const ChainRing& ring) {
    const auto gens = ideal_generators(desc, dec);
    return Submodule2::generated_by(ring, gens);
}

ModuleRow v_twist(const ModuleRow& row, const Poly& omega_sq_pi_sq, const ChainRing& ring) {
    return {ring.mul(omega_sq_pi_sq, row.second), ring.reduce(row.first)};
}

}  // namespace constaclass
