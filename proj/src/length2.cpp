#include "constaclass/length2.hpp"

#include <stdexcept>

#include "constaclass/decompose.hpp"

namespace constaclass {

std::vector<Poly> residues_mod_pi_pow(const ChainRing& ring, unsigned t) {
    if (t > ChainRing::kIndex) throw std::invalid_argument("residue depth exceeds the nilpotency index");
    const auto teich = teichmuller_set(ring.field(), ring.residue_degree());
    std::vector<Poly> out{ring.zero()};
    for (unsigned level = 0; level < t; ++level) {
        std::vector<Poly> next;
        next.reserve(out.size() * teich.size());
        for (const auto& base : out)
            for (auto digit : teich) next.push_back(ring.reduce(base + ring.pi_pow(level) * digit));
        out = std::move(next);
    }
    return out;
}

namespace {

bool congruent(const ChainRing& ring, const Poly& a, const Poly& b, unsigned k) {
    return ring.valuation(ring.reduce(a + b)) >= k;
}

}  // namespace

std::vector<GenMatrix2> classify_length2(const ChainRing& ring, const Poly& omega, Scheme scheme) {
    if (!ring.is_unit(omega)) throw std::invalid_argument("omega must be a unit of K");
    const Poly w = ring.reduce(omega);
    const Poly zero = ring.zero();
    const Poly one = ring.one();
    const Poly& p1 = ring.pi_pow(1);
    const Poly& p2 = ring.pi_pow(2);
    const Poly& p3 = ring.pi_pow(3);
    const auto t1 = residues_mod_pi_pow(ring, 1);
    const auto t2 = residues_mod_pi_pow(ring, 2);
    const auto t3 = residues_mod_pi_pow(ring, 3);
    auto sq = [&](const Poly& b) { return ring.mul(b, b); };

    std::vector<GenMatrix2> out;
    out.push_back({"K^2", {{one, zero}, {zero, one}}});
    for (const auto& b : t3)
        if (congruent(ring, sq(b), w, 2)) out.push_back({"I", {{ring.mul(p1, b), one}}});
    out.push_back({"II-1", {{zero, p3}}});
    for (const auto& b : t1) out.push_back({"II-2", {{ring.mul(p3, b), p2}}});
    for (const auto& b : t2)
        if (congruent(ring, sq(b), w, 1)) out.push_back({"II-3", {{ring.mul(p2, b), p1}}});
    for (unsigned k = 1; k <= 3; ++k) out.push_back({"III", {{ring.pi_pow(k), zero}, {zero, ring.pi_pow(k)}}});
    out.push_back({"IV-1", {{zero, one}, {p1, zero}}});
    for (const auto& z : t1) out.push_back({"IV-2", {{ring.mul(p1, z), one}, {p2, zero}}});
    for (const auto& z : t2)
        if (congruent(ring, sq(z), w, 1)) out.push_back({"IV-3", {{ring.mul(p1, z), one}, {p3, zero}}});
    for (const auto& z : t1) out.push_back({"V", {{ring.mul(p2, z), p1}, {p3, zero}}});
    if (scheme == Scheme::Complete)
        for (unsigned k = 1; k <= 2; ++k) out.push_back({"VI", {{zero, ring.pi_pow(k)}, {ring.pi_pow(k + 1), zero}}});
    out.push_back({"0", {}});
    return out;
}

std::vector<GenMatrix2> classify_length2_unrestricted(const ChainRing& ring) {
    const Poly zero = ring.zero();
    const Poly one = ring.one();
    auto pk = [&](unsigned k) { return ring.pi_pow(k); };
    auto pi_times = [&](unsigned t) {
        // pi * (K / pi^(t-1)), the multiples of pi inside K / pi^t
        std::vector<Poly> out;
        for (const auto& y : residues_mod_pi_pow(ring, t - 1)) out.push_back(ring.mul(pk(1), y));
        return out;
    };

    std::vector<GenMatrix2> out;
    out.push_back({"K^2", {{one, zero}, {zero, one}}});
    for (const auto& a : residues_mod_pi_pow(ring, 4)) out.push_back({"(i)", {{one, a}}});
    for (unsigned k = 1; k <= 3; ++k)
        for (const auto& a : residues_mod_pi_pow(ring, 4 - k)) out.push_back({"(ii)", {{pk(k), ring.mul(pk(k), a)}}});
    for (const auto& b : residues_mod_pi_pow(ring, 3)) out.push_back({"(iii)", {{ring.mul(pk(1), b), one}}});
    for (unsigned k = 1; k <= 3; ++k)
        for (const auto& b : residues_mod_pi_pow(ring, 3 - k))
            out.push_back({"(iv)", {{ring.mul(pk(k + 1), b), pk(k)}}});
    for (unsigned k = 1; k <= 3; ++k) out.push_back({"(v)", {{pk(k), zero}, {zero, pk(k)}}});
    for (unsigned t = 1; t <= 3; ++t)
        for (const auto& c : residues_mod_pi_pow(ring, t)) out.push_back({"(vi)", {{one, c}, {zero, pk(t)}}});
    for (unsigned k = 1; k <= 2; ++k)
        for (unsigned t = 1; t <= 3 - k; ++t)
            for (const auto& c : residues_mod_pi_pow(ring, t))
                out.push_back({"(vii)", {{pk(k), ring.mul(pk(k), c)}, {zero, pk(k + t)}}});
    for (unsigned t = 1; t <= 3; ++t)
        for (const auto& c : pi_times(t)) out.push_back({"(viii)", {{c, one}, {pk(t), zero}}});
    for (unsigned k = 1; k <= 2; ++k)
        for (unsigned t = 1; t <= 3 - k; ++t)
            for (const auto& c : pi_times(t))
                out.push_back({"(ix)", {{ring.mul(pk(k), c), pk(k)}, {pk(k + t), zero}}});
    out.push_back({"0", {}});
    return out;
}

bool closed_under_twist(const Submodule2& s, const ChainRing& ring, const Poly& omega) {
    const Poly twist = ring.mul(omega, ring.pi_pow(2));
    for (const auto& r : s.rows())
        if (!s.contains({ring.mul(twist, r.second), ring.reduce(r.first)})) return false;
    return true;
}

}  // namespace constaclass
