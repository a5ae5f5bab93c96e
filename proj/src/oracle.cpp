#include "constaclass/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace constaclass::oracle {

unsigned SmallSpace::rank() const noexcept {
    return static_cast<unsigned>(std::count_if(by_pivot_.begin(), by_pivot_.end(), [](auto r) { return r != 0; }));
}

std::uint32_t SmallSpace::reduce(std::uint32_t v) const noexcept {
    for (unsigned p = 32; p-- > 0;)
        if (((v >> p) & 1U) != 0 && by_pivot_[p] != 0) v ^= by_pivot_[p];
    return v;
}

bool SmallSpace::insert(std::uint32_t v) {
    if (bits_ < 32 && (v >> bits_) != 0) throw std::invalid_argument("vector outside the ambient space");
    v = reduce(v);
    if (v == 0) return false;
    const unsigned p = 31 - static_cast<unsigned>(std::countl_zero(v));
    for (auto& r : by_pivot_)
        if (((r >> p) & 1U) != 0) r ^= v;
    by_pivot_[p] = v;
    return true;
}

std::vector<std::uint32_t> SmallSpace::rows() const {
    std::vector<std::uint32_t> out;
    for (unsigned p = 32; p-- > 0;)
        if (by_pivot_[p] != 0) out.push_back(by_pivot_[p]);
    return out;
}

std::vector<std::uint32_t> SmallSpace::elements() const {
    const auto r = rows();
    std::vector<std::uint32_t> out;
    out.reserve(std::size_t{1} << r.size());
    std::uint32_t cur = 0;
    out.push_back(cur);
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << r.size()); ++g) {
        cur ^= r[static_cast<std::size_t>(std::countr_zero(g))];
        out.push_back(cur);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SmallSpace operator+(const SmallSpace& a, const SmallSpace& b) {
    SmallSpace s = a;
    for (auto r : b.by_pivot_)
        if (r != 0) s.insert(r);
    return s;
}

ExhaustiveRing::ExhaustiveRing(ChainRing ring, Poly twist)
    : ring_(std::move(ring)), twist_(std::move(twist)), bits_(0), half_bits_(0) {
    const unsigned m = ring_.field().m();
    const unsigned d = ring_.residue_degree();
    if (8 * m * d > kMaxBits)
        throw std::length_error("exhaustive ring needs 8*m*d <= 16 (got m*d = " + std::to_string(m * d) + ")");
    twist_ = ring_.reduce(twist_);
    half_bits_ = 4 * m * d;
    bits_ = 2 * half_bits_;

    // scalars beta^k x^i (as elements of K), then v
    for (unsigned i = 0; i < 4 * d; ++i) {
        for (unsigned k = 0; k < m; ++k) {
            const Poly s = Poly::monomial(ring_.field(), FieldElem{std::uint32_t{1} << k}, i);
            std::vector<std::uint32_t> col(bits_);
            for (unsigned b = 0; b < bits_; ++b) {
                const auto e = decode(std::uint32_t{1} << b);
                col[b] = encode({ring_.mul(s, e.first), ring_.mul(s, e.second)});
            }
            action_.push_back(std::move(col));
        }
    }
    std::vector<std::uint32_t> vcol(bits_);
    for (unsigned b = 0; b < bits_; ++b) {
        const auto e = decode(std::uint32_t{1} << b);
        vcol[b] = encode({ring_.mul(twist_, e.second), e.first});
    }
    action_.push_back(std::move(vcol));
}

ExhaustiveRing ExhaustiveRing::for_factor(const Decomposition& dec, std::size_t j) {
    ChainRing k(dec.factor(j).f);
    const Poly& w = dec.factor(j).omega;
    Poly twist = k.mul(k.mul(w, w), k.pi_pow(2));
    return ExhaustiveRing(std::move(k), std::move(twist));
}

std::uint32_t ExhaustiveRing::encode(const ModuleRow& e) const {
    const unsigned m = ring_.field().m();
    const unsigned len = 4 * ring_.residue_degree();
    std::uint32_t out = 0;
    const Poly parts[2] = {ring_.reduce(e.first), ring_.reduce(e.second)};
    for (unsigned s = 0; s < 2; ++s)
        for (unsigned i = 0; i < len; ++i) out |= parts[s].coeff(i).bits << ((s * len + i) * m);
    return out;
}

ModuleRow ExhaustiveRing::decode(std::uint32_t e) const {
    const unsigned m = ring_.field().m();
    const unsigned len = 4 * ring_.residue_degree();
    const std::uint32_t digit = (std::uint32_t{1} << m) - 1;
    std::vector<FieldElem> c[2];
    for (unsigned s = 0; s < 2; ++s)
        for (unsigned i = 0; i < len; ++i) c[s].push_back(FieldElem{(e >> ((s * len + i) * m)) & digit});
    return {Poly(ring_.field(), std::move(c[0])), Poly(ring_.field(), std::move(c[1]))};
}

std::uint32_t ExhaustiveRing::mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = decode(a);
    const auto y = decode(b);
    const Poly p11 = ring_.mul(x.second, y.second);
    return encode({ring_.mul(x.first, y.first) + ring_.mul(twist_, p11),
                   ring_.mul(x.first, y.second) + ring_.mul(x.second, y.first)});
}

std::uint32_t ExhaustiveRing::apply(std::size_t scalar, std::uint32_t e) const noexcept {
    std::uint32_t out = 0;
    const auto& col = action_[scalar];
    while (e != 0) {
        out ^= col[static_cast<std::size_t>(std::countr_zero(e))];
        e &= e - 1;
    }
    return out;
}

std::uint32_t ExhaustiveRing::times_v(std::uint32_t e) const { return apply(action_.size() - 1, e); }

SmallSpace ExhaustiveRing::generated(std::span<const std::uint32_t> gens, bool with_v) const {
    SmallSpace s(bits_);
    const std::size_t k_scalars = action_.size() - 1;
    for (auto g : gens) {
        for (std::size_t t = 0; t < k_scalars; ++t) s.insert(apply(t, g));
        if (with_v) {
            const auto vg = times_v(g);
            for (std::size_t t = 0; t < k_scalars; ++t) s.insert(apply(t, vg));
        }
    }
    return s;
}

BruteIdeals brute_submodules(const ExhaustiveRing& ring, bool with_v) {
    std::set<SmallSpace> principal;
    for (std::uint32_t e = 0; e < ring.size(); ++e) {
        const std::uint32_t g[1] = {e};
        principal.insert(ring.generated(g, with_v));
    }
    const std::vector<SmallSpace> prin(principal.begin(), principal.end());
    std::set<SmallSpace> all(principal.begin(), principal.end());
    for (std::size_t a = 0; a < prin.size(); ++a)
        for (std::size_t b = a + 1; b < prin.size(); ++b) all.insert(prin[a] + prin[b]);
    BruteIdeals out;
    out.principal = prin.size();
    out.from_pairs = all.size();

    std::vector<SmallSpace> frontier(all.begin(), all.end());
    while (!frontier.empty()) {
        std::vector<SmallSpace> next;
        for (const auto& s : frontier)
            for (const auto& p : prin) {
                auto sum = s + p;
                if (all.insert(sum).second) next.push_back(std::move(sum));
            }
        frontier = std::move(next);
    }
    out.after_sweep = all.size();
    out.ideals.assign(all.begin(), all.end());
    return out;
}

SmallSpace expand_descriptor(const ExhaustiveRing& ring, const IdealDescriptor& desc, const Decomposition& dec) {
    if (!(ring.base().pi() == dec.factor(desc.factor).f))
        throw std::invalid_argument("exhaustive ring is not K_j for the descriptor's factor");
    std::vector<std::uint32_t> gens;
    for (const auto& row : ideal_generators(desc, dec)) gens.push_back(ring.encode(row));
    return ring.generated(gens, true);
}

SmallSpace expand_matrix(const ExhaustiveRing& ring, const GenMatrix2& g) {
    std::vector<std::uint32_t> gens;
    for (const auto& row : g.rows) gens.push_back(ring.encode(row));
    return ring.generated(gens, false);
}

Linear2Result brute_linear2(const ChainRing& ring, const Poly& omega) {
    if (!ring.is_unit(omega)) throw std::invalid_argument("omega must be a unit");
    ExhaustiveRing er(ring, ring.mul(omega, ring.pi_pow(2)));
    auto found = brute_submodules(er, false);
    Linear2Result r;
    r.all = std::move(found.ideals);
    for (const auto& s : r.all) {
        const auto rows = s.rows();
        if (std::all_of(rows.begin(), rows.end(), [&](std::uint32_t e) { return s.contains(er.times_v(e)); }))
            r.closed.push_back(s);
    }
    return r;
}

std::optional<std::uint32_t> min_distance(const std::vector<BitWords>& rows, const simd::SlotLayout& layout,
                                          std::uint64_t cap) {
    const std::size_t k = rows.size();
    if (k == 0) return std::nullopt;
    if (k >= 63 || (std::uint64_t{1} << k) > cap)
        throw std::length_error("code of size 2^" + std::to_string(k) + " exceeds the distance cap");
    const std::size_t low = std::min<std::size_t>(k, 10);
    const std::size_t count = std::size_t{1} << low;
    const std::size_t words = layout.words;
    // word-major table of all combinations of the first `low` rows
    std::vector<std::uint64_t> planes(words * count, 0);
    for (std::size_t i = 1; i < count; ++i) {
        const std::size_t prev = i & (i - 1);
        const auto& r = rows[static_cast<std::size_t>(std::countr_zero(i))];
        for (std::size_t w = 0; w < words; ++w) planes[w * count + i] = planes[w * count + prev] ^ r[w];
    }
    std::vector<std::uint64_t> offset(words, 0);
    std::uint32_t best = simd::kNoWeight;
    const std::uint64_t outer = std::uint64_t{1} << (k - low);
    for (std::uint64_t g = 0; g < outer; ++g) {
        if (g != 0) simd::xor_into(offset.data(), rows[low + static_cast<std::size_t>(std::countr_zero(g))].data(), words);
        best = std::min(best, simd::min_weight_xor(planes.data(), count, offset.data(), layout));
        if (best == 1) break;
    }
    if (best == simd::kNoWeight) throw std::logic_error("nonzero code with no nonzero word: rows are dependent");
    return best;
}

std::optional<std::uint32_t> min_distance(const ConstaCode& code, const Decomposition& dec, std::uint64_t cap) {
    const WordPacker packer(dec.field(), dec.length());
    return min_distance(packer.span(code.basis).sorted_rows(), packer.layout(), cap);
}

std::optional<std::uint32_t> min_distance_reference(const ConstaCode& code, const Decomposition& dec,
                                                    std::uint64_t cap) {
    const WordPacker packer(dec.field(), dec.length());
    const auto space = packer.span(code.basis);
    if (space.rank() == 0) return std::nullopt;
    if (space.rank() >= 63 || (std::uint64_t{1} << space.rank()) > cap)
        throw std::length_error("code exceeds the distance cap");
    std::size_t best = SIZE_MAX;
    space.for_each_element([&](std::span<const std::uint64_t> v) {
        const auto wt = packer.unpack(v).weight();
        if (wt != 0) best = std::min(best, wt);
    });
    return static_cast<std::uint32_t>(best);
}

bool in_alphabet(const RElem& e, Alphabet a) noexcept {
    for (const auto& c : e.a)
        if (c.bits > 1) return false;
    switch (a) {
        case Alphabet::S1: return e.a[0].bits == 0;
        case Alphabet::S2: return e.a[0].bits == 0 && e.a[1].bits == 0;
        case Alphabet::S3: return e.a[0].bits == 0 && e.a[1].bits == 0 && e.a[2].bits == 0;
    }
    return false;
}

RElem tau(const RElem& e) noexcept {
    RElem r = e;
    r.a[3] = e.a[1] + e.a[3];
    return r;
}

AdditiveCodeView AdditiveCodeView::from_code(const ConstaCode& code, const Decomposition& dec, Alphabet alphabet) {
    if (dec.field().m() != 1) throw std::invalid_argument("additive views are defined over GF(2) only");
    const WordPacker packer(dec.field(), dec.length());
    const auto space = packer.span(code.basis);
    AdditiveCodeView view{alphabet, {}};
    space.for_each_element([&](std::span<const std::uint64_t> v) {
        auto w = packer.unpack(v);
        for (const auto& e : w.entries)
            if (!in_alphabet(e, alphabet)) throw std::invalid_argument("codeword entry outside the alphabet");
        view.words.push_back(std::move(w));
    });
    return view;
}

namespace {

std::vector<std::uint32_t> flatten(const CodeWord& w) {
    std::vector<std::uint32_t> out;
    out.reserve(w.size() * 4);
    for (const auto& e : w.entries)
        for (const auto& c : e.a) out.push_back(c.bits);
    return out;
}

}  // namespace

bool check_tau_constacyclic(const AdditiveCodeView& view, bool use_tau) {
    std::set<std::vector<std::uint32_t>> members;
    for (const auto& w : view.words) members.insert(flatten(w));
    for (const auto& w : view.words) {
        if (w.size() == 0) continue;
        CodeWord s = w;
        const auto last = w.entries.back();
        std::copy(w.entries.begin(), w.entries.end() - 1, s.entries.begin() + 1);
        s.entries[0] = use_tau ? tau(last) : last;
        if (!members.contains(flatten(s))) return false;
    }
    return true;
}

std::optional<std::uint32_t> min_distance(const AdditiveCodeView& view) {
    std::optional<std::uint32_t> best;
    for (const auto& w : view.words) {
        const auto wt = static_cast<std::uint32_t>(w.weight());
        if (wt != 0 && (!best || wt < *best)) best = wt;
    }
    return best;
}

SquareRootCounts square_root_counts(const Decomposition& dec, std::size_t j) {
    const auto& fd = dec.factor(j);
    const unsigned md = dec.field().m() * fd.degree;
    const ChainRing k(fd.f);
    const Poly w2 = k.mul(fd.omega, fd.omega);
    const Poly f2 = k.pi_pow(2);
    SquareRootCounts out;
    if (md <= 12) {
        out.checked_mod_f = true;
        const Poly target = w2 % fd.f;
        Poly last(dec.field());
        for (auto z : teichmuller_set(dec.field(), fd.degree))
            if ((z * z) % fd.f == target) {
                ++out.mod_f_solutions;
                last = z;
            }
        out.mod_f_is_omega = out.mod_f_solutions == 1 && last == fd.omega % fd.f;
    }
    if (md <= 8) {
        out.checked_mod_f2 = true;
        const Poly target = w2 % f2;
        std::set<std::vector<std::uint32_t>> found;
        for (const auto& z : residues_mod_pi_pow(k, 2))
            if ((z * z) % f2 == target) found.insert((z % f2).to_ints());
        std::set<std::vector<std::uint32_t>> expected;
        for (auto c : teichmuller_set(dec.field(), fd.degree)) expected.insert(((fd.omega + fd.f * c) % f2).to_ints());
        out.mod_f2_solutions = found.size();
        out.mod_f2_match_family = found == expected;
    }
    return out;
}

}  // namespace constaclass::oracle
