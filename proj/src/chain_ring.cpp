#include "constaclass/chain_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "constaclass/factor.hpp"

namespace constaclass {

ChainRing::ChainRing(Poly f) : pi_(std::move(f)), d_(0), modulus_(pi_.ctx()), powers_(kIndex + 1, modulus_) {
    if (!pi_.is_monic() || pi_.degree() < 1) throw std::invalid_argument("chain ring needs a monic f of degree >= 1");
    if (!is_irreducible(pi_)) throw std::invalid_argument("chain ring needs an irreducible f");
    d_ = static_cast<unsigned>(pi_.degree());
    powers_[0] = Poly::one(field());
    for (unsigned k = 1; k <= kIndex; ++k) powers_[k] = powers_[k - 1] * pi_;
    modulus_ = powers_[kIndex];
    powers_[kIndex] = Poly(field());
}

std::uint64_t ChainRing::residue_size() const {
    if (digit_bits() >= 64) throw std::length_error("residue field too large");
    return std::uint64_t{1} << digit_bits();
}

const Poly& ChainRing::pi_pow(unsigned k) const { return powers_.at(std::min(k, kIndex)); }

std::array<Poly, ChainRing::kIndex> ChainRing::expand(const Poly& a) const {
    std::array<Poly, kIndex> digits{zero(), zero(), zero(), zero()};
    Poly rest = reduce(a);
    for (unsigned k = 0; k < kIndex && !rest.is_zero(); ++k) {
        auto [q, r] = divmod(rest, pi_);
        digits[k] = std::move(r);
        rest = std::move(q);
    }
    return digits;
}

Poly ChainRing::compose(std::span<const Poly> digits) const {
    Poly acc = zero();
    for (std::size_t k = digits.size(); k-- > 0;) acc = acc * pi_ + digits[k];
    return reduce(acc);
}

unsigned ChainRing::valuation(const Poly& a) const {
    const auto digits = expand(a);
    for (unsigned k = 0; k < kIndex; ++k)
        if (!digits[k].is_zero()) return k;
    return kIndex;
}

Poly ChainRing::inverse(const Poly& unit) const {
    if (!is_unit(unit)) throw std::domain_error("inverse of a non-unit in the chain ring");
    return inverse_mod(unit, modulus_);
}

Poly ChainRing::truncate(const Poly& a, unsigned k) const {
    if (k >= kIndex) return reduce(a);
    return reduce(a) % powers_[k];
}

Poly ChainRing::divide_by_pi_pow(const Poly& a, unsigned k) const {
    const auto digits = expand(a);
    for (unsigned i = 0; i < std::min(k, kIndex); ++i)
        if (!digits[i].is_zero()) throw std::domain_error("element not divisible by the requested power of pi");
    if (k >= kIndex) return zero();
    return compose(std::span<const Poly>(digits).subspan(k));
}

ChainRing::UnitPart ChainRing::split(const Poly& a) const {
    const auto digits = expand(a);
    unsigned v = 0;
    while (v < kIndex && digits[v].is_zero()) ++v;
    if (v == kIndex) throw std::domain_error("zero has no unit part");
    // a = pi^v * (d_v + pi d_{v+1} + ...); pad the unit with a zero tail.
    return {v, compose(std::span<const Poly>(digits).subspan(v))};
}

Submodule2 Submodule2::generated_by(const ChainRing& ring, std::span<const ModuleRow> input) {
    Submodule2 s(ring);
    std::vector<ModuleRow> rows;
    rows.reserve(input.size() + 1);
    for (const auto& r : input) rows.push_back({ring.reduce(r.first), ring.reduce(r.second)});

    // Pivot on the first column entry of least pi-degree.
    std::size_t pivot = rows.size();
    unsigned best = ChainRing::kIndex;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const unsigned v = ring.valuation(rows[i].first);
        if (v < best) {
            best = v;
            pivot = i;
        }
    }

    std::vector<Poly> second_column;
    Poly lead_second = ring.zero();
    if (pivot != rows.size()) {
        auto [v, unit] = ring.split(rows[pivot].first);
        const Poly unit_inv = ring.inverse(unit);
        lead_second = ring.mul(rows[pivot].second, unit_inv);
        s.lead_ = v;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot) continue;
            const Poly t = ring.divide_by_pi_pow(rows[i].first, v);
            second_column.push_back(rows[i].second - ring.mul(t, lead_second));
        }
        // pi^(4-v) * (pi^v, b) = (0, pi^(4-v) b) lies in the module.
        second_column.push_back(ring.mul(ring.pi_pow(ChainRing::kIndex - v), lead_second));
    } else {
        for (const auto& r : rows) second_column.push_back(r.second);
    }

    for (const auto& b : second_column) s.tail_ = std::min(s.tail_, ring.valuation(b));
    if (s.lead_ < ChainRing::kIndex) s.offset_ = ring.truncate(lead_second, s.tail_);
    return s;
}

bool Submodule2::contains(const ModuleRow& row) const {
    const auto& ring = *ring_;
    const Poly a = ring.reduce(row.first);
    Poly b = ring.reduce(row.second);
    if (ring.valuation(a) < lead_) return false;
    if (lead_ < ChainRing::kIndex) {
        const Poly t = ring.divide_by_pi_pow(a, lead_);
        b -= ring.mul(t, offset_);
    }
    return ring.valuation(b) >= tail_;
}

std::array<unsigned, 4> Submodule2::profile() const {
    std::array<unsigned, 4> k{0, 0, 0, 0};
    if (lead_ < ChainRing::kIndex) ++k[lead_];
    if (tail_ < ChainRing::kIndex) ++k[tail_];
    return k;
}

unsigned Submodule2::size_exponent() const {
    const auto k = profile();
    return 4 * k[0] + 3 * k[1] + 2 * k[2] + k[3];
}

std::vector<ModuleRow> Submodule2::rows() const {
    const auto& ring = *ring_;
    std::vector<ModuleRow> out;
    if (lead_ < ChainRing::kIndex) out.push_back({ring.pi_pow(lead_), offset_});
    if (tail_ < ChainRing::kIndex) out.push_back({ring.zero(), ring.pi_pow(tail_)});
    return out;
}

}  // namespace constaclass
