#include "constaclass/f2space.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "constaclass/simd/kernels.hpp"

namespace constaclass {

long highest_bit(std::span<const std::uint64_t> v) {
    for (std::size_t w = v.size(); w-- > 0;)
        if (v[w] != 0) return static_cast<long>(w * 64 + 63 - std::countl_zero(v[w]));
    return -1;
}

F2Space::F2Space(std::size_t bits) : bits_(bits), words_(words_for_bits(bits)) {}

BitWords F2Space::reduce(std::span<const std::uint64_t> v) const {
    if (v.size() != words_) throw std::invalid_argument("vector length does not match the space");
    BitWords r(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (test_bit(r, pivots_[i])) simd::xor_into(r.data(), rows_[i].data(), words_);
    return r;
}

bool F2Space::contains(std::span<const std::uint64_t> v) const {
    const auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](std::uint64_t w) { return w == 0; });
}

bool F2Space::insert(std::span<const std::uint64_t> v) {
    BitWords r = reduce(v);
    const long p = highest_bit(r);
    if (p < 0) return false;
    const auto pivot = static_cast<std::size_t>(p);
    for (auto& row : rows_)
        if (test_bit(row, pivot)) simd::xor_into(row.data(), r.data(), words_);
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

std::vector<BitWords> F2Space::sorted_rows() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
    std::vector<BitWords> out;
    out.reserve(rows_.size());
    for (auto i : order) out.push_back(rows_[i]);
    return out;
}

BitWords F2Space::canonical_key() const {
    BitWords key;
    key.reserve(rows_.size() * words_);
    for (const auto& r : sorted_rows()) key.insert(key.end(), r.begin(), r.end());
    return key;
}

void F2Space::for_each_element(const std::function<void(std::span<const std::uint64_t>)>& fn) const {
    if (rows_.size() >= 40) throw std::length_error("space too large to enumerate");
    BitWords cur(words_, 0);
    fn(cur);
    const std::uint64_t total = std::uint64_t{1} << rows_.size();
    for (std::uint64_t g = 1; g < total; ++g) {
        simd::xor_into(cur.data(), rows_[static_cast<std::size_t>(std::countr_zero(g))].data(), words_);
        fn(cur);
    }
}

F2Space operator+(const F2Space& a, const F2Space& b) {
    if (a.bits_ != b.bits_) throw std::invalid_argument("spaces of different dimension");
    F2Space s = a;
    for (const auto& r : b.rows_) s.insert(r);
    return s;
}

}  // namespace constaclass
