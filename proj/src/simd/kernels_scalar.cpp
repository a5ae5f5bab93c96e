#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "constaclass/simd/kernels.hpp"

namespace constaclass::simd {

SlotLayout SlotLayout::make(std::size_t slots, unsigned slot_bits) {
    if (slot_bits < 2 || slot_bits > 64) throw std::invalid_argument("slot width must be in [2, 64]");
    SlotLayout l;
    l.slot_bits = slot_bits;
    l.slots_per_word = 64 / slot_bits;
    l.slots = slots;
    l.words = slots == 0 ? 0 : (slots + l.slots_per_word - 1) / l.slots_per_word;
    l.high.assign(l.words, 0);
    l.low.assign(l.words, 0);
    const std::uint64_t slot_mask = slot_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << slot_bits) - 1;
    const std::uint64_t top = std::uint64_t{1} << (slot_bits - 1);
    for (std::size_t s = 0; s < slots; ++s) {
        const auto w = l.word_of(s);
        const auto sh = l.shift_of(s);
        l.high[w] |= top << sh;
        l.low[w] |= (slot_mask ^ top) << sh;
    }
    return l;
}

namespace scalar {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept {
    for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

std::uint32_t weight(const std::uint64_t* v, const SlotLayout& layout) noexcept {
    const std::uint64_t slot_mask =
        layout.slot_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << layout.slot_bits) - 1;
    std::uint32_t w = 0;
    for (std::size_t s = 0; s < layout.slots; ++s)
        if ((v[layout.word_of(s)] >> layout.shift_of(s)) & slot_mask) ++w;
    return w;
}

std::uint32_t min_weight_xor(const std::uint64_t* planes, std::size_t count, const std::uint64_t* offset,
                             const SlotLayout& layout) noexcept {
    std::uint32_t best = kNoWeight;
    std::vector<std::uint64_t> tmp(layout.words);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t w = 0; w < layout.words; ++w) tmp[w] = planes[w * count + i] ^ offset[w];
        const auto wt = scalar::weight(tmp.data(), layout);
        if (wt != 0 && wt < best) best = wt;
    }
    return best;
}

}  // namespace scalar

bool avx2_available() noexcept {
#if defined(CONSTACLASS_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

Isa active_isa() noexcept {
    static const Isa isa = [] {
        if (const char* env = std::getenv("CONSTACLASS_SIMD"); env != nullptr && std::strcmp(env, "scalar") == 0)
            return Isa::Scalar;
        return avx2_available() ? Isa::Avx2 : Isa::Scalar;
    }();
    return isa;
}

const char* isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept {
#ifdef CONSTACLASS_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::Avx2) return avx2::xor_into(dst, src, words);
#endif
    scalar::xor_into(dst, src, words);
}

std::uint32_t weight(const std::uint64_t* v, const SlotLayout& layout) noexcept {
#ifdef CONSTACLASS_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::Avx2) return avx2::weight(v, layout);
#endif
    return scalar::weight(v, layout);
}

std::uint32_t min_weight_xor(const std::uint64_t* planes, std::size_t count, const std::uint64_t* offset,
                             const SlotLayout& layout) noexcept {
#ifdef CONSTACLASS_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::Avx2) return avx2::min_weight_xor(planes, count, offset, layout);
#endif
    return scalar::min_weight_xor(planes, count, offset, layout);
}

}  // namespace constaclass::simd
