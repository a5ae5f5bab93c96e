#include "constaclass/simd/kernels.hpp"

#ifdef CONSTACLASS_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <array>

#define CONSTACLASS_AVX2 __attribute__((target("avx2,popcnt")))

namespace constaclass::simd::avx2 {

namespace {

// Per-64-bit-lane popcount (nibble lookup + byte sums).
CONSTACLASS_AVX2 inline __m256i popcount_epi64(__m256i v) {
    const __m256i lookup =
        _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i nibble = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, nibble);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), nibble);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

// Top bit of every nonzero slot: ((x & low) + low) | x, masked to the top bits.
// The sum stays inside each slot, so no carries cross slot boundaries.
CONSTACLASS_AVX2 inline __m256i nonzero_slots(__m256i x, __m256i high, __m256i low) {
    const __m256i t = _mm256_add_epi64(_mm256_and_si256(x, low), low);
    return _mm256_and_si256(_mm256_or_si256(t, x), high);
}

inline std::uint32_t nonzero_slots_scalar(std::uint64_t x, std::uint64_t high, std::uint64_t low) {
    return static_cast<std::uint32_t>(__builtin_popcountll((((x & low) + low) | x) & high));
}

}  // namespace

CONSTACLASS_AVX2 void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

CONSTACLASS_AVX2 std::uint32_t weight(const std::uint64_t* v, const SlotLayout& layout) noexcept {
    std::size_t w = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; w + 4 <= layout.words; w += 4) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + w));
        const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(layout.high.data() + w));
        const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(layout.low.data() + w));
        acc = _mm256_add_epi64(acc, popcount_epi64(nonzero_slots(x, hi, lo)));
    }
    alignas(32) std::array<std::uint64_t, 4> lanes{};
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), acc);
    auto total = static_cast<std::uint32_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
    for (; w < layout.words; ++w) total += nonzero_slots_scalar(v[w], layout.high[w], layout.low[w]);
    return total;
}

CONSTACLASS_AVX2 std::uint32_t min_weight_xor(const std::uint64_t* planes, std::size_t count,
                                              const std::uint64_t* offset, const SlotLayout& layout) noexcept {
    std::uint32_t best = kNoWeight;
    std::size_t i = 0;
    alignas(32) std::array<std::uint64_t, 4> lanes{};
    for (; i + 4 <= count; i += 4) {
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t w = 0; w < layout.words; ++w) {
            const __m256i x = _mm256_xor_si256(
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(planes + w * count + i)),
                _mm256_set1_epi64x(static_cast<long long>(offset[w])));
            const __m256i nz = nonzero_slots(x, _mm256_set1_epi64x(static_cast<long long>(layout.high[w])),
                                             _mm256_set1_epi64x(static_cast<long long>(layout.low[w])));
            acc = _mm256_add_epi64(acc, popcount_epi64(nz));
        }
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), acc);
        for (auto wt : lanes)
            if (wt != 0 && wt < best) best = static_cast<std::uint32_t>(wt);
    }
    for (; i < count; ++i) {
        std::uint32_t wt = 0;
        for (std::size_t w = 0; w < layout.words; ++w)
            wt += nonzero_slots_scalar(planes[w * count + i] ^ offset[w], layout.high[w], layout.low[w]);
        if (wt != 0 && wt < best) best = wt;
    }
    return best;
}

}  // namespace constaclass::simd::avx2

#endif
