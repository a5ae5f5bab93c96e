#include <random>

#include "constaclass/simd/kernels.hpp"
#include "doctest.h"

using namespace constaclass::simd;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n, double density) {
    std::vector<std::uint64_t> v(n);
    std::bernoulli_distribution bit(density);
    for (auto& w : v)
        for (int b = 0; b < 64; ++b)
            if (bit(rng)) w |= std::uint64_t{1} << b;
    return v;
}

void mask_to_layout(std::vector<std::uint64_t>& v, const SlotLayout& l, std::size_t stride) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] &= l.high[(i / stride) % l.words] | l.low[(i / stride) % l.words];
}

}  // namespace

TEST_CASE("simd: layout geometry") {
    const auto l = SlotLayout::make(14, 4);
    CHECK(l.slots_per_word == 16);
    CHECK(l.words == 1);
    const auto l8 = SlotLayout::make(14, 8);
    CHECK(l8.words == 2);
    CHECK(l8.word_of(9) == 1);
    CHECK(l8.shift_of(9) == 8);
    CHECK_THROWS(SlotLayout::make(4, 1));
}

#ifdef CONSTACLASS_HAVE_AVX2_KERNELS
TEST_CASE("simd: AVX2 kernels equal the scalar reference") {
    if (!avx2_available()) {
        MESSAGE("AVX2 not available; equivalence skipped");
        return;
    }
    std::mt19937_64 rng(2024);
    for (unsigned slot_bits : {4U, 8U, 12U, 16U, 64U}) {
        for (std::size_t slots : {1U, 7U, 14U, 30U, 63U, 130U}) {
            const auto l = SlotLayout::make(slots, slot_bits);
            for (double density : {0.02, 0.3}) {
                auto a = random_words(rng, l.words, density);
                mask_to_layout(a, l, 1);
                CHECK(scalar::weight(a.data(), l) == avx2::weight(a.data(), l));

                auto x = a, y = a;
                const auto b = random_words(rng, l.words, 0.5);
                scalar::xor_into(x.data(), b.data(), l.words);
                avx2::xor_into(y.data(), b.data(), l.words);
                CHECK(x == y);

                for (std::size_t count : {1U, 3U, 16U, 37U, 1024U}) {
                    std::vector<std::uint64_t> planes(l.words * count);
                    for (std::size_t w = 0; w < l.words; ++w) {
                        auto col = random_words(rng, count, density);
                        for (std::size_t i = 0; i < count; ++i)
                            planes[w * count + i] = col[i] & (l.high[w] | l.low[w]);
                    }
                    auto off = random_words(rng, l.words, density);
                    mask_to_layout(off, l, 1);
                    CHECK(scalar::min_weight_xor(planes.data(), count, off.data(), l) ==
                          avx2::min_weight_xor(planes.data(), count, off.data(), l));
                    std::fill(off.begin(), off.end(), 0);
                    CHECK(scalar::min_weight_xor(planes.data(), count, off.data(), l) ==
                          avx2::min_weight_xor(planes.data(), count, off.data(), l));
                }
            }
        }
    }
    // All-zero table: no weight.
    const auto l = SlotLayout::make(14, 4);
    std::vector<std::uint64_t> planes(16, 0), off(1, 0);
    CHECK(avx2::min_weight_xor(planes.data(), 16, off.data(), l) == kNoWeight);
    CHECK(scalar::min_weight_xor(planes.data(), 16, off.data(), l) == kNoWeight);
}
#endif

TEST_CASE("simd: dispatch reports an ISA") {
    const auto isa = active_isa();
    CHECK((isa == Isa::Scalar || avx2_available()));
    CHECK(std::string(isa_name(isa)).size() > 0);
}
