#pragma once

// Bit-packed kernels used by the linear-algebra and distance code.
//
// A packed vector is a run of 64-bit words. For weight computations the bits
// are grouped into fixed-width slots (one slot per codeword position); a slot
// never straddles a word boundary. The Hamming weight of a packed word is the
// number of nonzero slots.
//
// Each kernel has a portable scalar reference and, on x86-64, an AVX2 variant.
// The dispatched entry points pick the AVX2 variant when the CPU supports it,
// unless CONSTACLASS_SIMD=scalar is set in the environment.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace constaclass::simd {

enum class Isa { Scalar, Avx2 };

Isa active_isa() noexcept;
bool avx2_available() noexcept;
const char* isa_name(Isa isa) noexcept;

struct SlotLayout {
    unsigned slot_bits = 0;
    unsigned slots_per_word = 0;
    std::size_t slots = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> high;  // per word: top bit of each used slot
    std::vector<std::uint64_t> low;   // per word: remaining bits of each used slot

    /// slot_bits in [2, 64]
    static SlotLayout make(std::size_t slots, unsigned slot_bits);
    std::size_t word_of(std::size_t slot) const noexcept { return slot / slots_per_word; }
    unsigned shift_of(std::size_t slot) const noexcept {
        return static_cast<unsigned>(slot % slots_per_word) * slot_bits;
    }
};

inline constexpr std::uint32_t kNoWeight = std::numeric_limits<std::uint32_t>::max();

// `planes` is word-major: word w of table entry i lives at planes[w * count + i].
// min_weight_xor returns the least nonzero weight of (entry i XOR offset) over
// all i, or kNoWeight when every such vector is zero.

namespace scalar {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept;
std::uint32_t weight(const std::uint64_t* v, const SlotLayout& layout) noexcept;
std::uint32_t min_weight_xor(const std::uint64_t* planes, std::size_t count, const std::uint64_t* offset,
                             const SlotLayout& layout) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define CONSTACLASS_HAVE_AVX2_KERNELS 1
namespace avx2 {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept;
std::uint32_t weight(const std::uint64_t* v, const SlotLayout& layout) noexcept;
std::uint32_t min_weight_xor(const std::uint64_t* planes, std::size_t count, const std::uint64_t* offset,
                             const SlotLayout& layout) noexcept;
}  // namespace avx2
#endif

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept;
std::uint32_t weight(const std::uint64_t* v, const SlotLayout& layout) noexcept;
std::uint32_t min_weight_xor(const std::uint64_t* planes, std::size_t count, const std::uint64_t* offset,
                             const SlotLayout& layout) noexcept;

}  // namespace constaclass::simd
