#pragma once

// Bit-packed codewords: one slot of 4m bits per position, layer k of the
// entry occupying bits [k*m, (k+1)*m) of its slot. A slot is nonzero exactly
// when the R-entry is, so slot weight is Hamming weight over R.

#include <vector>

#include "constaclass/code_builder.hpp"
#include "constaclass/f2space.hpp"
#include "constaclass/simd/kernels.hpp"

namespace constaclass {

class WordPacker {
public:
    WordPacker(const FieldCtx& ctx, std::size_t length);

    const simd::SlotLayout& layout() const noexcept { return layout_; }
    std::size_t words() const noexcept { return layout_.words; }
    /// Ambient dimension for F2Space (padding bits included, always zero).
    std::size_t ambient_bits() const noexcept { return layout_.words * 64; }

    BitWords pack(const CodeWord& w) const;
    CodeWord unpack(std::span<const std::uint64_t> v) const;

    /// GF(2)-span of the GF(2^m)-span of `words`: each word times beta^k, k < m.
    F2Space span(const std::vector<CodeWord>& words) const;

private:
    FieldCtx ctx_;
    simd::SlotLayout layout_;
};

/// F2-span of the whole code; its rank is log2 |C| when the basis is independent.
F2Space code_span(const ConstaCode& code, const Decomposition& dec);

}  // namespace constaclass
