#include "constaclass/packed.hpp"

#include <stdexcept>

namespace constaclass {

WordPacker::WordPacker(const FieldCtx& ctx, std::size_t length)
    : ctx_(ctx), layout_(simd::SlotLayout::make(length, 4 * ctx.m())) {}

BitWords WordPacker::pack(const CodeWord& w) const {
    if (w.size() != layout_.slots) throw std::invalid_argument("codeword length does not match the packer");
    const unsigned m = ctx_.m();
    BitWords out(layout_.words, 0);
    for (std::size_t s = 0; s < layout_.slots; ++s) {
        std::uint64_t slot = 0;
        for (unsigned k = 0; k < 4; ++k) slot |= std::uint64_t{w.entries[s].a[k].bits} << (k * m);
        out[layout_.word_of(s)] |= slot << layout_.shift_of(s);
    }
    return out;
}

CodeWord WordPacker::unpack(std::span<const std::uint64_t> v) const {
    if (v.size() < layout_.words) throw std::invalid_argument("packed vector too short");
    const unsigned m = ctx_.m();
    const std::uint64_t digit = (std::uint64_t{1} << m) - 1;
    CodeWord w{std::vector<RElem>(layout_.slots)};
    for (std::size_t s = 0; s < layout_.slots; ++s) {
        const std::uint64_t slot = v[layout_.word_of(s)] >> layout_.shift_of(s);
        for (unsigned k = 0; k < 4; ++k) w.entries[s].a[k].bits = static_cast<std::uint32_t>((slot >> (k * m)) & digit);
    }
    return w;
}

F2Space WordPacker::span(const std::vector<CodeWord>& words) const {
    F2Space space(ambient_bits());
    for (const auto& w : words) {
        for (unsigned k = 0; k < ctx_.m(); ++k) {
            const FieldElem beta{std::uint32_t{1} << k};
            CodeWord scaled = w;
            for (auto& e : scaled.entries)
                for (auto& c : e.a) c = ctx_.mul(beta, c);
            space.insert(pack(scaled));
        }
    }
    return space;
}

F2Space code_span(const ConstaCode& code, const Decomposition& dec) {
    return WordPacker(dec.field(), dec.length()).span(code.basis);
}

}  // namespace constaclass
