#pragma once

// Reference data for the (1 + u^2)-constacyclic codes of length 14 over
// GF(2)[u]/<u^4>: factorization, idempotents, units, the bridge polynomial
// listing, the code count, and the additive-code parameters of a few codes.
// Verification compares the library against these values
// and reports mismatches rather than adjusting either side.

#include <cstdint>
#include <span>
#include <string_view>

namespace constaclass::worked_example {

inline constexpr unsigned kM = 1;
inline constexpr unsigned kN = 7;
inline constexpr std::uint32_t kDelta = 1;
inline constexpr std::uint32_t kAlpha = 1;

struct FactorRef {
    std::string_view f;
    unsigned degree;
    std::string_view epsilon;
    std::string_view omega;
    unsigned ideal_count;
};
std::span<const FactorRef> factors();

inline constexpr std::uint64_t kTotalCount = 258741;

/// One listed bridge polynomial: name is g<i><l>, h<i><l>, p<l> or q<l>.
struct BridgeRef {
    unsigned factor;  // 1-based
    std::string_view name;
    std::string_view value;
};
std::span<const BridgeRef> bridge_values();

/// Additive-code parameters (14, 2^log2_size, distance) of a code given by
/// one descriptor per factor. The b / c parameter sweep of each entry is
/// spelled out as separate rows.
struct CodeRef {
    std::string_view label;
    std::string_view alphabet;  // "S1", "S2", "S3"
    bool tau;                   // tau-constacyclic rather than cyclic
    std::string_view desc[3];
    unsigned log2_size;
    unsigned distance;
};
std::span<const CodeRef> code_parameters();

}  // namespace constaclass::worked_example
