#pragma once

#include <cstdint>
#include <vector>

#include "constaclass/poly.hpp"

namespace constaclass {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c0de'2019'0001ULL;

/// Seed for randomized splitting: CONSTACLASS_SEED if set and parseable, else kDefaultSeed.
std::uint64_t seed_from_env();

/// Distinct monic irreducible factors of x^n - delta0 over GF(2^m), n odd.
/// Distinct-degree factorization followed by trace-based equal-degree splitting.
/// Output sorted by canonical_less. Throws std::invalid_argument for even n or
/// delta0 == 0.
std::vector<Poly> factor_xn_minus(const FieldCtx& ctx, unsigned n, FieldElem delta0,
                                  std::uint64_t seed = kDefaultSeed);

/// Rabin test: f has no factor of degree k <= deg/2 (gcd with x^(q^k) - x).
bool is_irreducible(const Poly& f);

}  // namespace constaclass
