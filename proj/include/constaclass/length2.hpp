#pragma once

// Generator matrices of the K-submodules S of K^2 (K a chain ring with
// uniformizer pi and nilpotency index 4). classify_length2 lists the ones
// closed under (a, b) -> (omega pi^2 b, a), i.e. ideals of K + vK with
// v^2 = omega pi^2; classify_length2_unrestricted lists every submodule.
// For K_j + vK_j the twist unit is omega_j^2.

#include <string>
#include <vector>

#include "constaclass/chain_ring.hpp"
#include "constaclass/ideal_enum.hpp"

namespace constaclass {

struct GenMatrix2 {
    std::string shape;  // "I", "II-1", ..., or "(i)" .. "(ix)" for the unrestricted list
    std::vector<ModuleRow> rows;
};

/// Every element of K / pi^t, as the sum of t digits over T (|T|^t of them).
std::vector<Poly> residues_mod_pi_pow(const ChainRing& ring, unsigned t);

/// The nontrivial submodules closed under the v-twist plus {0} and K^2, in
/// shape order. omega must be a unit. The complete scheme appends shape VI,
/// [[0, pi^k], [pi^(k+1), 0]] for k = 1, 2.
std::vector<GenMatrix2> classify_length2(const ChainRing& ring, const Poly& omega,
                                         Scheme scheme = Scheme::Stated);

/// Every submodule of K^2, shapes (i) through (ix) plus {0} and K^2.
std::vector<GenMatrix2> classify_length2_unrestricted(const ChainRing& ring);

/// True when S is mapped into itself by (a, b) -> (omega pi^2 b, a).
bool closed_under_twist(const Submodule2& s, const ChainRing& ring, const Poly& omega);

}  // namespace constaclass
