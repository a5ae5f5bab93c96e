#pragma once

// Ideals of K_j + vK_j (v^2 = omega_j^2 f_j^2), one family-tagged descriptor
// per ideal, and their generators as rows of K_j^2 (a0, a1) ~ a0 + v a1.
//
// Family table (generators, log2 size in units of m*d_j):
//   I     <f(w + f c1 + f^2 c2) + v>            4
//   II-1  <v f^3>                               1
//   II-2  <f^3 b + v f^2>                       2
//   II-3  <f^2(w + f c) + v f>                  3
//   III   <f^k>, 0 <= k <= 4                    8 - 2k
//   IV-1  <v, f>                                7
//   IV-2  <f c + v, f^2>                        6
//   IV-3  <f(w + f c) + v, f^3>                 5
//   V     <f^2 c + v f, f^3>                    4
//   VI    <f^(k+1), v f^k>, k = 1, 2            7 - 2k
// with w = omega_j and all parameters of degree < d_j.
//
// The stated scheme (families I..V) gives 2^(2md) + 5*2^(md) + 7 ideals per
// factor. Exhaustive search shows two more, f<f, v> and f^2<f, v>; the
// complete scheme adds them as family VI.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "constaclass/chain_ring.hpp"
#include "constaclass/decompose.hpp"

namespace constaclass {

using BigInt = boost::multiprecision::cpp_int;

enum class Family : unsigned char { I, II_1, II_2, II_3, III, IV_1, IV_2, IV_3, V, VI };

enum class Scheme { Stated, Complete };

inline constexpr std::array<Family, 10> kAllFamilies = {Family::I,    Family::II_1, Family::II_2, Family::II_3,
                                                        Family::III,  Family::IV_1, Family::IV_2, Family::IV_3,
                                                        Family::V,    Family::VI};

/// Families I..V, or I..VI for the complete scheme.
std::span<const Family> scheme_families(Scheme scheme) noexcept;
std::string_view scheme_name(Scheme scheme) noexcept;
std::optional<Scheme> parse_scheme(std::string_view text);

std::string_view family_name(Family f) noexcept;
/// Accepts exact names ("II-2") or a group ("II" matches II-1, II-2, II-3).
std::vector<Family> parse_family_filter(std::string_view text);
std::optional<Family> parse_family(std::string_view text);
std::span<const std::string_view> param_names(Family f) noexcept;

struct IdealDescriptor {
    std::size_t factor = 0;  // zero-based factor index
    Family family = Family::III;
    std::vector<Poly> params;  // in param_names(family) order
    unsigned k = 0;            // families III and VI only

    friend bool operator==(const IdealDescriptor&, const IdealDescriptor&) = default;
};

/// Throws std::invalid_argument when the descriptor does not fit the decomposition.
void validate(const IdealDescriptor& desc, const Decomposition& dec);

/// N = 2^(2md) + 5*2^(md) + 7.
BigInt count_formula(unsigned m, unsigned d);
/// Ideals per factor under the given scheme (+7 stated, +9 complete).
BigInt count_ideals(unsigned m, unsigned d, Scheme scheme);

/// Number of ideals of each family for residue size |T| = 2^(md).
BigInt family_count(Family f, unsigned m, unsigned d);

/// log2 |C_j| divided by m*d_j.
unsigned family_size_units(Family f, unsigned k = 0);
unsigned ideal_log2_size(const IdealDescriptor& desc, const Decomposition& dec);

/// Visits every ideal of factor j in (family, parameter-lex) order.
/// Families outside `families` are skipped; the default is the stated scheme.
void for_each_ideal(const Decomposition& dec, std::size_t j, const std::function<void(const IdealDescriptor&)>& fn,
                    std::span<const Family> families = scheme_families(Scheme::Stated));
std::vector<IdealDescriptor> enumerate_ideals(const Decomposition& dec, std::size_t j,
                                              std::span<const Family> families = scheme_families(Scheme::Stated));

/// The chain ring K_j.
ChainRing local_ring(const Decomposition& dec, std::size_t j);

/// Generator rows of the K_j-submodule S with C_j = theta(S).
std::vector<ModuleRow> ideal_generators(const IdealDescriptor& desc, const Decomposition& dec);
Submodule2 ideal_submodule(const IdealDescriptor& desc, const Decomposition& dec, const ChainRing& ring);

/// (omega^2 f^2 a1, a0): multiplication by v on K_j^2.
ModuleRow v_twist(const ModuleRow& row, const Poly& omega_sq_pi_sq, const ChainRing& ring);

}  // namespace constaclass
