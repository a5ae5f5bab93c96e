#pragma once

// Brute-force checks that do not rely on the classification they verify.
// Ideals and submodules are found by closing generator sets over the whole
// ring, and minimum distances by scanning every codeword.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "constaclass/chain_ring.hpp"
#include "constaclass/code_builder.hpp"
#include "constaclass/decompose.hpp"
#include "constaclass/ideal_enum.hpp"
#include "constaclass/length2.hpp"
#include "constaclass/packed.hpp"

namespace constaclass::oracle {

/// A subspace of GF(2)^bits for bits <= 32, in fully reduced echelon form.
/// Equal spaces have equal rows, so rows() is a canonical key.
class SmallSpace {
public:
    explicit SmallSpace(unsigned bits = 0) : bits_(bits) {}

    unsigned bits() const noexcept { return bits_; }
    unsigned rank() const noexcept;
    bool insert(std::uint32_t v);
    bool contains(std::uint32_t v) const noexcept { return reduce(v) == 0; }
    std::uint32_t reduce(std::uint32_t v) const noexcept;
    /// Nonzero rows by descending pivot.
    std::vector<std::uint32_t> rows() const;
    /// Every element, ascending.
    std::vector<std::uint32_t> elements() const;
    std::uint64_t size() const noexcept { return std::uint64_t{1} << rank(); }

    friend SmallSpace operator+(const SmallSpace& a, const SmallSpace& b);
    friend bool operator==(const SmallSpace& a, const SmallSpace& b) noexcept {
        return a.bits_ == b.bits_ && a.by_pivot_ == b.by_pivot_;
    }
    friend bool operator<(const SmallSpace& a, const SmallSpace& b) noexcept { return a.by_pivot_ < b.by_pivot_; }

private:
    unsigned bits_;
    std::array<std::uint32_t, 32> by_pivot_{};  // row with highest bit p, or 0
};

/// K + vK with v^2 = twist, every element a pair (a0, a1) of K packed into an
/// integer: coefficient i of a_s occupies m bits at offset (s*4d + i)*m.
/// K^2 with the componentwise K-action is the same set; only the scalars differ.
class ExhaustiveRing {
public:
    static constexpr unsigned kMaxBits = 16;

    /// Throws std::length_error when 8*m*d > 16.
    ExhaustiveRing(ChainRing ring, Poly twist);
    /// K_j + vK_j with v^2 = omega_j^2 f_j^2.
    static ExhaustiveRing for_factor(const Decomposition& dec, std::size_t j);

    const ChainRing& base() const noexcept { return ring_; }
    const Poly& twist() const noexcept { return twist_; }
    unsigned bits() const noexcept { return bits_; }
    std::uint32_t size() const noexcept { return std::uint32_t{1} << bits_; }

    std::uint32_t encode(const ModuleRow& e) const;
    ModuleRow decode(std::uint32_t e) const;
    /// Product in K + vK, computed with polynomial arithmetic.
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

    /// Span of {s * g : s a GF(2)-basis scalar, g in gens}. With with_v the
    /// scalars run over K + vK (ideals), otherwise over K (submodules of K^2).
    SmallSpace generated(std::span<const std::uint32_t> gens, bool with_v) const;
    std::uint32_t times_v(std::uint32_t e) const;

private:
    std::uint32_t apply(std::size_t scalar, std::uint32_t e) const noexcept;

    ChainRing ring_;
    Poly twist_;
    unsigned bits_;
    unsigned half_bits_;
    // action_[t][b]: scalar t applied to the element with only bit b set;
    // scalars 0..half_bits_-1 are beta^k x^i, the last one is v.
    std::vector<std::vector<std::uint32_t>> action_;
};

struct BruteIdeals {
    std::vector<SmallSpace> ideals;   // sorted
    std::size_t principal = 0;        // distinct principal ideals
    std::size_t from_pairs = 0;       // distinct ideals with <= 2 generators
    std::size_t after_sweep = 0;      // after closing under extra generators
};

/// All ideals (with_v) or all K-submodules (!with_v), found from principal
/// ones by pairwise sums and then a fixpoint sweep of further sums.
BruteIdeals brute_submodules(const ExhaustiveRing& ring, bool with_v);
inline BruteIdeals brute_ideals(const ExhaustiveRing& ring) { return brute_submodules(ring, true); }

/// The ideal generated by the descriptor's rows, closed inside the ring.
SmallSpace expand_descriptor(const ExhaustiveRing& ring, const IdealDescriptor& desc, const Decomposition& dec);
/// The K-submodule generated by a generator matrix.
SmallSpace expand_matrix(const ExhaustiveRing& ring, const GenMatrix2& g);

struct Linear2Result {
    std::vector<SmallSpace> all;
    std::vector<SmallSpace> closed;  // those satisfying (omega pi^2 b, a) in C
    std::size_t total() const noexcept { return all.size(); }
    std::size_t filtered() const noexcept { return closed.size(); }
};

/// Requires |K^2| <= 2^16.
Linear2Result brute_linear2(const ChainRing& ring, const Poly& omega);

inline constexpr std::uint64_t kDefaultDistanceCap = std::uint64_t{1} << 24;

/// Least nonzero slot weight over the GF(2)-span of `rows` (which must be
/// independent). nullopt for the zero space. Throws std::length_error when
/// 2^rank exceeds cap.
std::optional<std::uint32_t> min_distance(const std::vector<BitWords>& rows, const simd::SlotLayout& layout,
                                          std::uint64_t cap = kDefaultDistanceCap);
std::optional<std::uint32_t> min_distance(const ConstaCode& code, const Decomposition& dec,
                                          std::uint64_t cap = kDefaultDistanceCap);

/// Reference: enumerate every codeword as a CodeWord and count nonzero entries.
std::optional<std::uint32_t> min_distance_reference(const ConstaCode& code, const Decomposition& dec,
                                                    std::uint64_t cap = kDefaultDistanceCap);

/// S1 = uF2 + u^2F2 + u^3F2, S2 = u^2F2 + u^3F2, S3 = u^3F2.
enum class Alphabet { S1, S2, S3 };

struct AdditiveCodeView {
    Alphabet alphabet;
    std::vector<CodeWord> words;

    /// Every codeword of a code over GF(2); throws if an entry leaves the alphabet.
    static AdditiveCodeView from_code(const ConstaCode& code, const Decomposition& dec, Alphabet alphabet);
};

bool in_alphabet(const RElem& e, Alphabet a) noexcept;
/// tau(au + bu^2 + cu^3) = au + bu^2 + (a + c)u^3
RElem tau(const RElem& e) noexcept;

/// True iff (s(N-1), s0, ..., s(N-2)) with s(N-1) mapped by tau (or left
/// alone when use_tau is false) lies in the view for every word.
bool check_tau_constacyclic(const AdditiveCodeView& view, bool use_tau = true);
std::optional<std::uint32_t> min_distance(const AdditiveCodeView& view);

/// Exhaustive square-root counts for factor j.
struct SquareRootCounts {
    bool checked_mod_f = false;          // only when m*d <= 12
    std::uint64_t mod_f_solutions = 0;   // z mod f with z^2 = omega^2 mod f
    bool mod_f_is_omega = false;
    bool checked_mod_f2 = false;         // only when m*d <= 8
    std::uint64_t mod_f2_solutions = 0;  // z mod f^2 with z^2 = omega^2 mod f^2
    bool mod_f2_match_family = false;    // exactly {omega + f c : c in T}
};
SquareRootCounts square_root_counts(const Decomposition& dec, std::size_t j);

}  // namespace constaclass::oracle
