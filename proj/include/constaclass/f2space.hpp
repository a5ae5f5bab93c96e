#pragma once

// Subspaces of GF(2)^bits over packed 64-bit words, kept in fully reduced
// row echelon form (pivot = highest set bit of each row). Because the form is
// fully reduced it is unique, so two spaces are equal iff their rows are.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace constaclass {

using BitWords = std::vector<std::uint64_t>;

inline std::size_t words_for_bits(std::size_t bits) { return (bits + 63) / 64; }
inline bool test_bit(std::span<const std::uint64_t> v, std::size_t i) { return (v[i / 64] >> (i % 64)) & 1; }
inline void flip_bit(std::span<std::uint64_t> v, std::size_t i) { v[i / 64] ^= std::uint64_t{1} << (i % 64); }
/// Index of the highest set bit, or -1 for the zero vector.
long highest_bit(std::span<const std::uint64_t> v);

class F2Space {
public:
    explicit F2Space(std::size_t bits);

    std::size_t bits() const noexcept { return bits_; }
    std::size_t words() const noexcept { return words_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Adds v to the spanning set; true when the rank grew.
    bool insert(std::span<const std::uint64_t> v);
    bool contains(std::span<const std::uint64_t> v) const;
    /// v minus its projection onto the space (zero iff v is a member).
    BitWords reduce(std::span<const std::uint64_t> v) const;

    /// Rows sorted by descending pivot.
    std::vector<BitWords> sorted_rows() const;
    /// Concatenation of sorted_rows(); equal keys <=> equal spaces.
    BitWords canonical_key() const;

    /// Every element of the space, in Gray-code order starting at zero.
    /// Only sensible for small rank.
    void for_each_element(const std::function<void(std::span<const std::uint64_t>)>& fn) const;

    /// Sum of two spaces of the same ambient dimension.
    friend F2Space operator+(const F2Space& a, const F2Space& b);
    friend bool operator==(const F2Space& a, const F2Space& b) {
        return a.bits_ == b.bits_ && a.canonical_key() == b.canonical_key();
    }

private:
    std::size_t bits_;
    std::size_t words_;
    std::vector<BitWords> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace constaclass
