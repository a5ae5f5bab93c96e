#include "constaclass/field.hpp"

#include <array>
#include <bit>
#include <sstream>

namespace constaclass {

namespace gf2 {

int degree(std::uint64_t p) noexcept { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t mod(std::uint64_t a, std::uint64_t b) noexcept {
    const int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
    return a;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) noexcept {
    const int df = degree(f);
    a = mod(a, f);
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> df) & 1) a ^= f;
    }
    return r;
}

unsigned smallest_factor_degree(std::uint64_t f) noexcept {
    // Rabin-style sweep: gcd(f, x^(2^k) - x) collects the factors of degree dividing k.
    const int m = degree(f);
    const std::uint64_t x = 2;
    std::uint64_t xp = x;
    for (int k = 1; 2 * k <= m; ++k) {
        xp = mulmod(xp, xp, f);
        if (degree(gcd(f, xp ^ x)) > 0) return static_cast<unsigned>(k);
    }
    return 0;
}

}  // namespace gf2

namespace {

constexpr std::array<std::uint32_t, 17> kDefaultModuli = {
    0,      0x2,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,   0x11b,
    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b,
};

std::string reducible_message(std::uint32_t modulus, unsigned k) {
    std::ostringstream os;
    os << "modulus 0x" << std::hex << modulus << std::dec << " is reducible over GF(2): has a factor of degree " << k;
    return os.str();
}

}  // namespace

ReducibleModulus::ReducibleModulus(std::uint32_t modulus, unsigned factor_degree)
    : std::invalid_argument(reducible_message(modulus, factor_degree)), factor_degree_(factor_degree) {}

FieldCtx::FieldCtx(unsigned m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
    if (m < 1 || m > kMaxDegree) throw std::invalid_argument("field degree m must be in [1, 16]");
    if (gf2::degree(modulus) != static_cast<int>(m))
        throw std::invalid_argument("modulus degree does not match m");
    if (unsigned k = gf2::smallest_factor_degree(modulus); k != 0) throw ReducibleModulus(modulus, k);
}

std::uint32_t FieldCtx::default_modulus(unsigned m) {
    if (m < 1 || m > kMaxDegree) throw std::invalid_argument("field degree m must be in [1, 16]");
    return kDefaultModuli[m];
}

FieldCtx FieldCtx::standard(unsigned m) { return FieldCtx(m, default_modulus(m)); }

FieldElem FieldCtx::elem(std::uint32_t value) const {
    if (value >= order()) throw std::out_of_range("field element out of range for GF(2^" + std::to_string(m_) + ")");
    return {value};
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const noexcept {
    std::uint32_t x = a.bits, y = b.bits, r = 0;
    const std::uint32_t top = std::uint32_t{1} << m_;
    while (y != 0) {
        if (y & 1) r ^= x;
        y >>= 1;
        x <<= 1;
        if (x & top) x ^= modulus_;
    }
    return {r};
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const noexcept {
    FieldElem r = one();
    while (e != 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero in GF(2^m)");
    return pow(a, order() - 2);
}

FieldElem FieldCtx::sqrt(FieldElem a) const noexcept {
    for (unsigned i = 1; i < m_; ++i) a = mul(a, a);
    return a;
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "GF(2^" << m_ << ") mod 0x" << std::hex << modulus_;
    return os.str();
}

}  // namespace constaclass
