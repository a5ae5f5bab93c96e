#include "constaclass/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace constaclass {

namespace {

void require_same_ctx(const Poly& a, const Poly& b) {
    if (!(a.ctx() == b.ctx())) throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

Poly::Poly(FieldCtx ctx, std::vector<FieldElem> coeffs) : ctx_(ctx), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (!ctx_.contains(c)) throw std::out_of_range("coefficient outside the field");
    normalize();
}

Poly::Poly(FieldCtx ctx, std::initializer_list<std::uint32_t> coeffs) : ctx_(ctx) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(ctx_.elem(c));
    normalize();
}

Poly Poly::constant(FieldCtx ctx, FieldElem c) { return Poly(ctx, std::vector<FieldElem>{c}); }

Poly Poly::monomial(FieldCtx ctx, FieldElem c, std::size_t degree) {
    std::vector<FieldElem> v(degree + 1);
    v[degree] = c;
    return Poly(ctx, std::move(v));
}

Poly Poly::binomial(FieldCtx ctx, std::size_t n, FieldElem c) {
    std::vector<FieldElem> v(n + 1);
    v[n] = ctx.one();
    v[0] += c;
    return Poly(ctx, std::move(v));
}

Poly Poly::from_gf2_mask(FieldCtx ctx, std::uint64_t mask) {
    std::vector<FieldElem> v;
    for (unsigned i = 0; mask != 0; ++i, mask >>= 1) v.push_back(FieldElem{static_cast<std::uint32_t>(mask & 1)});
    return Poly(ctx, std::move(v));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::set_coeff(std::size_t i, FieldElem c) {
    if (!ctx_.contains(c)) throw std::out_of_range("coefficient outside the field");
    if (i >= coeffs_.size()) {
        if (c.is_zero()) return;
        coeffs_.resize(i + 1);
    }
    coeffs_[i] = c;
    normalize();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(ctx_.inv(lead()));
}

Poly Poly::scaled(FieldElem c) const {
    if (c.is_zero()) return Poly(ctx_);
    Poly r = *this;
    for (auto& x : r.coeffs_) x = ctx_.mul(x, c);
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    Poly r(ctx_);
    r.coeffs_.assign(k, FieldElem{});
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

Poly Poly::truncated(std::size_t k) const {
    Poly r = *this;
    if (r.coeffs_.size() > k) r.coeffs_.resize(k);
    r.normalize();
    return r;
}

Poly Poly::derivative() const {
    // d/dx x^i = i x^(i-1); only odd i survive in characteristic 2.
    Poly r(ctx_);
    if (coeffs_.size() > 1) {
        r.coeffs_.resize(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); i += 2) r.coeffs_[i - 1] = coeffs_[i];
    }
    r.normalize();
    return r;
}

FieldElem Poly::eval(FieldElem at) const {
    FieldElem acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = ctx_.mul(acc, at) + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_ctx(*this, o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    Poly r(a.ctx_);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElem{});
    const auto& ctx = a.ctx_;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += ctx.mul(a.coeffs_[i], b.coeffs_[j]);
    }
    r.normalize();
    return r;
}

DivMod divmod(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto& ctx = a.ctx();
    if (a.degree() < b.degree()) return {Poly(ctx), a};

    std::vector<FieldElem> rem(a.coeffs().begin(), a.coeffs().end());
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const FieldElem inv_lead = ctx.inv(bc.back());
    std::vector<FieldElem> quo(rem.size() - db);
    for (std::size_t i = rem.size(); i-- > db;) {
        const FieldElem c = rem[i];
        if (c.is_zero()) continue;
        const FieldElem q = ctx.mul(c, inv_lead);
        quo[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] += ctx.mul(q, bc[j]);
    }
    rem.resize(db);
    return {Poly(ctx, std::move(quo)), Poly(ctx, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly pow(const Poly& base, std::uint64_t e) {
    Poly r = Poly::one(base.ctx());
    Poly b = base;
    while (e != 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e != 0) b = b * b;
    }
    return r;
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& modulus) {
    Poly r = Poly::one(base.ctx()) % modulus;
    Poly b = base % modulus;
    while (e != 0) {
        if (e & 1) r = (r * b) % modulus;
        e >>= 1;
        if (e != 0) b = (b * b) % modulus;
    }
    return r;
}

Poly frobenius_pow_mod(const Poly& base, std::uint64_t k, const Poly& modulus) {
    Poly r = base % modulus;
    for (std::uint64_t i = 0; i < k; ++i) r = (r * r) % modulus;
    return r;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("ext_gcd(0, 0) is undefined");
    const auto& ctx = a.ctx();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(ctx), s1(ctx);
    Poly t0(ctx), t1 = Poly::one(ctx);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    const FieldElem k = ctx.inv(r0.lead());
    return {r0.scaled(k), s0.scaled(k), t0.scaled(k)};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
    auto [g, s, t] = ext_gcd(a % m, m);
    if (!g.is_one()) throw std::domain_error("polynomial is not invertible modulo " + m.to_string());
    return s % m;
}

std::vector<std::uint32_t> Poly::to_ints() const {
    std::vector<std::uint32_t> out;
    out.reserve(coeffs_.size());
    for (auto c : coeffs_) out.push_back(c.bits);
    return out;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const auto c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c.bits);
            continue;
        }
        if (c.bits != 1) out += std::to_string(c.bits) + '*';
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("malformed polynomial: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Poly parse_poly(FieldCtx ctx, std::string_view text) {
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    if (compact.empty()) throw std::invalid_argument("empty polynomial text");

    Poly acc(ctx);
    std::string_view rest = compact;
    while (!rest.empty()) {
        const auto plus = rest.find('+');
        std::string_view term = rest.substr(0, plus);
        rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus + 1);
        if (term.empty()) throw std::invalid_argument("malformed polynomial: '" + compact + "'");

        std::uint32_t coeff = 1;
        std::size_t power = 0;
        const auto xpos = term.find('x');
        if (xpos == std::string_view::npos) {
            coeff = static_cast<std::uint32_t>(parse_uint(term, compact));
        } else {
            if (xpos > 0) {
                if (term[xpos - 1] != '*') throw std::invalid_argument("malformed polynomial: '" + compact + "'");
                coeff = static_cast<std::uint32_t>(parse_uint(term.substr(0, xpos - 1), compact));
            }
            std::string_view tail = term.substr(xpos + 1);
            if (tail.empty()) {
                power = 1;
            } else {
                if (tail[0] != '^') throw std::invalid_argument("malformed polynomial: '" + compact + "'");
                power = parse_uint(tail.substr(1), compact);
            }
        }
        if (coeff >= ctx.order()) throw std::out_of_range("coefficient " + std::to_string(coeff) + " outside the field");
        acc += Poly::monomial(ctx, FieldElem{coeff}, power);
    }
    return acc;
}

bool canonical_less(const Poly& a, const Poly& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const auto x = a.coeff(static_cast<std::size_t>(i)), y = b.coeff(static_cast<std::size_t>(i));
        if (x != y) return x < y;
    }
    return false;
}

}  // namespace constaclass
