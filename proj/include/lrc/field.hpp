#pragma once

// Arithmetic in GF(p) and GF(p^m) over a polynomial basis.
//
// Elements are stored in their canonical encoding: the integer whose base-p
// digits are the polynomial coefficients, constant term least significant.
// GF(16) with modulus x^4+x+1 therefore encodes x^3+1 as 9.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lrc/error.hpp"

namespace lrc {

using elem_t = std::uint32_t;

/// Largest supported field order.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 24;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors of n, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Splits q = p^m with p prime. Returns nullopt when q is not a prime power.
inline std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto f = prime_factors(q);
    if (f.size() != 1) return std::nullopt;
    unsigned m = 0;
    while (q > 1) {
        q /= f[0];
        ++m;
    }
    return std::pair{static_cast<std::uint32_t>(f[0]), m};
}

namespace poly {

/// Polynomial over GF(p), coefficients low-degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::pair{nt, t - q * nt};
        std::tie(r, nr) = std::pair{nr, r - q * nr};
    }
    if (r != 1) throw Error("inverse of zero");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

inline Poly sub(Poly a, const Poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    trim(out);
    return out;
}

/// Quotient and remainder of a / b; b must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint32_t p) {
    if (b.empty()) throw Error("polynomial division by zero");
    trim(a);
    if (a.size() < b.size()) return {Poly{}, a};
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    Poly q(a.size() - b.size() + 1, 0);
    for (int d = degree(a); d >= degree(b); --d) {
        const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{a[d]} * lead_inv % p);
        if (c == 0) continue;
        const std::size_t shift = static_cast<std::size_t>(d - degree(b));
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + std::uint64_t{p - c} * b[j]) % p);
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline Poly mod(const Poly& a, const Poly& m, std::uint32_t p) { return divmod(a, m, p).second; }

inline Poly monic(Poly a, std::uint32_t p) {
    trim(a);
    if (a.empty()) return a;
    const std::uint32_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(std::uint64_t{c} * li % p);
    return a;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a), p);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
    Poly result{1};
    base = mod(base, m, p);
    while (e > 0) {
        if (e & 1) result = mod(mul(result, base, p), m, p);
        e >>= 1;
        if (e) base = mod(mul(base, base, p), m, p);
    }
    return result;
}

inline std::uint64_t encode(const Poly& a, std::uint32_t p) {
    std::uint64_t v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * p + *it;
    return v;
}

inline Poly decode(std::uint64_t v, std::uint32_t p) {
    Poly a;
    while (v > 0) {
        a.push_back(static_cast<std::uint32_t>(v % p));
        v /= p;
    }
    return a;
}

/// Ben-Or irreducibility test: f of degree m is irreducible iff
/// gcd(x^(p^i) - x, f) = 1 for every 1 <= i <= m/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    const int m = degree(f);
    if (m < 1) return false;
    if (m == 1) return true;
    const Poly x{0, 1};
    Poly xp = x;
    for (int i = 1; i <= m / 2; ++i) {
        xp = powmod(xp, p, f, p);
        if (degree(gcd(f, sub(xp, x, p), p)) > 0) return false;
    }
    return true;
}

}  // namespace poly

/// A finite field GF(p^m). Immutable once constructed; share it via FieldRef.
class Field {
public:
    /// Builds GF(p^m). When `modulus` is omitted the monic irreducible of
    /// degree m with the smallest canonical encoding is used (x^4+x+1 for GF(16)).
    /// For m = 1 the modulus is normalized to x.
    static std::shared_ptr<const Field> make(std::uint32_t p, unsigned m,
                                             std::optional<poly::Poly> modulus = std::nullopt) {
        if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
        if (m < 1) throw Error("extension degree must be positive");
        std::uint64_t size = 1;
        for (unsigned i = 0; i < m; ++i) {
            size *= p;
            if (size > kMaxFieldSize) throw Error("field too large");
        }
        poly::Poly mod;
        if (m == 1) {
            if (modulus) {
                auto given = *modulus;
                poly::trim(given);
                if (poly::degree(given) != 1 || given.back() != 1 || given.front() >= p)
                    throw Error("modulus must be monic of degree 1");
            }
            mod = {0, 1};
        } else if (modulus) {
            mod = *modulus;
            poly::trim(mod);
            if (poly::degree(mod) != static_cast<int>(m) || mod.back() != 1)
                throw Error("modulus must be monic of degree " + std::to_string(m));
            for (auto c : mod)
                if (c >= p) throw Error("modulus coefficient out of range");
            if (!poly::is_irreducible(mod, p)) throw Error("modulus is reducible");
        } else {
            mod = least_irreducible(p, m);
        }
        return std::shared_ptr<const Field>(new Field(p, m, size, std::move(mod)));
    }

    /// Builds GF(q) for a prime power q with the default modulus.
    static std::shared_ptr<const Field> of_order(std::uint64_t q) {
        auto pm = prime_power(q);
        if (!pm) throw Error("field order " + std::to_string(q) + " is not a prime power");
        return make(pm->first, pm->second);
    }

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint64_t size() const { return size_; }
    const poly::Poly& modulus() const { return modulus_; }
    std::uint64_t modulus_code() const { return poly::encode(modulus_, p_); }
    bool contains(elem_t a) const { return a < size_; }

    /// `q=<p>^<m> mod=<modulus encoding>`
    std::string header() const {
        std::ostringstream os;
        os << "q=" << p_ << '^' << m_ << " mod=" << modulus_code();
        return os.str();
    }

    bool operator==(const Field& o) const { return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_; }

    elem_t add(elem_t a, elem_t b) const {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) return static_cast<elem_t>((std::uint64_t{a} + b) % p_);
        elem_t out = 0, place = 1;
        while (a != 0 || b != 0) {
            out += ((a % p_ + b % p_) % p_) * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return out;
    }

    elem_t neg(elem_t a) const {
        if (p_ == 2) return a;
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        elem_t out = 0, place = 1;
        while (a != 0) {
            out += ((p_ - a % p_) % p_) * place;
            a /= p_;
            place *= p_;
        }
        return out;
    }

    elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

    elem_t mul(elem_t a, elem_t b) const {
        if (a == 0 || b == 0) return 0;
        if (m_ == 1) return static_cast<elem_t>(std::uint64_t{a} * b % p_);
        if (p_ == 2) return mul_binary(a, b);
        std::array<std::uint64_t, 64> prod{};
        std::array<std::uint32_t, 32> da{}, db{};
        for (unsigned i = 0; i < m_; ++i) {
            da[i] = a % p_;
            a /= p_;
            db[i] = b % p_;
            b /= p_;
        }
        for (unsigned i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
        }
        for (int d = 2 * static_cast<int>(m_) - 2; d >= static_cast<int>(m_); --d) {
            const std::uint64_t c = prod[d];
            if (c == 0) continue;
            const unsigned shift = static_cast<unsigned>(d) - m_;
            for (unsigned j = 0; j <= m_; ++j) prod[shift + j] = (prod[shift + j] + (p_ - c) * modulus_[j]) % p_;
        }
        elem_t out = 0;
        for (int i = static_cast<int>(m_) - 1; i >= 0; --i) out = out * p_ + static_cast<elem_t>(prod[i]);
        return out;
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    elem_t inv(elem_t a) const {
        if (a == 0) throw Error("inverse of zero");
        if (m_ == 1) return poly::inv_mod(a, p_);
        // Invariant: s * a == r (mod modulus).
        poly::Poly r0 = modulus_, r1 = poly::decode(a, p_);
        poly::Poly s0{}, s1{1};
        while (!r1.empty()) {
            auto [q, r] = poly::divmod(r0, r1, p_);
            poly::Poly s = poly::sub(s0, poly::mul(q, s1, p_), p_);
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        // r0 is a nonzero constant.
        const std::uint32_t c = poly::inv_mod(r0[0], p_);
        for (auto& v : s0) v = static_cast<std::uint32_t>(std::uint64_t{v} * c % p_);
        return static_cast<elem_t>(poly::encode(s0, p_));
    }

    elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }

    /// Square-and-multiply; pow(0, 0) == 1.
    elem_t pow(elem_t a, std::uint64_t e) const {
        if (a != 0 && e >= size_ - 1) e %= (size_ - 1);
        elem_t result = 1;
        while (e > 0) {
            if (e & 1) result = mul(result, a);
            e >>= 1;
            if (e) a = mul(a, a);
        }
        return result;
    }

    /// Image of an integer under the prime-subfield embedding.
    elem_t from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<elem_t>(r);
    }

    /// Degree t of the subfield GF(q) = GF(p^t); throws unless t divides m.
    unsigned subfield_degree(std::uint64_t q) const {
        auto pm = prime_power(q);
        if (!pm || pm->first != p_ || m_ % pm->second != 0)
            throw Error("GF(" + std::to_string(q) + ") is not a subfield of GF(" + std::to_string(size_) + ")");
        return pm->second;
    }

    /// a^(q^i), the i-th power of the Frobenius map over GF(q).
    elem_t frobenius(elem_t a, std::uint64_t q, std::uint64_t i) const {
        const unsigned t = subfield_degree(q);
        const std::uint64_t period = m_ / t;
        for (std::uint64_t step = 0; step < i % period; ++step) a = pow(a, q);
        return a;
    }

    elem_t primitive_element() const {
        if (size_ == 2) return 1;
        const auto factors = prime_factors(size_ - 1);
        for (elem_t g = 2; g < size_; ++g) {
            bool ok = true;
            for (auto f : factors) {
                if (pow(g, (size_ - 1) / f) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) return g;
        }
        throw Error("no primitive element");  // unreachable for a field
    }

    /// A GF(p)-basis of the subfield GF(q): 1, h, ..., h^(t-1) for a generator h of GF(q)*.
    std::vector<elem_t> subfield_basis(std::uint64_t q) const {
        const unsigned t = subfield_degree(q);
        if (t == 1) return {1};
        const elem_t h = pow(primitive_element(), (size_ - 1) / (q - 1));
        std::vector<elem_t> basis{1};
        for (unsigned i = 1; i < t; ++i) basis.push_back(mul(basis.back(), h));
        return basis;
    }

    /// The m base-p coordinates of a, constant term first.
    std::vector<elem_t> digits(elem_t a) const {
        std::vector<elem_t> d(m_);
        for (unsigned i = 0; i < m_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

private:
    Field(std::uint32_t p, unsigned m, std::uint64_t size, poly::Poly modulus)
        : p_(p), m_(m), size_(size), modulus_(std::move(modulus)) {
        if (p_ == 2) modulus_bits_ = static_cast<elem_t>(poly::encode(modulus_, 2));
    }

    static poly::Poly least_irreducible(std::uint32_t p, unsigned m) {
        std::uint64_t lead = 1;
        for (unsigned i = 0; i < m; ++i) lead *= p;
        for (std::uint64_t low = 0; low < lead; ++low) {
            poly::Poly f = poly::decode(low, p);
            f.resize(m + 1, 0);
            f[m] = 1;
            if (poly::is_irreducible(f, p)) return f;
        }
        throw Error("no irreducible polynomial found");  // unreachable
    }

    elem_t mul_binary(elem_t a, elem_t b) const {
        const elem_t top = elem_t{1} << m_;
        elem_t r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & top) a ^= modulus_bits_;
        }
        return r;
    }

    std::uint32_t p_;
    unsigned m_;
    std::uint64_t size_;
    poly::Poly modulus_;
    elem_t modulus_bits_ = 0;
};

using FieldRef = std::shared_ptr<const Field>;

/// A field element bound to its field. Mixed-field arithmetic throws.
class Felt {
public:
    Felt(FieldRef field, elem_t value) : field_(std::move(field)), value_(value) {
        if (!field_->contains(value_)) throw Error("element " + std::to_string(value_) + " out of range");
    }

    const FieldRef& field() const { return field_; }
    elem_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    Felt operator+(const Felt& o) const { return {field_, field_->add(value_, checked(o))}; }
    Felt operator-(const Felt& o) const { return {field_, field_->sub(value_, checked(o))}; }
    Felt operator*(const Felt& o) const { return {field_, field_->mul(value_, checked(o))}; }
    Felt operator/(const Felt& o) const { return {field_, field_->div(value_, checked(o))}; }
    Felt operator-() const { return {field_, field_->neg(value_)}; }
    Felt inv() const { return {field_, field_->inv(value_)}; }
    Felt pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
    Felt frobenius(std::uint64_t base_q, std::uint64_t i) const {
        return {field_, field_->frobenius(value_, base_q, i)};
    }

    bool operator==(const Felt& o) const { return value_ == checked(o); }

private:
    elem_t checked(const Felt& o) const {
        if (field_ != o.field_ && !(*field_ == *o.field_)) throw Error("field mismatch");
        return o.value_;
    }

    FieldRef field_;
    elem_t value_;
};

}  // namespace lrc
