#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "charcodes/errors.hpp"

namespace charcodes {

/// An element of a finite field, stored as its canonical index in [0, q).
/// The index packs the polynomial-basis coefficients as base-p digits, least
/// significant digit = constant coefficient; index 0 is zero, index 1 is one.
struct Fq {
    uint32_t v = 0;
    constexpr Fq() = default;
    constexpr explicit Fq(uint32_t raw) : v(raw) {}
    friend constexpr bool operator==(Fq, Fq) = default;
    friend constexpr auto operator<=>(Fq, Fq) = default;
};

class FieldCtx;
using FieldRef = std::shared_ptr<const FieldCtx>;

/// A concrete finite field F_{p^b} with exact arithmetic and a canonical
/// element enumeration. Immutable after construction; all operations are
/// pure and safe to call concurrently.
class FieldCtx {
   public:
    uint64_t p() const { return p_; }
    uint64_t b() const { return b_; }
    uint64_t q() const { return q_; }
    /// Monic irreducible modulus over F_p, coefficients c_0..c_b low-to-high.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Fq zero() const { return Fq(0); }
    Fq one() const { return Fq(1); }

    /// Element with canonical index n; n must be < q.
    Fq element(uint64_t n) const {
        if (n >= q_) throw CtxMismatch("element index out of range");
        return Fq(static_cast<uint32_t>(n));
    }
    /// Lift of an integer into the prime subfield (n mod p).
    Fq from_int(uint64_t n) const { return Fq(static_cast<uint32_t>(n % p_)); }

    bool in_prime_subfield(Fq a) const { return a.v < p_; }

    /// Polynomial-basis coefficients of a, length b, constant coefficient first.
    std::vector<uint32_t> digits(Fq a) const;
    Fq from_digits(const std::vector<uint32_t>& d) const;

    Fq add(Fq a, Fq b) const {
        check(a), check(b);
        if (b_ == 1) {
            uint64_t s = uint64_t(a.v) + b.v;
            return Fq(static_cast<uint32_t>(s >= p_ ? s - p_ : s));
        }
        if (p_ == 2) return Fq(a.v ^ b.v);
        if (!add_.empty()) return Fq(add_[size_t(a.v) * q_ + b.v]);
        return add_digits(a, b, false);
    }
    Fq sub(Fq a, Fq b) const {
        check(a), check(b);
        if (b_ == 1) {
            uint64_t s = uint64_t(a.v) + p_ - b.v;
            return Fq(static_cast<uint32_t>(s >= p_ ? s - p_ : s));
        }
        if (p_ == 2) return Fq(a.v ^ b.v);
        if (!add_.empty()) return Fq(add_[size_t(a.v) * q_ + neg_[b.v]]);
        return add_digits(a, b, true);
    }
    Fq neg(Fq a) const {
        check(a);
        if (b_ == 1) return Fq(a.v ? static_cast<uint32_t>(p_ - a.v) : 0);
        if (p_ == 2) return a;
        if (!neg_.empty()) return Fq(neg_[a.v]);
        return add_digits(zero(), a, true);
    }

    Fq mul(Fq a, Fq b) const {
        check(a), check(b);
        if (b_ == 1) return Fq(static_cast<uint32_t>(uint64_t(a.v) * b.v % p_));
        if (!exp_.empty()) {
            if (a.v == 0 || b.v == 0) return zero();
            uint64_t s = uint64_t(log_[a.v]) + log_[b.v];
            if (s >= q_ - 1) s -= q_ - 1;
            return Fq(exp_[s]);
        }
        return mul_generic(a, b);
    }

    /// Multiplicative inverse; a must be nonzero.
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

    /// a^e for e >= 0, with a^0 = 1 (including a = 0).
    Fq pow(Fq a, uint64_t e) const;

    /// Field trace onto the prime subfield: sum of a^{p^i}, i < b.
    Fq trace(Fq a) const;

    /// Quadratic residue character a^{(q-1)/2}, valued in {0, 1, -1}. Odd q only.
    Fq quad_char(Fq a) const {
        if (p_ == 2) throw EvenCharacteristic("quad_char requires odd q");
        return pow(a, (q_ - 1) / 2);
    }

    /// m-th power residue character a^{(q-1)/m}; m must be a prime divisor of q-1.
    Fq power_residue_char(uint64_t m, Fq a) const;

    /// binom(n, k) mod p via Lucas' theorem, returned as a prime-subfield element.
    Fq binomial(uint64_t n, uint64_t k) const;

    /// Structural equality (same p, b, modulus); such contexts interoperate.
    bool same(const FieldCtx& o) const {
        return p_ == o.p_ && b_ == o.b_ && modulus_ == o.modulus_;
    }

    friend FieldRef make_field(uint64_t p, uint64_t b,
                               std::optional<std::vector<uint32_t>> modulus);

   private:
    FieldCtx() = default;

    void check(Fq a) const {
        if (a.v >= q_) throw CtxMismatch("element does not belong to this field");
    }
    Fq add_digits(Fq a, Fq b, bool subtract) const;
    Fq mul_generic(Fq a, Fq b) const;

    uint64_t p_ = 0, b_ = 0, q_ = 0;
    std::vector<uint32_t> modulus_;
    // discrete exp/log fast path for small extension fields
    std::vector<uint32_t> exp_, log_;
    // addition tables for small odd-characteristic extension fields
    std::vector<uint32_t> add_, neg_;
    // factorials mod p for Lucas digits
    std::vector<uint32_t> fact_, inv_fact_;
};

/// Construct F_{p^b}. If no modulus is given, the lexicographically least
/// monic irreducible of degree b over F_p is selected (coefficient sequences
/// compared constant term first), so independent builds agree.
FieldRef make_field(uint64_t p, uint64_t b,
                    std::optional<std::vector<uint32_t>> modulus = std::nullopt);

/// Throws CtxMismatch unless the two contexts are interoperable.
inline void require_same_field(const FieldRef& a, const FieldRef& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same(*b)) throw CtxMismatch("field contexts differ");
}

}  // namespace charcodes
