#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "charcodes/field.hpp"

namespace charcodes {

/// Dense univariate polynomial over a FieldCtx. Normalized: the stored
/// coefficient sequence never ends in zero, and the zero polynomial is the
/// empty sequence (it has no degree; degree() throws on it). Immutable value
/// semantics; all operations are pure.
class Poly {
   public:
    Poly() = default;  // zero polynomial with no field attached; set via factories

    static Poly zero(FieldRef f) { return Poly(std::move(f), {}); }
    static Poly constant(FieldRef f, Fq c);
    static Poly x(FieldRef f);
    static Poly monomial(FieldRef f, Fq c, size_t deg);
    static Poly from_coeffs(FieldRef f, std::vector<Fq> coeffs);

    const FieldRef& field() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == Fq(1); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == Fq(1); }

    size_t degree() const {
        if (c_.empty()) throw ZeroPolynomial("degree of the zero polynomial");
        return c_.size() - 1;
    }
    Fq coeff(size_t i) const { return i < c_.size() ? c_[i] : Fq(0); }
    Fq leading_coeff() const {
        if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero");
        return c_.back();
    }
    std::span<const Fq> coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(Fq s) const;
    Poly monic() const;
    Poly pow(uint64_t e) const;
    Poly shifted(size_t k) const;  // multiply by X^k

    /// Quotient and remainder; deg(rem) < deg(divisor).
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);

    Fq evaluate(Fq alpha) const;
    /// Values at every field element in canonical enumeration order (length q).
    std::vector<Fq> evaluate_all() const;

    /// Formal derivative (coefficient i*a_i at X^{i-1}).
    Poly derivative() const;

   private:
    Poly(FieldRef f, std::vector<Fq> c) : ctx_(std::move(f)), c_(std::move(c)) {}
    void trim() {
        while (!c_.empty() && c_.back() == Fq(0)) c_.pop_back();
    }

    FieldRef ctx_;
    std::vector<Fq> c_;  // c_[i] = coefficient of X^i
};

/// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);

/// l-th Hasse derivative: coefficient of Z^l in A(X+Z); binomials mod p.
Poly hasse_derivative(const Poly& a, uint64_t ell);

/// Largest r such that (X - alpha)^r divides a. Throws on the zero polynomial.
size_t multiplicity(const Poly& a, Fq alpha);

/// g = unit * core * square_part^2 with core monic squarefree, square_part
/// monic. Odd characteristic.
struct SquarefreeCore {
    Fq unit;
    Poly core;
    Poly square_part;
};
SquarefreeCore squarefree_core(const Poly& g);

/// Characteristic 2: g = constant + odd_part + shift + shift^2, where
/// odd_part has only odd-degree monomials and shift has zero constant term.
struct OddCore {
    Fq constant;
    Poly odd_part;
    Poly shift;
};
OddCore odd_core(const Poly& g);

/// Monic squarefree parts with their exact multiplicities: f = lc * prod part_i^{mult_i},
/// parts pairwise coprime and squarefree, sorted by multiplicity.
std::vector<std::pair<Poly, size_t>> squarefree_decomposition(const Poly& f);

}  // namespace charcodes
