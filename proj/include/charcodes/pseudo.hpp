#pragma once

#include <cstdint>
#include <vector>

#include "charcodes/factor.hpp"
#include "charcodes/poly.hpp"

namespace charcodes {

/// Base-Lambda representation sum_i C_i(X) * (X^q - X)^i with deg(C_i) < q.
/// Trailing zero digits are trimmed; the zero pseudopolynomial has no digits.
class PseudoPoly {
   public:
    explicit PseudoPoly(FieldRef f) : ctx_(std::move(f)) {}
    PseudoPoly(FieldRef f, std::vector<Poly> digits);

    const FieldRef& field() const { return ctx_; }
    bool is_zero() const { return digits_.empty(); }
    /// Number of stored digits (index of the top nonzero digit plus one).
    size_t length() const { return digits_.size(); }
    /// Digit i, zero beyond the stored length.
    Poly digit(size_t i) const { return i < digits_.size() ? digits_[i] : Poly::zero(ctx_); }
    const std::vector<Poly>& digits() const { return digits_; }

    /// Shift by a power of Lambda: multiplies by (X^q - X)^k.
    PseudoPoly lambda_shifted(size_t k) const;

    friend bool operator==(const PseudoPoly& a, const PseudoPoly& b) {
        return a.digits_ == b.digits_;
    }

   private:
    FieldRef ctx_;
    std::vector<Poly> digits_;
};

/// X^q - X over the given field.
Poly lambda_poly(const FieldRef& f);

/// Quotient and remainder of division by X^q - X, in linear time.
std::pair<Poly, Poly> divmod_lambda(const Poly& a);

/// Base-Lambda expansion via repeated division by X^q - X.
PseudoPoly to_base_lambda(const Poly& a);
Poly from_base_lambda(const PseudoPoly& p);

/// The unique polynomial of degree < q agreeing with the l-th Hasse derivative
/// of a on every field element: hasse_derivative(a, l) mod (X^q - X).
Poly pseudoderivative(const Poly& a, uint64_t ell);

/// max over l of deg(pseudoderivative(a, l)); computed as the maximum digit
/// degree of the base-Lambda expansion. Throws on the zero polynomial.
size_t pseudodegree(const Poly& a);

/// A nonzero pseudopolynomial E = sum_{i<c} E_i Lambda^i with deg(E_i) <= h
/// that vanishes with multiplicity >= M at every element of S. Requires
/// c*(h+1) > |S|*M and M < q.
PseudoPoly error_locator(const FieldRef& f, const std::vector<Fq>& s, uint64_t m_mult,
                         uint64_t c, uint64_t h);

/// Irreducible factors of a with multiplicities reduced mod q.
struct FactorResidue {
    Poly factor;
    size_t multiplicity;
    uint64_t residue;  // multiplicity mod q
};
std::vector<FactorResidue> factor_mult_residues(const Poly& a, uint64_t seed);

/// Number of field elements where a vanishes with multiplicity >= m_mult.
size_t high_mult_root_count(const Poly& a, uint64_t m_mult);

}  // namespace charcodes
