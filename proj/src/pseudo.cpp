#include "charcodes/pseudo.hpp"

#include "charcodes/linsolve.hpp"

namespace charcodes {

PseudoPoly::PseudoPoly(FieldRef f, std::vector<Poly> digits)
    : ctx_(std::move(f)), digits_(std::move(digits)) {
    for (const Poly& d : digits_) {
        require_same_field(ctx_, d.field());
        if (!d.is_zero() && d.degree() >= ctx_->q())
            throw CtxMismatch("base-Lambda digit must have degree < q");
    }
    while (!digits_.empty() && digits_.back().is_zero()) digits_.pop_back();
}

PseudoPoly PseudoPoly::lambda_shifted(size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Poly> d(digits_.size() + k, Poly::zero(ctx_));
    for (size_t i = 0; i < digits_.size(); ++i) d[i + k] = digits_[i];
    return PseudoPoly(ctx_, std::move(d));
}

Poly lambda_poly(const FieldRef& f) {
    std::vector<Fq> c(f->q() + 1, Fq(0));
    c[1] = f->neg(Fq(1));
    c[f->q()] = Fq(1);
    return Poly::from_coeffs(f, std::move(c));
}

std::pair<Poly, Poly> divmod_lambda(const Poly& a) {
    const FieldRef& f = a.field();
    const uint64_t q = f->q();
    if (a.is_zero() || a.degree() < q) return {Poly::zero(f), a};
    std::vector<Fq> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Fq> quot(rem.size() - q, Fq(0));
    // X^i = X^{i-q} * (X^q - X) + X^{i-q+1}
    for (size_t i = rem.size(); i-- > q;) {
        Fq c = rem[i];
        if (c == Fq(0)) continue;
        rem[i] = Fq(0);
        quot[i - q] = f->add(quot[i - q], c);
        rem[i - q + 1] = f->add(rem[i - q + 1], c);
    }
    return {Poly::from_coeffs(f, std::move(quot)), Poly::from_coeffs(f, std::move(rem))};
}

PseudoPoly to_base_lambda(const Poly& a) {
    const FieldRef& f = a.field();
    std::vector<Poly> digits;
    Poly cur = a;
    while (!cur.is_zero()) {
        auto [q, r] = divmod_lambda(cur);
        digits.push_back(std::move(r));
        cur = std::move(q);
    }
    return PseudoPoly(f, std::move(digits));
}

Poly from_base_lambda(const PseudoPoly& p) {
    const FieldRef& f = p.field();
    if (p.is_zero()) return Poly::zero(f);
    // Horner in Lambda; multiplication by X^q - X is a shift and a subtraction
    Poly acc = p.digits().back();
    for (size_t i = p.length() - 1; i-- > 0;) {
        acc = acc.shifted(f->q()) - acc.shifted(1) + p.digits()[i];
    }
    return acc;
}

Poly pseudoderivative(const Poly& a, uint64_t ell) {
    return divmod_lambda(hasse_derivative(a, ell)).second;
}

size_t pseudodegree(const Poly& a) {
    if (a.is_zero()) throw ZeroPolynomial("pseudodegree of the zero polynomial");
    size_t best = 0;
    for (const Poly& d : to_base_lambda(a).digits())
        if (!d.is_zero()) best = std::max(best, d.degree());
    return best;
}

PseudoPoly error_locator(const FieldRef& f, const std::vector<Fq>& s, uint64_t m_mult,
                         uint64_t c, uint64_t h) {
    if (m_mult >= f->q()) throw InfeasibleParameters("multiplicity must be below q");
    if (c * (h + 1) <= s.size() * m_mult)
        throw InfeasibleParameters("need c*(h+1) > |S|*M for an error locator");
    if (c == 0) throw InfeasibleParameters("need at least one base-Lambda digit");

    // divisibility by Z_S^M expressed as vanishing of the remainder mod Z_S^M
    Poly z = Poly::constant(f, Fq(1));
    for (Fq alpha : s) z = z * Poly::from_coeffs(f, {f->neg(alpha), Fq(1)});
    Poly zm = z.pow(m_mult);
    const size_t rows = s.size() * m_mult;  // deg(Z_S^M)
    const size_t cols = c * (h + 1);
    MatrixFq sys(f, rows, cols);
    Poly lam_rem = lambda_poly(f) % zm;
    Poly digit_power = Poly::constant(f, Fq(1)) % zm;  // Lambda^i mod Z_S^M
    for (uint64_t i = 0; i < c; ++i) {
        Poly cur = digit_power;  // X^j * Lambda^i mod Z_S^M
        for (uint64_t j = 0; j <= h; ++j) {
            const size_t col = i * (h + 1) + j;
            if (!cur.is_zero())
                for (size_t k = 0; k <= cur.degree(); ++k) sys.at(k, col) = cur.coeff(k);
            cur = (cur.shifted(1)) % zm;
        }
        digit_power = (digit_power * lam_rem) % zm;
    }
    auto basis = nullspace_basis(sys);
    if (basis.empty()) throw NotFound("no nonzero locator despite feasible parameters");
    const std::vector<Fq>& v = basis.front();
    std::vector<Poly> digits;
    for (uint64_t i = 0; i < c; ++i) {
        std::vector<Fq> coeffs(v.begin() + static_cast<ptrdiff_t>(i * (h + 1)),
                               v.begin() + static_cast<ptrdiff_t>((i + 1) * (h + 1)));
        digits.push_back(Poly::from_coeffs(f, std::move(coeffs)));
    }
    return PseudoPoly(f, std::move(digits));
}

std::vector<FactorResidue> factor_mult_residues(const Poly& a, uint64_t seed) {
    if (a.is_zero()) throw ZeroPolynomial("factor residues of the zero polynomial");
    const uint64_t q = a.field()->q();
    std::vector<FactorResidue> out;
    for (auto& term : factor_poly(a, seed).terms)
        out.push_back({term.factor, term.multiplicity, term.multiplicity % q});
    return out;
}

size_t high_mult_root_count(const Poly& a, uint64_t m_mult) {
    if (a.is_zero()) throw ZeroPolynomial("root count of the zero polynomial");
    const FieldRef& f = a.field();
    size_t count = 0;
    for (uint64_t n = 0; n < f->q(); ++n) {
        Fq alpha(static_cast<uint32_t>(n));
        if (a.evaluate(alpha) != Fq(0)) continue;
        if (multiplicity(a, alpha) >= m_mult) ++count;
    }
    return count;
}

}  // namespace charcodes
