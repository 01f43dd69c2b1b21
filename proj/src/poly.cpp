#include "charcodes/poly.hpp"

#include <algorithm>

namespace charcodes {

namespace {

const FieldRef& common_field(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    return a.field() ? a.field() : b.field();
}

}  // namespace

Poly Poly::constant(FieldRef f, Fq c) {
    std::vector<Fq> v;
    if (c != Fq(0)) v.push_back(c);
    return Poly(std::move(f), std::move(v));
}

Poly Poly::x(FieldRef f) { return Poly(std::move(f), {Fq(0), Fq(1)}); }

Poly Poly::monomial(FieldRef f, Fq c, size_t deg) {
    if (c == Fq(0)) return zero(std::move(f));
    std::vector<Fq> v(deg + 1, Fq(0));
    v[deg] = c;
    return Poly(std::move(f), std::move(v));
}

Poly Poly::from_coeffs(FieldRef f, std::vector<Fq> coeffs) {
    for (Fq c : coeffs)
        if (c.v >= f->q()) throw CtxMismatch("coefficient does not belong to the field");
    Poly r(std::move(f), std::move(coeffs));
    r.trim();
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    const FieldRef& f = common_field(a, b);
    std::vector<Fq> c(std::max(a.c_.size(), b.c_.size()), Fq(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = f->add(a.coeff(i), b.coeff(i));
    Poly r(f, std::move(c));
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    const FieldRef& f = common_field(a, b);
    std::vector<Fq> c(std::max(a.c_.size(), b.c_.size()), Fq(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = f->sub(a.coeff(i), b.coeff(i));
    Poly r(f, std::move(c));
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Fq& c : r.c_) c = ctx_->neg(c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    const FieldRef& f = common_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(f);
    std::vector<Fq> c(a.c_.size() + b.c_.size() - 1, Fq(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == Fq(0)) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == Fq(0)) continue;
            c[i + j] = f->add(c[i + j], f->mul(a.c_[i], b.c_[j]));
        }
    }
    return Poly(f, std::move(c));  // leading term nonzero: deg is additive
}

Poly Poly::scaled(Fq s) const {
    if (s == Fq(0)) return zero(ctx_);
    Poly r = *this;
    for (Fq& c : r.c_) c = ctx_->mul(c, s);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw ZeroPolynomial("monic of zero");
    return scaled(ctx_->inv(leading_coeff()));
}

Poly Poly::pow(uint64_t e) const {
    Poly r = constant(ctx_, Fq(1));
    Poly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly Poly::shifted(size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Fq> c(c_.size() + k, Fq(0));
    std::copy(c_.begin(), c_.end(), c.begin() + static_cast<ptrdiff_t>(k));
    return Poly(ctx_, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    const FieldRef& f = common_field(a, b);
    if (b.is_zero()) throw DivideByZero("division by the zero polynomial");
    if (a.is_zero() || a.c_.size() < b.c_.size()) return {Poly::zero(f), a};
    std::vector<Fq> rem(a.c_.begin(), a.c_.end());
    const size_t db = b.c_.size() - 1;
    std::vector<Fq> quot(rem.size() - db, Fq(0));
    const Fq inv_lead = f->inv(b.c_.back());
    for (size_t i = rem.size(); i-- > db;) {
        Fq c = f->mul(rem[i], inv_lead);
        if (c == Fq(0)) continue;
        quot[i - db] = c;
        for (size_t j = 0; j <= db; ++j)
            rem[i - db + j] = f->sub(rem[i - db + j], f->mul(c, b.c_[j]));
    }
    Poly q(f, std::move(quot)), r(f, std::move(rem));
    q.trim();
    r.trim();
    return {std::move(q), std::move(r)};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Fq Poly::evaluate(Fq alpha) const {
    const FieldCtx& f = *ctx_;
    Fq acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, alpha), c_[i]);
    return acc;
}

std::vector<Fq> Poly::evaluate_all() const {
    std::vector<Fq> out(ctx_->q());
    for (uint64_t n = 0; n < ctx_->q(); ++n) out[n] = evaluate(Fq(static_cast<uint32_t>(n)));
    return out;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return zero(ctx_);
    std::vector<Fq> c(c_.size() - 1, Fq(0));
    for (size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = ctx_->mul(c_[i], ctx_->from_int(i % ctx_->p()));
    Poly r(ctx_, std::move(c));
    r.trim();
    return r;
}

Poly gcd(Poly a, Poly b) {
    common_field(a, b);
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Poly hasse_derivative(const Poly& a, uint64_t ell) {
    const FieldRef& f = a.field();
    if (a.is_zero() || ell > a.degree()) return Poly::zero(f);
    if (ell == 0) return a;
    std::vector<Fq> c(a.degree() - ell + 1, Fq(0));
    for (size_t i = ell; i <= a.degree(); ++i) {
        Fq bin = f->binomial(i, ell);
        if (bin != Fq(0)) c[i - ell] = f->mul(a.coeff(i), bin);
    }
    return Poly::from_coeffs(f, std::move(c));
}

size_t multiplicity(const Poly& a, Fq alpha) {
    if (a.is_zero()) throw ZeroPolynomial("multiplicity in the zero polynomial");
    const FieldRef& f = a.field();
    Poly linear = Poly::from_coeffs(f, {f->neg(alpha), Fq(1)});
    size_t r = 0;
    Poly cur = a;
    while (true) {
        auto [q, rem] = divmod(cur, linear);
        if (!rem.is_zero()) return r;
        ++r;
        cur = std::move(q);
        if (cur.is_zero()) return r;  // only when a itself was zero; unreachable
    }
}

std::vector<std::pair<Poly, size_t>> squarefree_decomposition(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero");
    const FieldRef& ctx = f.field();
    const uint64_t p = ctx->p();
    std::vector<std::pair<Poly, size_t>> out;

    // p-th root of a polynomial whose nonzero exponents are all multiples of p;
    // coefficient roots exist and are unique (Frobenius is an automorphism).
    auto pth_root = [&](const Poly& a) {
        std::vector<Fq> c(a.degree() / p + 1, Fq(0));
        for (size_t i = 0; i <= a.degree(); i += p)
            c[i / p] = ctx->pow(a.coeff(i), ctx->q() / p);
        return Poly::from_coeffs(ctx, std::move(c));
    };

    auto recurse = [&](auto&& self, const Poly& g, size_t outer) -> void {
        if (g.is_constant()) return;
        Poly gp = g.derivative();
        if (gp.is_zero()) {
            self(self, pth_root(g), outer * p);
            return;
        }
        Poly c = gcd(g, gp);
        Poly w = g / c;
        size_t i = 1;
        while (!w.is_one()) {
            Poly y = gcd(w, c);
            Poly z = w / y;
            if (!z.is_constant()) out.emplace_back(z, i * outer);
            ++i;
            w = std::move(y);
            c = c / w;
        }
        if (!c.is_constant()) self(self, pth_root(c), outer * p);
    };
    recurse(recurse, f.monic(), 1);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

SquarefreeCore squarefree_core(const Poly& g) {
    if (g.is_zero()) throw ZeroPolynomial("squarefree core of zero");
    const FieldRef& ctx = g.field();
    if (ctx->p() == 2) throw EvenCharacteristic("squarefree core requires odd characteristic");
    Fq unit = g.leading_coeff();
    Poly core = Poly::constant(ctx, Fq(1));
    Poly square = Poly::constant(ctx, Fq(1));
    for (auto& [part, mult] : squarefree_decomposition(g)) {
        if (mult % 2 == 1) core = core * part;
        if (mult / 2 > 0) square = square * part.pow(mult / 2);
    }
    return {unit, std::move(core), std::move(square)};
}

OddCore odd_core(const Poly& g) {
    const FieldRef& ctx = g.field();
    if (ctx->p() != 2) throw OddCharacteristic("odd-degree core requires characteristic 2");
    std::vector<Fq> work(g.coeffs().begin(), g.coeffs().end());
    std::vector<Fq> shift;
    // peel the highest even-degree monomial a*X^{2i} into sqrt(a)*X^i plus an
    // (h + h^2) pair until only odd monomials and the constant remain
    auto grow = [&](std::vector<Fq>& v, size_t n) {
        if (v.size() < n + 1) v.resize(n + 1, Fq(0));
    };
    while (true) {
        size_t top = 0;
        bool found = false;
        for (size_t i = work.size(); i-- > 1;) {
            if (i % 2 == 0 && work[i] != Fq(0)) {
                top = i;
                found = true;
                break;
            }
        }
        if (!found) break;
        Fq a = work[top];
        Fq s = ctx->pow(a, ctx->q() / 2);  // square root in characteristic 2
        work[top] = Fq(0);
        grow(work, top / 2);
        work[top / 2] = ctx->add(work[top / 2], s);
        grow(shift, top / 2);
        shift[top / 2] = ctx->add(shift[top / 2], s);
    }
    Fq constant = work.empty() ? Fq(0) : work[0];
    if (!work.empty()) work[0] = Fq(0);
    return {constant, Poly::from_coeffs(ctx, std::move(work)),
            Poly::from_coeffs(ctx, std::move(shift))};
}

}  // namespace charcodes
