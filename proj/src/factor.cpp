#include "charcodes/factor.hpp"

#include <algorithm>
#include <memory>

namespace charcodes {

namespace {

// Flat-array arithmetic mod a fixed monic polynomial. The prime-field path
// accumulates products in uint64 and reduces lazily; with q <= 2^20 and
// working degrees <= ~2^12 the sums stay far below 2^64.
class ModKernel {
   public:
    using Raw = std::vector<uint32_t>;

    ModKernel(const FieldRef& f, const Poly& modulus) : f_(f), field_(*f) {
        n_ = modulus.degree();
        mod_.resize(n_ + 1);
        for (size_t i = 0; i <= n_; ++i) mod_[i] = modulus.coeff(i).v;
        prime_ = field_.b() == 1;
        if (prime_) {
            pm_.resize(n_);
            for (size_t i = 0; i < n_; ++i)
                pm_[i] = static_cast<uint32_t>(field_.p() - mod_[i]) % field_.p();
        }
    }

    static Raw to_raw(const Poly& p) {
        Raw r(p.coeffs().size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = p.coeffs()[i].v;
        return r;
    }

    Poly to_poly(const Raw& r) const {
        std::vector<Fq> c(r.size());
        for (size_t i = 0; i < r.size(); ++i) c[i] = Fq(r[i]);
        return Poly::from_coeffs(f_, std::move(c));
    }

    void mulmod(const Raw& a, const Raw& b, Raw& out) {
        if (a.empty() || b.empty()) {
            out.clear();
            return;
        }
        if (prime_) {
            mulmod_prime(a, b, out);
        } else {
            mulmod_generic(a, b, out);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
    }

    Raw powmod(Raw base, uint64_t e) {
        Raw result{1}, scratch;
        while (e) {
            if (e & 1) {
                mulmod(result, base, scratch);
                result.swap(scratch);
            }
            e >>= 1;
            if (e) {
                mulmod(base, base, scratch);
                base.swap(scratch);
            }
        }
        return result;
    }

   private:
    void mulmod_prime(const Raw& a, const Raw& b, Raw& out) {
        const uint64_t p = field_.p();
        acc_.assign(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t ai = a[i];
            if (!ai) continue;
            uint64_t* cp = acc_.data() + i;
            for (size_t j = 0; j < b.size(); ++j) cp[j] += ai * b[j];
        }
        for (size_t i = acc_.size(); i-- > n_;) {
            uint64_t coef = acc_[i] % p;
            if (!coef) continue;
            uint64_t* cp = acc_.data() + (i - n_);
            for (size_t j = 0; j < n_; ++j) cp[j] += coef * pm_[j];
        }
        size_t len = std::min(acc_.size(), n_);
        out.resize(len);
        for (size_t i = 0; i < len; ++i) out[i] = static_cast<uint32_t>(acc_[i] % p);
    }

    void mulmod_generic(const Raw& a, const Raw& b, Raw& out) {
        Raw c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            Fq ai(a[i]);
            for (size_t j = 0; j < b.size(); ++j) {
                if (!b[j]) continue;
                c[i + j] = field_.add(Fq(c[i + j]), field_.mul(ai, Fq(b[j]))).v;
            }
        }
        for (size_t i = c.size(); i-- > n_;) {
            uint32_t coef = c[i];
            if (!coef) continue;
            c[i] = 0;
            for (size_t j = 0; j < n_; ++j) {
                if (!mod_[j]) continue;
                c[i - n_ + j] = field_.sub(Fq(c[i - n_ + j]), field_.mul(Fq(coef), Fq(mod_[j]))).v;
            }
        }
        c.resize(std::min(c.size(), n_));
        out = std::move(c);
    }

    FieldRef f_;
    const FieldCtx& field_;
    size_t n_ = 0;
    Raw mod_, pm_;
    bool prime_ = false;
    std::vector<uint64_t> acc_;
};

Poly random_poly_below(const FieldRef& ctx, size_t deg_bound, Rng& rng) {
    std::vector<Fq> c(deg_bound);
    for (Fq& x : c) x = Fq(static_cast<uint32_t>(rng.below(ctx->q())));
    return Poly::from_coeffs(ctx, std::move(c));
}

// Equal-degree splitting of a monic squarefree product of degree-d irreducibles.
void edf(const Poly& f, size_t d, Rng& rng, std::vector<Poly>& out) {
    const FieldRef& ctx = f.field();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const uint64_t q = ctx->q();
    ModKernel kernel(ctx, f);
    while (true) {
        Poly u = random_poly_below(ctx, f.degree(), rng);
        if (u.is_constant()) continue;
        Poly g = gcd(u, f);
        if (!g.is_constant() && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf(f / g, d, rng, out);
            return;
        }
        Poly t;
        if (ctx->p() == 2) {
            // trace map over F_{2^{b*d}} splits the roots into two classes
            ModKernel::Raw acc = ModKernel::to_raw(u % f), pw = acc, scratch;
            for (uint64_t i = 1; i < ctx->b() * d; ++i) {
                kernel.mulmod(pw, pw, scratch);
                pw.swap(scratch);
                if (acc.size() < pw.size()) acc.resize(pw.size(), 0);
                for (size_t j = 0; j < pw.size(); ++j) acc[j] ^= pw[j];
            }
            t = kernel.to_poly(acc);
        } else {
            // u^{(q^d-1)/2} = norm(u)^{(q-1)/2}; the norm keeps exponents in range
            ModKernel::Raw nrm = ModKernel::to_raw(u % f), frob = nrm, scratch;
            for (uint64_t i = 1; i < d; ++i) {
                frob = kernel.powmod(std::move(frob), q);
                kernel.mulmod(nrm, frob, scratch);
                nrm.swap(scratch);
            }
            t = kernel.to_poly(kernel.powmod(std::move(nrm), (q - 1) / 2)) -
                Poly::constant(ctx, Fq(1));
        }
        Poly g2 = gcd(t, f);
        if (!g2.is_constant() && g2.degree() < f.degree()) {
            edf(g2, d, rng, out);
            edf(f / g2, d, rng, out);
            return;
        }
    }
}

// Distinct-degree split of a monic squarefree polynomial: (product, degree) pairs.
std::vector<std::pair<Poly, size_t>> ddf(Poly f) {
    const FieldRef& ctx = f.field();
    const uint64_t q = ctx->q();
    std::vector<std::pair<Poly, size_t>> out;
    Poly x = Poly::x(ctx);
    auto kernel = std::make_unique<ModKernel>(ctx, f);
    ModKernel::Raw frob = kernel->powmod(ModKernel::to_raw(x % f), q);  // X^{q^i} mod f
    size_t i = 1;
    while (!f.is_one() && f.degree() >= 2 * i) {
        Poly g = gcd(kernel->to_poly(frob) - x, f);
        if (!g.is_constant()) {
            out.emplace_back(g, i);
            f = f / g;
            if (f.is_one()) return out;
            kernel = std::make_unique<ModKernel>(ctx, f);
            frob = ModKernel::to_raw(kernel->to_poly(frob) % f);
        }
        ++i;
        frob = kernel->powmod(std::move(frob), q);
    }
    if (!f.is_one()) out.emplace_back(f, f.degree());
    return out;
}

bool coeff_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

}  // namespace

Poly Factorization::product(const FieldRef& f) const {
    Poly r = Poly::constant(f, unit);
    for (const auto& t : terms) r = r * t.factor.pow(t.multiplicity);
    return r;
}

Factorization factor_poly(const Poly& a, uint64_t seed) {
    if (a.is_zero()) throw ZeroPolynomial("factoring the zero polynomial");
    Rng rng(seed);
    Factorization out;
    out.unit = a.leading_coeff();
    if (a.is_constant()) return out;
    for (auto& [part, mult] : squarefree_decomposition(a)) {
        for (auto& [prod, deg] : ddf(part)) {
            std::vector<Poly> irreducibles;
            edf(prod, deg, rng, irreducibles);
            for (Poly& h : irreducibles) out.terms.push_back({std::move(h), mult});
        }
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [](const FactorTerm& x, const FactorTerm& y) { return coeff_less(x.factor, y.factor); });
    return out;
}

bool is_irreducible(const Poly& a) {
    if (a.is_zero()) throw ZeroPolynomial("irreducibility of the zero polynomial");
    if (a.is_constant()) throw ConstantPolynomial("irreducibility of a constant");
    const FieldRef& ctx = a.field();
    const uint64_t q = ctx->q();
    const size_t n = a.degree();
    if (n == 1) return true;
    Poly f = a.monic();
    std::vector<size_t> prime_divs;
    {
        size_t m = n;
        for (size_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                prime_divs.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) prime_divs.push_back(m);
    }
    Poly x = Poly::x(ctx);
    ModKernel kernel(ctx, f);
    ModKernel::Raw frob = ModKernel::to_raw(x % f);
    for (size_t i = 1; i <= n; ++i) {
        frob = kernel.powmod(std::move(frob), q);
        bool checkpoint =
            std::any_of(prime_divs.begin(), prime_divs.end(), [&](size_t r) { return i == n / r; });
        if (checkpoint && !gcd(kernel.to_poly(frob) - x, f).is_constant()) return false;
        if (i == n && !(kernel.to_poly(frob) - x).is_zero()) return false;
    }
    return true;
}

}  // namespace charcodes
