#include "charcodes/oracle.hpp"

#include <cmath>

#include "charcodes/linsolve.hpp"

namespace charcodes {

namespace {

constexpr uint64_t kSearchGuard = 10'000'000;

// enumerate messages of the family's strict class and fold over their words
template <typename Fn>
void for_each_message(const FieldRef& f, const CodeSpec& spec, uint64_t d, Fn&& fn) {
    const uint64_t q = f->q();
    switch (spec.family) {
        case Family::qr:
        case Family::mth: {
            // monic of each degree k <= d, filtered to the family's class
            uint64_t total = 1, power = 1;
            for (uint64_t k = 1; k <= d; ++k) {
                power *= q;
                total += power;
                if (total > kSearchGuard) throw SearchSpaceTooLarge("message space exceeds guard");
            }
            const uint64_t m = spec.family == Family::qr ? 2 : spec.m;
            for (uint64_t k = 0; k <= d; ++k) {
                std::vector<Fq> c(k + 1, Fq(0));
                c[k] = Fq(1);
                uint64_t count = 1;
                for (uint64_t j = 0; j < k; ++j) count *= q;
                for (uint64_t n = 0; n < count; ++n) {
                    uint64_t v = n;
                    for (uint64_t j = 0; j < k; ++j) {
                        c[j] = Fq(static_cast<uint32_t>(v % q));
                        v /= q;
                    }
                    Poly g = Poly::from_coeffs(f, c);
                    if (k >= 1) {
                        bool ok = true;
                        if (m == 2) {
                            ok = gcd(g, g.derivative()).is_one();
                        } else {
                            for (auto& [part, mult] : squarefree_decomposition(g))
                                if (mult >= m) {
                                    ok = false;
                                    break;
                                }
                        }
                        if (!ok) continue;
                    }
                    fn(g);
                }
            }
            break;
        }
        case Family::dbch:
        case Family::addp: {
            const uint64_t p = f->p();
            std::vector<size_t> degrees;
            for (uint64_t i = 1; i <= d; ++i) {
                bool keep = spec.family == Family::dbch ? (i % 2 == 1) : (i % p != 0);
                if (keep) degrees.push_back(i);
            }
            uint64_t total = 1;
            for (size_t i = 0; i < degrees.size(); ++i) {
                total *= q;
                if (total > kSearchGuard) throw SearchSpaceTooLarge("message space exceeds guard");
            }
            for (uint64_t n = 0; n < total; ++n) {
                uint64_t v = n;
                std::vector<Fq> c(d + 1, Fq(0));
                for (size_t deg : degrees) {
                    c[deg] = Fq(static_cast<uint32_t>(v % q));
                    v /= q;
                }
                fn(Poly::from_coeffs(f, c));
            }
            break;
        }
    }
}

std::vector<Fq> encode_values(const FieldRef& f, const CodeSpec& spec, const Poly& g) {
    const FieldCtx& fc = *f;
    std::vector<Fq> vals = g.evaluate_all();
    switch (spec.family) {
        case Family::qr:
            for (Fq& x : vals) x = fc.quad_char(x);
            break;
        case Family::mth:
            for (Fq& x : vals) x = fc.power_residue_char(spec.m, x);
            break;
        case Family::dbch:
        case Family::addp:
            for (Fq& x : vals) x = fc.trace(x);
            break;
    }
    return vals;
}

// canonical representative of f modulo {h^p - h} plus constants: repeatedly
// fold the top monomial with exponent divisible by p down to exponent/p
bool trace_core_nonconstant(const FieldRef& f, const Poly& poly) {
    const uint64_t p = f->p();
    if (poly.is_zero()) return false;
    std::vector<Fq> c(poly.coeffs().begin(), poly.coeffs().end());
    for (size_t i = c.size(); i-- > 1;) {
        if (c[i] == Fq(0) || i % p != 0) continue;
        Fq root = f->pow(c[i], f->q() / p);  // p-th root
        c[i] = Fq(0);
        c[i / p] = f->add(c[i / p], root);
    }
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != Fq(0)) return true;
    return false;
}

}  // namespace

BruteForceResult brute_force_decode(const FieldRef& f, const CodeSpec& spec,
                                    const ReceivedWord& r) {
    require_same_field(f, r.ctx);
    if (!spec.d) throw SearchSpaceTooLarge("degree bound required");
    BruteForceResult best;
    bool first = true;
    for_each_message(f, spec, *spec.d, [&](const Poly& g) {
        std::vector<Fq> w = encode_values(f, spec, g);
        size_t dist = 0;
        const size_t cap = first ? w.size() + 1 : best.dist + 1;
        for (size_t i = 0; i < w.size() && dist < cap; ++i)
            if (w[i] != r.values[i]) ++dist;
        if (first || dist < best.dist) {
            best = {g, dist, true};
            first = false;
        } else if (dist == best.dist) {
            best.unique = false;
        }
    });
    return best;
}

BruteForceResult brute_force_decode_qr(const FieldRef& f, const ReceivedWord& r, uint64_t d) {
    if (f->p() == 2) throw EvenCharacteristic("qr oracle requires odd q");
    return brute_force_decode(f, CodeSpec{Family::qr, 2, d}, r);
}

BruteForceResult brute_force_decode_dbch(const FieldRef& f, const ReceivedWord& r, uint64_t d) {
    if (f->p() != 2) throw OddCharacteristic("dbch oracle requires characteristic 2");
    return brute_force_decode(f, CodeSpec{Family::dbch, 2, d}, r);
}

std::optional<Poly> dbch_zero_error_solve(const FieldRef& f, const ReceivedWord& w, uint64_t d) {
    if (f->p() != 2) throw OddCharacteristic("zero-error solve requires characteristic 2");
    require_same_field(f, w.ctx);
    const uint64_t q = f->q(), b = f->b();
    FieldRef f2 = make_field(2, 1);
    std::vector<size_t> degrees;
    for (uint64_t i = 1; i <= d; i += 2) degrees.push_back(i);
    MatrixFq sys(f2, q, degrees.size() * b);
    for (uint64_t n = 0; n < q; ++n) {
        Fq alpha(static_cast<uint32_t>(n));
        for (size_t di = 0; di < degrees.size(); ++di) {
            Fq mono = f->pow(alpha, degrees[di]);
            for (uint64_t t = 0; t < b; ++t) {
                Fq basis(static_cast<uint32_t>(uint64_t(1) << t));
                sys.at(n, di * b + t) = Fq(f->trace(f->mul(basis, mono)).v);
            }
        }
    }
    std::vector<Fq> rhs;
    rhs.reserve(q);
    for (Fq v : w.values) {
        if (v.v > 1) return std::nullopt;  // not a {0,1}-valued word
        rhs.push_back(v);
    }
    auto sol = solve_affine(sys, rhs);
    if (!sol) return std::nullopt;
    std::vector<Fq> c(d + 1, Fq(0));
    for (size_t di = 0; di < degrees.size(); ++di) {
        uint64_t idx = 0;
        for (uint64_t t = 0; t < b; ++t)
            if ((*sol)[di * b + t] == Fq(1)) idx |= uint64_t(1) << t;
        c[degrees[di]] = Fq(static_cast<uint32_t>(idx));
    }
    return Poly::from_coeffs(f, std::move(c));
}

WeilSum weil_sum_mult(const FieldRef& f, const Poly& poly) {
    if (f->p() == 2) throw EvenCharacteristic("multiplicative Weil sum requires odd q");
    require_same_field(f, poly.field());
    WeilSum out;
    const Fq minus_one = f->neg(Fq(1));
    for (uint64_t n = 0; n < f->q(); ++n) {
        Fq v = f->quad_char(poly.evaluate(Fq(static_cast<uint32_t>(n))));
        if (v == Fq(1)) ++out.sum;
        else if (v == minus_one) --out.sum;
    }
    out.magnitude = static_cast<uint64_t>(out.sum < 0 ? -out.sum : out.sum);
    const uint64_t deg = poly.is_zero() ? 0 : poly.degree();
    out.bound = 2.0 * double(deg) * std::sqrt(double(f->q()));
    out.applicable = !poly.is_zero() && !poly.is_constant() &&
                     !squarefree_core(poly).core.is_one();
    // magnitude <= 2 d sqrt(q)  <=>  magnitude^2 <= 4 d^2 q
    out.exact_ok = (__int128)out.magnitude * out.magnitude <= (__int128)4 * deg * deg * f->q();
    return out;
}

WeilSum weil_sum_add(const FieldRef& f, const Poly& poly) {
    require_same_field(f, poly.field());
    const uint64_t p = f->p(), q = f->q();
    WeilSum out;
    std::vector<uint64_t> counts(p, 0);
    for (uint64_t n = 0; n < q; ++n)
        ++counts[f->trace(poly.evaluate(Fq(static_cast<uint32_t>(n)))).v];
    if (p == 2) {
        out.sum = int64_t(counts[0]) - int64_t(counts[1]);
        out.magnitude = static_cast<uint64_t>(out.sum < 0 ? -out.sum : out.sum);
    } else {
        const int64_t mean = int64_t(q / p);
        int64_t worst = 0;
        for (uint64_t cnt : counts) {
            int64_t dev = int64_t(cnt) - mean;
            if (dev < 0) dev = -dev;
            worst = std::max(worst, dev);
        }
        out.sum = worst;
        out.magnitude = static_cast<uint64_t>(worst);
    }
    const uint64_t deg = poly.is_zero() ? 0 : poly.degree();
    out.bound = deg >= 1 ? double(deg - 1) * std::sqrt(double(q)) : 0.0;
    if (p == 2 && !poly.is_zero()) {
        out.applicable = !odd_core(poly).odd_part.is_zero();
    } else {
        out.applicable = trace_core_nonconstant(f, poly);
    }
    // magnitude <= (d-1) sqrt(q)  <=>  magnitude^2 <= (d-1)^2 q
    out.exact_ok = deg >= 1 && (__int128)out.magnitude * out.magnitude <=
                                   (__int128)(deg - 1) * (deg - 1) * q;
    return out;
}

size_t min_weight_dbch(const FieldRef& f, uint64_t d) {
    if (f->p() != 2) throw OddCharacteristic("dual-BCH weights require characteristic 2");
    const uint64_t q = f->q();
    size_t best = q + 1;
    CodeSpec spec{Family::dbch, 2, d};
    for_each_message(f, spec, d, [&](const Poly& g) {
        if (g.is_zero()) return;
        std::vector<Fq> w = encode_values(f, spec, g);
        size_t weight = 0;
        for (Fq v : w)
            if (v != Fq(0)) ++weight;
        best = std::min(best, weight);
    });
    return best;
}

}  // namespace charcodes
