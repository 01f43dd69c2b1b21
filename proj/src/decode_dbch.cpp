#include "charcodes/decode_dbch.hpp"

#include <sstream>

#include "charcodes/pseudo.hpp"

namespace charcodes {

namespace {

uint64_t ceil_div(uint64_t a, uint64_t b) { return (a + b - 1) / b; }

LeadingResult trace_leading_engine(const FieldRef& f, const std::vector<Fq>& values,
                                   const DBCHDecoderParams& params, uint64_t seed) {
    const uint64_t p = f->p();
    TraceResolved rp = resolve_trace_params(*f, params);
    LeadingResult out;
    out.d = params.d;
    out.lab = params.lab;

    for (uint64_t hstar = 0; hstar <= rp.h; ++hstar) {
        TraceSystem sys = build_trace_system(f, values, rp, params.d, hstar);
        out.rows = sys.mat.rows();
        out.cols = sys.mat.cols();
        auto x0 = solve_affine(sys.mat, sys.rhs);
        if (!x0) continue;
        std::vector<Fq> x = *x0;
        if (x[sys.deg_f_target] == Fq(0)) {
            // look for a homogeneous direction restoring the exact degree of F
            auto dirs = nullspace_sample(sys.mat, nullspace_basis(sys.mat).size() + 8, seed);
            bool fixed = false;
            for (const auto& n : dirs) {
                if (n[sys.deg_f_target] != Fq(0)) {
                    for (size_t j = 0; j < x.size(); ++j) x[j] = f->add(x[j], n[j]);
                    fixed = true;
                    break;
                }
            }
            if (!fixed) continue;
        }

        // assemble F and E and read the leading coefficients
        Poly fp = Poly::from_coeffs(
            f, std::vector<Fq>(x.begin(), x.begin() + static_cast<ptrdiff_t>(sys.deg_f_target + 1)));
        std::vector<Poly> digits;
        for (uint64_t i = 0; i < rp.c; ++i) {
            std::vector<Fq> c(x.begin() + static_cast<ptrdiff_t>(sys.e_offset + i * (rp.h + 1)),
                              x.begin() + static_cast<ptrdiff_t>(sys.e_offset + (i + 1) * (rp.h + 1)));
            digits.push_back(Poly::from_coeffs(f, std::move(c)));
        }
        {
            std::vector<Fq> c(x.begin() + static_cast<ptrdiff_t>(sys.e_offset + rp.c * (rp.h + 1)),
                              x.begin() + static_cast<ptrdiff_t>(sys.e_offset + rp.c * (rp.h + 1) + hstar));
            c.resize(hstar + 1, Fq(0));
            c[hstar] = Fq(1);  // the pinned leading coefficient of E_c
            digits.push_back(Poly::from_coeffs(f, std::move(c)));
        }
        Poly ep = from_base_lambda(PseudoPoly(f, std::move(digits)));

        Fq a = fp.leading_coeff(), b = ep.leading_coeff();
        Fq ratio = f->div(a, b);
        Fq ad = f->pow(ratio, p);
        out.successes.emplace_back(hstar, ad);
        if (!out.found) {
            out.found = true;
            out.hstar = hstar;
            out.deg_f = fp.degree();
            out.deg_e = ep.degree();
            out.a = a;
            out.b = b;
            out.a_d = ad;
        }
        if (!params.scan_all_hstar) break;
    }
    return out;
}

TraceDecodeResult trace_decode_engine(const FieldRef& f, const ReceivedWord& r,
                                      const DBCHDecoderParams& params, uint64_t seed) {
    const uint64_t p = f->p(), q = f->q();
    TraceDecodeResult out{Poly::zero(f), {}};
    ReceivedWord residual = r;
    for (uint64_t dt = params.d; dt >= 1; --dt) {
        if (dt % p == 0) continue;
        DBCHDecoderParams step = params;
        step.d = dt;
        LeadingResult lead = trace_leading_engine(f, residual.values, step, seed);
        if (lead.a_d != Fq(0)) {
            out.g = out.g + Poly::monomial(f, lead.a_d, dt);
            for (uint64_t n = 0; n < q; ++n) {
                Fq alpha(static_cast<uint32_t>(n));
                Fq t = f->trace(f->mul(lead.a_d, f->pow(alpha, dt)));
                residual.values[n] = f->sub(residual.values[n], t);
            }
        }
        out.diag.iterations.push_back({std::move(lead), residual});
    }
    return out;
}

}  // namespace

TraceResolved resolve_trace_params(const FieldCtx& f, const DBCHDecoderParams& p) {
    p.eps.validate();
    if (p.d < 1) throw InfeasibleParameters("degree bound must be >= 1");
    const uint64_t q = f.q();
    TraceResolved r{};
    if (p.M) {
        r.M = *p.M;
    } else {
        r.M = ceil_div(16 * p.d * uint64_t(p.eps.den), uint64_t(p.eps.num));
        r.M += r.M % 2;
    }
    r.c = p.c ? *p.c : r.M / 2;
    r.h = p.h ? *p.h : 2 * p.e;
    r.u = p.u ? *p.u : r.h + p.d * r.M;
    if (r.M < 2 || r.M % 2) throw InfeasibleParameters("M must be even and >= 2");
    if (r.M >= q) throw InfeasibleParameters("M must be below q");
    if (r.h >= q) throw InfeasibleParameters("h must be below q");
    if (r.c < 1) throw InfeasibleParameters("c must be >= 1");
    if (!p.lab) {
        __int128 lhs = (__int128)(16 * p.d * p.eps.den) * (16 * p.d * p.eps.den);
        __int128 rhs = (__int128)p.eps.num * p.eps.num * q;
        if (lhs > rhs) throw InfeasibleParameters("theorem mode requires d <= eps*sqrt(q)/16");
        if (!at_most_slack_fraction(p.e, 1, 4 * f.p(), p.eps, q))
            throw InfeasibleParameters("theorem mode error bound exceeded");
    }
    return r;
}

TraceSystem build_trace_system(const FieldRef& f, const std::vector<Fq>& r,
                               const TraceResolved& rp, uint64_t d, uint64_t hstar) {
    const uint64_t p = f->p(), q = f->q();
    const uint64_t target = d * (q / p) + rp.c * q + hstar;
    const size_t rows = q * rp.M;
    const size_t e_offset = target + 1;
    const size_t e_cols = rp.c * (rp.h + 1) + hstar;
    const size_t u_offset = e_offset + e_cols;
    const size_t cols = u_offset + rp.M * (rp.u + 1);

    TraceSystem sys{MatrixFq(f, rows, cols), std::vector<Fq>(rows, Fq(0)), target, hstar,
                    e_offset, u_offset};
    const Fq minus_one = f->neg(Fq(1));
    std::vector<Fq> pw(target + 1);
    for (uint64_t n = 0; n < q; ++n) {
        const Fq alpha(static_cast<uint32_t>(n));
        pw[0] = Fq(1);
        for (size_t k = 1; k <= target; ++k) pw[k] = f->mul(pw[k - 1], alpha);
        const Fq rv = r[n];
        for (uint64_t ell = 0; ell < rp.M; ++ell) {
            const size_t row = n * rp.M + ell;
            for (size_t i = ell; i <= target; ++i) {
                Fq bin = f->binomial(i, ell);
                if (bin != Fq(0)) sys.mat.at(row, i) = f->mul(bin, pw[i - ell]);
            }
            if (rv != Fq(0)) {
                // E^{[l]}(alpha) = sum_i (-1)^i E_i^{[l-i]}(alpha) for l < q
                for (uint64_t i = 0; i <= rp.c && i <= ell; ++i) {
                    const uint64_t ld = ell - i;
                    const Fq sign = (i % 2 == 0) ? Fq(1) : minus_one;
                    if (i == rp.c) {
                        // pinned monomial X^{h*} of E_c contributes to the rhs
                        if (ld <= hstar) {
                            Fq bin = f->binomial(hstar, ld);
                            if (bin != Fq(0))
                                sys.rhs[row] = f->add(
                                    sys.rhs[row],
                                    f->mul(f->mul(rv, sign), f->mul(bin, pw[hstar - ld])));
                        }
                        if (hstar == 0) continue;
                    }
                    const uint64_t jmax = i < rp.c ? rp.h : hstar - 1;
                    for (uint64_t j = ld; j <= jmax; ++j) {
                        Fq bin = f->binomial(j, ld);
                        if (bin == Fq(0)) continue;
                        const size_t col = e_offset + i * (rp.h + 1) + j;
                        sys.mat.at(row, col) =
                            f->neg(f->mul(f->mul(rv, sign), f->mul(bin, pw[j - ld])));
                    }
                }
            }
            const size_t ubase = u_offset + ell * (rp.u + 1);
            for (size_t j = 0; j <= rp.u; ++j) sys.mat.at(row, ubase + j) = f->neg(pw[j]);
        }
    }
    return sys;
}

std::string LeadingResult::text() const {
    std::ostringstream os;
    os << "mode=" << (lab ? "lab" : "theorem") << '\n';
    os << "found=" << (found ? 1 : 0) << '\n';
    os << "hstar=";
    if (found) os << hstar;
    os << '\n' << "degF=";
    if (deg_f) os << *deg_f;
    os << '\n' << "degE=";
    if (deg_e) os << *deg_e;
    os << '\n' << "a=" << a.v << '\n' << "b=" << b.v << '\n';
    os << "a_d=" << a_d.v << '\n';
    return os.str();
}

std::string TraceDiagnostics::text() const {
    std::ostringstream os;
    for (const auto& it : iterations) {
        os << "d=" << it.step.d << '\n' << it.step.text();
    }
    return os.str();
}

LeadingResult decode_dbch_leading(const FieldRef& f, const ReceivedWord& r,
                                  const DBCHDecoderParams& params, uint64_t seed) {
    if (f->p() != 2) throw OddCharacteristic("dual-BCH decoding requires characteristic 2");
    if (params.d % 2 == 0) throw EvenDegreeD("dual-BCH degree bound must be odd");
    require_same_field(f, r.ctx);
    return trace_leading_engine(f, r.values, params, seed);
}

LeadingResult decode_addp_leading(const FieldRef& f, const ReceivedWord& r,
                                  const DBCHDecoderParams& params, uint64_t seed) {
    if (params.d % f->p() == 0) throw DegreeDivisibleByP("degree must be coprime to p");
    require_same_field(f, r.ctx);
    return trace_leading_engine(f, r.values, params, seed);
}

TraceDecodeResult decode_dbch(const FieldRef& f, const ReceivedWord& r,
                              const DBCHDecoderParams& params, uint64_t seed) {
    if (f->p() != 2) throw OddCharacteristic("dual-BCH decoding requires characteristic 2");
    if (params.d % 2 == 0) throw EvenDegreeD("dual-BCH degree bound must be odd");
    require_same_field(f, r.ctx);
    return trace_decode_engine(f, r, params, seed);
}

TraceDecodeResult decode_addp(const FieldRef& f, const ReceivedWord& r,
                              const DBCHDecoderParams& params, uint64_t seed) {
    if (params.d % f->p() == 0) throw DegreeDivisibleByP("degree must be coprime to p");
    require_same_field(f, r.ctx);
    return trace_decode_engine(f, r, params, seed);
}

}  // namespace charcodes
