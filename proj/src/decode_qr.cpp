#include "charcodes/decode_qr.hpp"

#include <map>
#include <sstream>

#include "charcodes/pseudo.hpp"

namespace charcodes {

namespace {

uint64_t ceil_div(uint64_t a, uint64_t b) { return (a + b - 1) / b; }

Poly f_part(const FieldRef& f, const std::vector<Fq>& v, uint64_t d_cap) {
    std::vector<Fq> c(v.begin(), v.begin() + static_cast<ptrdiff_t>(d_cap + 1));
    return Poly::from_coeffs(f, std::move(c));
}

}  // namespace

QRResolved resolve_qr_params(const FieldCtx& f, const QRDecoderParams& p, uint64_t m) {
    p.eps.validate();
    if (p.d < 1) throw InfeasibleParameters("degree bound must be >= 1");
    const uint64_t q = f.q();
    // the quadratic-character decoder is the m = 2 case with no extra factor
    // of m in M or u; the m-th power variant scales both
    const uint64_t mm = m == 2 ? 1 : m;
    QRResolved r{};
    if (p.M) {
        r.M = *p.M;
    } else {
        r.M = ceil_div(16 * p.d * mm * uint64_t(p.eps.den), uint64_t(p.eps.num));
        r.M += r.M % 2;
    }
    r.c = p.c ? *p.c : r.M / 2;
    r.h = p.h ? *p.h : 2 * p.e;
    r.D = p.D ? *p.D : p.d * ((q - 1) / m * (m - 1) + r.M) + r.c * q;
    r.u = p.u ? *p.u : r.h + (m - 1) * p.d * r.M;
    if (r.M < 2 || r.M % 2) throw InfeasibleParameters("M must be even and >= 2");
    if (r.M >= q) throw InfeasibleParameters("M must be below q");
    if (r.h >= q) throw InfeasibleParameters("h must be below q");
    if (r.c < 1) throw InfeasibleParameters("c must be >= 1");
    if (!p.lab) {
        // d <= (eps/(16 m)) sqrt(q)  and  e <= (1/8 - eps) q  (1/12 for m > 2)
        __int128 lhs = (__int128)(16 * mm * p.d * p.eps.den) * (16 * mm * p.d * p.eps.den);
        __int128 rhs = (__int128)p.eps.num * p.eps.num * q;
        if (lhs > rhs) throw InfeasibleParameters("theorem mode requires d <= eps*sqrt(q)/16");
        bool e_ok = m == 2 ? at_most_slack_fraction(p.e, 1, 8, p.eps, q)
                           : at_most_slack_fraction(p.e, 1, 12, p.eps, q);
        if (!e_ok) throw InfeasibleParameters("theorem mode error bound exceeded");
    }
    return r;
}

MatrixFq build_qr_system(const FieldRef& f, const std::vector<Fq>& r, const QRResolved& rp) {
    const uint64_t q = f->q();
    const size_t rows = q * rp.M;
    const size_t cols = (rp.D + 1) + rp.M * (rp.u + 1);
    MatrixFq sys(f, rows, cols);
    std::vector<Fq> pw(rp.D + 1);
    for (uint64_t n = 0; n < q; ++n) {
        const Fq alpha(static_cast<uint32_t>(n));
        pw[0] = Fq(1);
        for (size_t k = 1; k <= rp.D; ++k) pw[k] = f->mul(pw[k - 1], alpha);
        const Fq rv = r[n];
        for (uint64_t ell = 0; ell < rp.M; ++ell) {
            const size_t row = n * rp.M + ell;
            for (size_t i = ell; i <= rp.D; ++i) {
                Fq bin = f->binomial(i, ell);
                if (bin != Fq(0)) sys.at(row, i) = f->mul(bin, pw[i - ell]);
            }
            if (rv != Fq(0)) {
                const size_t base = (rp.D + 1) + ell * (rp.u + 1);
                for (size_t j = 0; j <= rp.u; ++j) sys.at(row, base + j) = f->neg(f->mul(rv, pw[j]));
            }
        }
    }
    return sys;
}

std::pair<Poly, std::vector<uint64_t>> qr_recover_from_f(const Poly& f_poly, uint64_t seed) {
    const FieldRef& f = f_poly.field();
    const uint64_t q = f->q();
    const uint64_t lo = ceil_div(3 * q, 8), hi = 7 * q / 8;
    Poly g = Poly::constant(f, Fq(1));
    std::vector<uint64_t> residues;
    for (const auto& fr : factor_mult_residues(f_poly, seed)) {
        residues.push_back(fr.residue);
        if (fr.residue >= lo && fr.residue <= hi) g = g * fr.factor;
    }
    return {std::move(g), std::move(residues)};
}

std::string QRDiagnostics::text() const {
    std::ostringstream os;
    os << "mode=" << (lab ? "lab" : "theorem") << '\n';
    os << "rows=" << rows << '\n' << "cols=" << cols << '\n' << "nullity=" << nullity << '\n';
    os << "degF=";
    if (deg_f) os << *deg_f;
    os << '\n' << "residues=";
    for (size_t i = 0; i < residues.size(); ++i) {
        if (i) os << ',';
        os << residues[i];
    }
    os << '\n' << "ambiguous=" << (ambiguous ? 1 : 0) << '\n';
    return os.str();
}

std::string MthDiagnostics::text() const {
    std::ostringstream os;
    for (size_t i = 0; i < per_nu.size(); ++i) {
        os << "nu=" << i + 1 << '\n' << per_nu[i].text();
    }
    return os.str();
}

QRDecodeResult decode_qr(const FieldRef& f, const ReceivedWord& r, const QRDecoderParams& params,
                         uint64_t seed) {
    if (f->p() == 2) throw EvenCharacteristic("quadratic-character decoding requires odd q");
    require_same_field(f, r.ctx);
    QRResolved rp = resolve_qr_params(*f, params);
    MatrixFq sys = build_qr_system(f, r.values, rp);

    QRDiagnostics diag;
    diag.lab = params.lab;
    diag.rows = sys.rows();
    diag.cols = sys.cols();
    auto basis = nullspace_basis(sys);
    diag.nullity = basis.size();
    if (basis.empty()) throw NoNonzeroSolution("derivative system has a trivial nullspace");

    std::optional<Poly> chosen;
    std::optional<Poly> alternate;
    for (const auto& v : basis) {
        Poly fp = f_part(f, v, rp.D);
        if (fp.is_zero()) continue;
        if (!chosen) {
            chosen = std::move(fp);
        } else if (chosen->monic() != fp.monic()) {
            alternate = std::move(fp);
            break;
        }
    }
    if (!chosen) throw AllSolutionsZeroF("every nullspace vector has F = 0");
    diag.deg_f = chosen->degree();

    auto [g, residues] = qr_recover_from_f(*chosen, seed);
    diag.residues = std::move(residues);
    if (alternate) {
        auto [g2, residues2] = qr_recover_from_f(*alternate, seed);
        diag.ambiguous = !(g2 == g);
    }
    return {std::move(g), std::move(diag)};
}

MthDecodeResult decode_mth(const FieldRef& f, uint64_t m, const ReceivedWord& r,
                           const QRDecoderParams& params, uint64_t seed) {
    require_same_field(f, r.ctx);
    if (m < 2 || (f->q() - 1) % m != 0) throw BadOrder("m must be a prime divisor of q-1");
    for (uint64_t dd = 2; dd * dd <= m; ++dd)
        if (m % dd == 0) throw BadOrder("m must be prime");
    const uint64_t q = f->q();
    QRResolved rp = resolve_qr_params(*f, params, m);

    MthDiagnostics diag;
    // factor -> multiplicity in F_nu, keyed by coefficient sequence
    auto key = [](const Poly& h) {
        std::vector<uint32_t> k;
        for (Fq c : h.coeffs()) k.push_back(c.v);
        return k;
    };
    std::map<std::vector<uint32_t>, std::pair<Poly, std::vector<size_t>>> table;

    std::vector<Fq> powered(r.values.size(), Fq(1));
    for (uint64_t nu = 1; nu < m; ++nu) {
        for (size_t i = 0; i < powered.size(); ++i) powered[i] = f->mul(powered[i], r.values[i]);
        MatrixFq sys = build_qr_system(f, powered, rp);
        QRDiagnostics d;
        d.lab = params.lab;
        d.rows = sys.rows();
        d.cols = sys.cols();
        auto basis = nullspace_basis(sys);
        d.nullity = basis.size();
        if (basis.empty()) throw NoNonzeroSolution("derivative system has a trivial nullspace");
        std::optional<Poly> chosen;
        for (const auto& v : basis) {
            Poly fp = f_part(f, v, rp.D);
            if (!fp.is_zero()) {
                chosen = std::move(fp);
                break;
            }
        }
        if (!chosen) throw AllSolutionsZeroF("every nullspace vector has F = 0");
        d.deg_f = chosen->degree();
        for (const auto& fr : factor_mult_residues(*chosen, seed)) {
            d.residues.push_back(fr.residue);
            auto& slot = table[key(fr.factor)];
            if (slot.second.empty()) {
                slot.first = fr.factor;
                slot.second.assign(m, 0);
            }
            slot.second[nu] = fr.multiplicity;
        }
        diag.per_nu.push_back(std::move(d));
    }

    // per factor, the unique mu in {0..m-1} with
    // mu_{nu} - nu*mu*(q-1)/m in (-(1/12-eps)q, (3/12-eps)q) mod q for all nu
    Poly g = Poly::constant(f, Fq(1));
    const uint64_t step = (q - 1) / m;
    for (auto& [k, entry] : table) {
        auto& [h, mults] = entry;
        std::optional<uint64_t> pick;
        for (uint64_t mu = 0; mu < m; ++mu) {
            bool ok = true;
            for (uint64_t nu = 1; nu < m && ok; ++nu) {
                uint64_t target = (__uint128_t)nu * mu * step % q;  // nu*mu*(q-1)/m mod q
                uint64_t x = (mults[nu] % q + q - target % q) % q;
                bool in_window = below_slack_fraction(x, 3, 12, params.eps, q) ||
                                 below_slack_fraction(q - x, 1, 12, params.eps, q);
                ok = in_window;
            }
            if (ok) {
                if (pick) throw NoConsistentMu("factor multiplicity selection is not unique");
                pick = mu;
            }
        }
        if (!pick) throw NoConsistentMu("no factor multiplicity satisfies every nu");
        if (*pick > 0) g = g * h.pow(*pick);
    }
    return {std::move(g), std::move(diag)};
}

}  // namespace charcodes
