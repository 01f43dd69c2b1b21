#include "charcodes/codes.hpp"

#include <algorithm>

#include "charcodes/rng.hpp"

namespace charcodes {

namespace {

bool odd_monomials_only(const Poly& g) {
    if (g.is_zero()) return true;
    for (size_t i = 0; i <= g.degree(); i += 2)
        if (g.coeff(i) != Fq(0)) return false;
    return true;
}

bool multiplicities_below(const Poly& g, uint64_t m) {
    if (g.is_constant()) return true;
    for (auto& [part, mult] : squarefree_decomposition(g))
        if (mult >= m) return false;
    return true;
}

bool exponents_coprime_to_p(const Poly& g, uint64_t p) {
    if (g.is_zero()) return true;
    for (size_t i = 0; i <= g.degree(); ++i)
        if (g.coeff(i) != Fq(0) && (i == 0 || i % p == 0)) return false;
    return true;
}

}  // namespace

void CodeSpec::check_message(const Poly& g) const {
    switch (family) {
        case Family::qr:
            if (g.is_zero() || !g.is_monic() || !squarefree_core(g).square_part.is_one())
                throw InvalidMessage("qr messages must be monic squarefree");
            break;
        case Family::dbch:
            if (!odd_monomials_only(g))
                throw InvalidMessage("dbch messages must have only odd-degree monomials");
            break;
        case Family::mth:
            if (g.is_zero() || !g.is_monic() || !multiplicities_below(g, m))
                throw InvalidMessage("mth messages must be monic with factor multiplicities below m");
            break;
        case Family::addp:
            if (!exponents_coprime_to_p(g, g.field()->p()))
                throw InvalidMessage("addp messages must have monomial degrees coprime to p");
            break;
    }
    if (d && !g.is_zero() && g.degree() > *d) throw InvalidMessage("message degree exceeds d");
}

ReceivedWord encode_qr(const FieldRef& f, const Poly& g, Validation v) {
    if (f->p() == 2) throw EvenCharacteristic("quadratic-character encoding requires odd q");
    require_same_field(f, g.field());
    if (v == Validation::strict) CodeSpec{Family::qr}.check_message(g);
    ReceivedWord w{f, Alphabet::qr, g.evaluate_all()};
    for (Fq& x : w.values) x = f->quad_char(x);
    return w;
}

ReceivedWord encode_dbch(const FieldRef& f, const Poly& g, Validation v) {
    if (f->p() != 2) throw OddCharacteristic("dual-BCH encoding requires characteristic 2");
    require_same_field(f, g.field());
    if (v == Validation::strict) CodeSpec{Family::dbch}.check_message(g);
    ReceivedWord w{f, Alphabet::f2, g.evaluate_all()};
    for (Fq& x : w.values) x = f->trace(x);
    return w;
}

ReceivedWord encode_mth(const FieldRef& f, uint64_t m, const Poly& g, Validation v) {
    require_same_field(f, g.field());
    if (m < 2 || (f->q() - 1) % m != 0) throw BadOrder("m must be a prime divisor of q-1");
    if (v == Validation::strict) CodeSpec{Family::mth, m}.check_message(g);
    ReceivedWord w{f, m == 2 ? Alphabet::qr : Alphabet::fq, g.evaluate_all()};
    for (Fq& x : w.values) x = f->power_residue_char(m, x);
    return w;
}

ReceivedWord encode_addp(const FieldRef& f, const Poly& g, Validation v) {
    require_same_field(f, g.field());
    if (v == Validation::strict) CodeSpec{Family::addp}.check_message(g);
    ReceivedWord w{f, f->p() == 2 ? Alphabet::f2 : Alphabet::fq, g.evaluate_all()};
    for (Fq& x : w.values) x = f->trace(x);
    return w;
}

size_t hamming_distance(const ReceivedWord& a, const ReceivedWord& b) {
    require_same_field(a.ctx, b.ctx);
    if (a.values.size() != b.values.size()) throw DimensionMismatch("word lengths differ");
    size_t d = 0;
    for (size_t i = 0; i < a.values.size(); ++i)
        if (a.values[i] != b.values[i]) ++d;
    return d;
}

Poly random_message(const FieldRef& f, const CodeSpec& spec, Rng& rng) {
    if (!spec.d) throw InvalidMessage("message sampling needs a degree bound");
    const uint64_t d = *spec.d, q = f->q(), p = f->p();
    switch (spec.family) {
        case Family::qr:
        case Family::mth: {
            const uint64_t m = spec.family == Family::qr ? 2 : spec.m;
            while (true) {
                std::vector<Fq> c(d + 1, Fq(0));
                c[d] = Fq(1);
                for (uint64_t i = 0; i < d; ++i) c[i] = Fq(static_cast<uint32_t>(rng.below(q)));
                Poly g = Poly::from_coeffs(f, std::move(c));
                if (g.is_constant() || multiplicities_below(g, m)) return g;
            }
        }
        case Family::dbch:
        case Family::addp: {
            std::vector<Fq> c(d + 1, Fq(0));
            for (uint64_t i = 1; i <= d; ++i) {
                bool keep = spec.family == Family::dbch ? (i % 2 == 1) : (i % p != 0);
                if (keep) c[i] = Fq(static_cast<uint32_t>(rng.below(q)));
            }
            return Poly::from_coeffs(f, std::move(c));
        }
    }
    throw InvalidMessage("unknown family");
}

ReceivedWord corrupt(const ReceivedWord& w, uint64_t e, uint64_t seed) {
    const FieldCtx& f = *w.ctx;
    if (e > w.values.size()) throw TooManyErrors("more errors than positions");
    ReceivedWord out = w;
    Rng rng(seed);
    // partial Fisher-Yates picks e distinct positions
    std::vector<uint32_t> idx(w.values.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<uint32_t>(i);
    for (uint64_t i = 0; i < e; ++i) {
        uint64_t j = i + rng.below(idx.size() - i);
        std::swap(idx[i], idx[j]);
    }
    std::vector<Fq> symbols;
    switch (w.alphabet) {
        case Alphabet::qr:
            symbols = {Fq(0), Fq(1), f.neg(Fq(1))};
            break;
        case Alphabet::f2:
            symbols = {Fq(0), Fq(1)};
            break;
        case Alphabet::fq:
            for (uint64_t n = 0; n < f.q(); ++n) symbols.push_back(Fq(static_cast<uint32_t>(n)));
            break;
    }
    for (uint64_t i = 0; i < e; ++i) {
        Fq cur = out.values[idx[i]];
        uint64_t pick = rng.below(symbols.size() - 1);
        Fq repl = symbols[pick];
        if (repl == cur) repl = symbols.back();
        out.values[idx[i]] = repl;
    }
    return out;
}

}  // namespace charcodes
