#include "charcodes/field.hpp"

#include <algorithm>

namespace charcodes {

namespace {

constexpr uint64_t kMaxQ = uint64_t(1) << 20;

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial helpers over the prime field F_p, used only while
// constructing extension fields (modulus search and verification).
using PPoly = std::vector<uint32_t>;  // coefficients low-to-high, not normalized

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    // reduce mod monic f
    const size_t df = f.size() - 1;
    for (size_t i = r.size(); i-- > df;) {
        uint64_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (size_t j = 0; j < df; ++j) {
            uint64_t t = uint64_t(f[j]) * c % p;
            r[i - df + j] = static_cast<uint32_t>((r[i - df + j] + p - t) % p);
        }
    }
    ptrim(r);
    return r;
}

PPoly ppowmod(PPoly base, uint64_t e, const PPoly& f, uint64_t p) {
    PPoly r{1};
    while (e) {
        if (e & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, uint64_t p) {
    ptrim(a), ptrim(b);
    while (!b.empty()) {
        // a mod b, b monicized on the fly
        uint64_t lead = b.back();
        uint64_t il = 1;
        {  // inverse of lead mod p
            uint64_t e = p - 2, x = lead, acc = 1;
            while (e) {
                if (e & 1) acc = acc * x % p;
                x = x * x % p;
                e >>= 1;
            }
            il = acc;
        }
        while (a.size() >= b.size()) {
            uint64_t c = uint64_t(a.back()) * il % p;
            if (c) {
                size_t off = a.size() - b.size();
                for (size_t j = 0; j < b.size(); ++j) {
                    uint64_t t = uint64_t(b[j]) * c % p;
                    a[off + j] = static_cast<uint32_t>((a[off + j] + p - t) % p);
                }
            }
            a.pop_back();
            ptrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin's test over F_p for a monic polynomial of degree b >= 1.
bool irreducible_over_fp(const PPoly& f, uint64_t p) {
    const uint64_t n = f.size() - 1;
    if (n == 1) return true;
    std::vector<uint64_t> prime_divs;
    {
        uint64_t m = n;
        for (uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                prime_divs.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) prime_divs.push_back(m);
    }
    const PPoly x{0, 1};
    PPoly frob = x;  // X^{p^i} mod f
    for (uint64_t i = 1; i <= n; ++i) {
        frob = ppowmod(frob, p, f, p);
        bool checkpoint = std::any_of(prime_divs.begin(), prime_divs.end(),
                                      [&](uint64_t r) { return i == n / r; });
        if (checkpoint) {
            PPoly t = frob;
            if (t.size() < 2) t.resize(2, 0);
            t[1] = static_cast<uint32_t>((t[1] + p - 1) % p);
            ptrim(t);
            PPoly g = pgcd(t, f, p);
            if (!(g.size() == 1)) return false;  // nontrivial gcd
        }
        if (i == n) {
            PPoly t = frob;
            if (t.size() < 2) t.resize(2, 0);
            t[1] = static_cast<uint32_t>((t[1] + p - 1) % p);
            ptrim(t);
            if (!t.empty()) return false;  // X^{p^n} != X mod f
        }
    }
    return true;
}

}  // namespace

std::vector<uint32_t> FieldCtx::digits(Fq a) const {
    check(a);
    std::vector<uint32_t> d(b_);
    uint64_t v = a.v;
    for (uint64_t i = 0; i < b_; ++i) {
        d[i] = static_cast<uint32_t>(v % p_);
        v /= p_;
    }
    return d;
}

Fq FieldCtx::from_digits(const std::vector<uint32_t>& d) const {
    uint64_t v = 0;
    for (size_t i = d.size(); i-- > 0;) {
        if (d[i] >= p_) throw CtxMismatch("digit out of range");
        v = v * p_ + d[i];
    }
    return element(v);
}

Fq FieldCtx::add_digits(Fq a, Fq b, bool subtract) const {
    uint64_t av = a.v, bv = b.v, out = 0, mult = 1;
    for (uint64_t i = 0; i < b_; ++i) {
        uint64_t ad = av % p_, bd = bv % p_;
        uint64_t s = subtract ? (ad + p_ - bd) % p_ : (ad + bd) % p_;
        out += s * mult;
        mult *= p_;
        av /= p_;
        bv /= p_;
    }
    return Fq(static_cast<uint32_t>(out));
}

Fq FieldCtx::mul_generic(Fq a, Fq b) const {
    if (a.v == 0 || b.v == 0) return zero();
    std::vector<uint32_t> da = digits(a), db = digits(b);
    std::vector<uint32_t> r(2 * b_ - 1, 0);
    for (uint64_t i = 0; i < b_; ++i) {
        if (da[i] == 0) continue;
        for (uint64_t j = 0; j < b_; ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(da[i]) * db[j]) % p_);
    }
    for (size_t i = r.size(); i-- > b_;) {
        uint64_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (uint64_t j = 0; j < b_; ++j) {
            uint64_t t = uint64_t(modulus_[j]) * c % p_;
            r[i - b_ + j] = static_cast<uint32_t>((r[i - b_ + j] + p_ - t) % p_);
        }
    }
    uint64_t v = 0;
    for (size_t i = b_; i-- > 0;) v = v * p_ + r[i];
    return Fq(static_cast<uint32_t>(v));
}

Fq FieldCtx::inv(Fq a) const {
    check(a);
    if (a.v == 0) throw DivideByZero("inverse of zero");
    if (b_ == 1) return pow(a, p_ - 2);
    if (!exp_.empty()) {
        uint64_t l = log_[a.v];
        return Fq(exp_[l == 0 ? 0 : q_ - 1 - l]);
    }
    return pow(a, q_ - 2);
}

Fq FieldCtx::pow(Fq a, uint64_t e) const {
    check(a);
    if (e == 0) return one();
    if (a.v == 0) return zero();
    if (!exp_.empty() && b_ > 1) {
        uint64_t l = (unsigned __int128)(log_[a.v]) * (e % (q_ - 1)) % (q_ - 1);
        return Fq(exp_[l]);
    }
    Fq r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fq FieldCtx::trace(Fq a) const {
    check(a);
    Fq acc = a, x = a;
    for (uint64_t i = 1; i < b_; ++i) {
        x = pow(x, p_);
        acc = add(acc, x);
    }
    return acc;
}

Fq FieldCtx::power_residue_char(uint64_t m, Fq a) const {
    if (m < 2 || !is_prime_u64(m) || (q_ - 1) % m != 0)
        throw BadOrder("m must be a prime divisor of q-1");
    return pow(a, (q_ - 1) / m);
}

Fq FieldCtx::binomial(uint64_t n, uint64_t k) const {
    if (k > n) return zero();
    uint64_t r = 1;
    while (n || k) {
        uint64_t nd = n % p_, kd = k % p_;
        if (kd > nd) return zero();
        uint64_t term = uint64_t(fact_[nd]) * inv_fact_[kd] % p_ * inv_fact_[nd - kd] % p_;
        r = r * term % p_;
        n /= p_;
        k /= p_;
    }
    return Fq(static_cast<uint32_t>(r));
}

FieldRef make_field(uint64_t p, uint64_t b, std::optional<std::vector<uint32_t>> modulus) {
    if (!is_prime_u64(p)) throw NonPrimeP("p is not prime");
    if (b < 1) throw FieldTooLarge("b must be >= 1");
    uint64_t q = 1;
    for (uint64_t i = 0; i < b; ++i) {
        q *= p;
        if (q > kMaxQ) throw FieldTooLarge("p^b exceeds the supported range");
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->b_ = b;
    ctx->q_ = q;

    if (modulus) {
        auto& m = *modulus;
        if (m.size() != b + 1 || m.back() != 1)
            throw ReducibleModulus("modulus must be monic of degree b");
        for (uint32_t c : m)
            if (c >= p) throw ReducibleModulus("modulus coefficient out of range");
        if (b > 1 && !irreducible_over_fp(m, p))
            throw ReducibleModulus("modulus is reducible over F_p");
        ctx->modulus_ = m;
    } else if (b == 1) {
        ctx->modulus_ = {0, 1};  // X
    } else {
        // lexicographically least irreducible: compare c_0 first, then c_1, ...
        std::vector<uint32_t> cand(b + 1, 0);
        cand[b] = 1;
        bool found = false;
        std::vector<uint64_t> odo(b, 0);  // odo[0] = c_0 is most significant
        while (true) {
            for (uint64_t i = 0; i < b; ++i) cand[i] = static_cast<uint32_t>(odo[i]);
            if (irreducible_over_fp(cand, p)) {
                found = true;
                break;
            }
            uint64_t i = b;
            while (i-- > 0) {
                if (++odo[i] < p) break;
                odo[i] = 0;
                if (i == 0) goto search_done;
            }
        }
    search_done:
        if (!found) throw ReducibleModulus("no irreducible modulus found");  // unreachable
        ctx->modulus_ = cand;
    }

    // factorial tables mod p (Lucas digits)
    ctx->fact_.resize(p);
    ctx->inv_fact_.resize(p);
    ctx->fact_[0] = 1;
    for (uint64_t i = 1; i < p; ++i)
        ctx->fact_[i] = static_cast<uint32_t>(uint64_t(ctx->fact_[i - 1]) * i % p);
    {
        uint64_t e = p - 2, x = ctx->fact_[p - 1], acc = 1;
        while (e) {
            if (e & 1) acc = acc * x % p;
            x = x * x % p;
            e >>= 1;
        }
        ctx->inv_fact_[p - 1] = static_cast<uint32_t>(acc);
        for (uint64_t i = p - 1; i-- > 0;)
            ctx->inv_fact_[i] = static_cast<uint32_t>(uint64_t(ctx->inv_fact_[i + 1]) * (i + 1) % p);
    }

    // exp/log fast path for small extension fields
    if (b > 1 && q <= (uint64_t(1) << 16)) {
        std::vector<uint64_t> prime_divs;
        uint64_t m = q - 1;
        for (uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                prime_divs.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) prime_divs.push_back(m);
        Fq gen(0);
        for (uint64_t g = 2; g < q; ++g) {
            Fq cand(static_cast<uint32_t>(g));
            bool primitive = true;
            for (uint64_t r : prime_divs) {
                Fq t = ctx->one();
                uint64_t e = (q - 1) / r;
                Fq base = cand;
                while (e) {
                    if (e & 1) t = ctx->mul_generic(t, base);
                    base = ctx->mul_generic(base, base);
                    e >>= 1;
                }
                if (t == ctx->one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                gen = cand;
                break;
            }
        }
        ctx->exp_.resize(q - 1);
        ctx->log_.assign(q, 0);
        Fq cur = ctx->one();
        for (uint64_t i = 0; i < q - 1; ++i) {
            ctx->exp_[i] = cur.v;
            ctx->log_[cur.v] = static_cast<uint32_t>(i);
            cur = ctx->mul_generic(cur, gen);
        }
    }
    if (b > 1 && p != 2 && q <= 1024) {
        ctx->neg_.resize(q);
        for (uint64_t a = 0; a < q; ++a)
            ctx->neg_[a] = ctx->add_digits(Fq(0), Fq(static_cast<uint32_t>(a)), true).v;
        ctx->add_.resize(q * q);
        for (uint64_t a = 0; a < q; ++a)
            for (uint64_t bb = 0; bb < q; ++bb)
                ctx->add_[a * q + bb] =
                    ctx->add_digits(Fq(static_cast<uint32_t>(a)), Fq(static_cast<uint32_t>(bb)), false).v;
    }

    return ctx;
}

}  // namespace charcodes
