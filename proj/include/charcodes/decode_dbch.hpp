#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charcodes/codes.hpp"
#include "charcodes/linsolve.hpp"
#include "charcodes/rational.hpp"

namespace charcodes {

struct DBCHDecoderParams {
    uint64_t d = 1;
    uint64_t e = 0;
    Rational eps{1, 16};
    std::optional<uint64_t> M, c, h, u;
    bool lab = false;
    /// Keep scanning after the first solvable h* and record every success.
    bool scan_all_hstar = false;
};

struct TraceResolved {
    uint64_t M, c, h, u;
};

/// Defaults: M = ceil(16 d / eps) rounded up to even, c = M/2, h = 2e,
/// u = h + dM. Theorem mode checks d <= (eps/16) sqrt(q) and
/// e <= (1/(4p) - eps) q.
TraceResolved resolve_trace_params(const FieldCtx& f, const DBCHDecoderParams& p);

/// The trace-side system for one (d, h*) attempt. Unknowns: coefficients of F
/// up to the exact-degree target (d/p + c)q + h*, the free coefficients of the
/// error pseudopolynomial E = sum_{i<=c} E_i Lambda^i (deg E_i <= h, with
/// E_c pinned to X^{h*} + lower terms), and U_0..U_{M-1} of degree <= u. Row
/// (alpha, l) encodes F^{[l]}(alpha) - r(alpha) E^{[l]}(alpha) - U_l(alpha) = 0
/// with the pinned part of E moved to the right-hand side.
struct TraceSystem {
    MatrixFq mat;
    std::vector<Fq> rhs;
    uint64_t deg_f_target = 0;
    uint64_t hstar = 0;
    size_t e_offset = 0;  // first column of the E block
    size_t u_offset = 0;  // first column of the U block
};
TraceSystem build_trace_system(const FieldRef& f, const std::vector<Fq>& r,
                               const TraceResolved& rp, uint64_t d, uint64_t hstar);

struct LeadingResult {
    uint64_t d = 0;
    Fq a_d{0};
    bool found = false;
    bool lab = false;
    uint64_t hstar = 0;
    std::optional<size_t> deg_f, deg_e;
    Fq a{0}, b{0};
    size_t rows = 0, cols = 0;
    std::vector<std::pair<uint64_t, Fq>> successes;  // (h*, a_d) in scan order

    std::string text() const;
};

/// One leading-monomial extraction: scan h* in increasing order, solve for an
/// (F, E) pair with both degrees exact, and read a_d = (a/b)^p off the leading
/// coefficients. Characteristic 2 entry point (d odd).
LeadingResult decode_dbch_leading(const FieldRef& f, const ReceivedWord& r,
                                  const DBCHDecoderParams& params, uint64_t seed);

/// Characteristic-p entry point (d coprime to p).
LeadingResult decode_addp_leading(const FieldRef& f, const ReceivedWord& r,
                                  const DBCHDecoderParams& params, uint64_t seed);

struct TraceIteration {
    LeadingResult step;
    ReceivedWord residual;  // word after subtracting the recovered monomial
};

struct TraceDiagnostics {
    std::vector<TraceIteration> iterations;
    std::string text() const;
};

struct TraceDecodeResult {
    Poly g;
    TraceDiagnostics diag;
};

/// Full recovery by peeling: extract the leading monomial, subtract its trace
/// from the word, drop to the next degree coprime to p, repeat.
TraceDecodeResult decode_dbch(const FieldRef& f, const ReceivedWord& r,
                              const DBCHDecoderParams& params, uint64_t seed);
TraceDecodeResult decode_addp(const FieldRef& f, const ReceivedWord& r,
                              const DBCHDecoderParams& params, uint64_t seed);

}  // namespace charcodes
