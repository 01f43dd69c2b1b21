#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charcodes/codes.hpp"
#include "charcodes/linsolve.hpp"
#include "charcodes/rational.hpp"

namespace charcodes {

/// Decoder parameters with the standard defaulting formulas and override
/// slots. Theorem mode validates the guarantees' hypotheses; lab mode skips
/// that validation (the structural requirements M even, M < q, h < q always
/// hold) and is the path for small experimental instances.
struct QRDecoderParams {
    uint64_t d = 1;
    uint64_t e = 0;
    Rational eps{1, 16};
    std::optional<uint64_t> M, c, h, D, u;
    bool lab = false;
};

struct QRResolved {
    uint64_t M, c, h, D, u;
};

/// Defaults: M = ceil(16 d / eps) rounded up to even, c = M/2, h = 2e,
/// D = d((q-1)/2 + M) + cq, u = h + dM. For the m-th power family:
/// M = ceil(16 d m / eps), D = d((q-1)(m-1)/m + M) + cq, u = h + (m-1)dM.
QRResolved resolve_qr_params(const FieldCtx& f, const QRDecoderParams& p, uint64_t m = 2);

/// Homogeneous system for the character decoders: unknowns are the
/// coefficients of F (degree <= D) and of U_0..U_{M-1} (degree <= u); row
/// (alpha, l) encodes F^{[l]}(alpha) - r(alpha) U_l(alpha) = 0. Row order is
/// alpha-major in canonical enumeration order, l minor. Columns: F
/// coefficients first, then the U_l blocks.
MatrixFq build_qr_system(const FieldRef& f, const std::vector<Fq>& r, const QRResolved& rp);

struct QRDiagnostics {
    size_t rows = 0, cols = 0, nullity = 0;
    std::optional<size_t> deg_f;
    std::vector<uint64_t> residues;
    bool ambiguous = false;
    bool lab = false;

    std::string text() const;
};

struct QRDecodeResult {
    Poly g;
    QRDiagnostics diag;
};

/// Recover a monic squarefree message from a noisy quadratic-character word:
/// solve the derivative system, factor the F found, and keep the irreducible
/// factors whose multiplicity mod q lies in [ceil(3q/8), floor(7q/8)].
QRDecodeResult decode_qr(const FieldRef& f, const ReceivedWord& r, const QRDecoderParams& params,
                         uint64_t seed);

/// Factor-and-select step on an explicit F; exposed so tests can check scale
/// invariance of the selection.
std::pair<Poly, std::vector<uint64_t>> qr_recover_from_f(const Poly& f_poly, uint64_t seed);

struct MthDiagnostics {
    std::vector<QRDiagnostics> per_nu;
    std::string text() const;
};

struct MthDecodeResult {
    Poly g;
    MthDiagnostics diag;
};

/// m-th power residue variant: one derivative system per nu in {1..m-1} on
/// the pointwise nu-th power of the word, then per-factor selection of the
/// unique multiplicity in {0..m-1} consistent with every nu.
MthDecodeResult decode_mth(const FieldRef& f, uint64_t m, const ReceivedWord& r,
                           const QRDecoderParams& params, uint64_t seed);

}  // namespace charcodes
