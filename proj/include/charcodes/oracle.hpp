#pragma once

#include <cstdint>
#include <optional>

#include "charcodes/codes.hpp"

namespace charcodes {

struct BruteForceResult {
    Poly g;
    size_t dist = 0;
    bool unique = true;
};

/// Exhaustive nearest-codeword search over the family's strict message class.
/// The candidate count is guarded at 10^7.
BruteForceResult brute_force_decode(const FieldRef& f, const CodeSpec& spec,
                                    const ReceivedWord& r);

BruteForceResult brute_force_decode_qr(const FieldRef& f, const ReceivedWord& r, uint64_t d);
BruteForceResult brute_force_decode_dbch(const FieldRef& f, const ReceivedWord& r, uint64_t d);

/// Zero-error dual-BCH decoding: invert the F_2-linear encoding map by linear
/// algebra; absent when the word is not a codeword.
std::optional<Poly> dbch_zero_error_solve(const FieldRef& f, const ReceivedWord& w, uint64_t d);

struct WeilSum {
    int64_t sum = 0;         // signed character sum (class-count deviation for p > 2)
    uint64_t magnitude = 0;  // |sum|
    double bound = 0;        // 2*deg*sqrt(q), resp. (deg-1)*sqrt(q)
    bool applicable = false;

    /// Exact integer form of magnitude <= bound.
    bool within_bound() const { return exact_ok; }
    bool exact_ok = true;
};

/// Multiplicative character sum over all field elements. Applicable unless f
/// is a scalar times a perfect square (decided via the squarefree core).
WeilSum weil_sum_mult(const FieldRef& f, const Poly& poly);

/// Additive character sum: for p = 2 the signed sum of (-1)^{Tr f}; for p > 2
/// the largest deviation of a trace-value class count from q/p. Applicable
/// unless the trace-visible core of f is constant.
WeilSum weil_sum_add(const FieldRef& f, const Poly& poly);

/// Minimum Hamming weight over the nonzero dual-BCH codewords of degree <= d.
size_t min_weight_dbch(const FieldRef& f, uint64_t d);

}  // namespace charcodes
