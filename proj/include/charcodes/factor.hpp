#pragma once

#include <cstdint>
#include <vector>

#include "charcodes/poly.hpp"
#include "charcodes/rng.hpp"

namespace charcodes {

struct FactorTerm {
    Poly factor;          // monic irreducible
    size_t multiplicity;  // >= 1
};

/// Complete factorization input = unit * prod factor_i^{mult_i}, with distinct
/// monic irreducible factors sorted by (degree, coefficient sequence).
struct Factorization {
    Fq unit;
    std::vector<FactorTerm> terms;

    Poly product(const FieldRef& f) const;
};

/// Squarefree split, distinct-degree split, then Cantor-Zassenhaus
/// equal-degree split driven by the seed. The result is independent of the
/// seed; only the internal search order varies.
Factorization factor_poly(const Poly& a, uint64_t seed);

/// Rabin irreducibility test. Degree must be >= 1.
bool is_irreducible(const Poly& a);

}  // namespace charcodes
