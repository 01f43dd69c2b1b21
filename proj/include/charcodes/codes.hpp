#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charcodes/poly.hpp"

namespace charcodes {

enum class Alphabet { qr, f2, fq };

/// A length-q word of field elements indexed by the canonical enumeration.
struct ReceivedWord {
    FieldRef ctx;
    Alphabet alphabet = Alphabet::fq;
    std::vector<Fq> values;  // length q
};

enum class Family { qr, dbch, mth, addp };

/// Message-class validation for the four code families.
enum class Validation { strict, lab };

struct CodeSpec {
    Family family = Family::qr;
    uint64_t m = 2;  // power-residue order, mth family only
    std::optional<uint64_t> d;  // degree bound, when known

    /// Throws InvalidMessage unless g is a valid message for the family.
    void check_message(const Poly& g) const;
};

/// values[i] = quad_char(g(alpha_i)). Strict mode requires g monic squarefree.
ReceivedWord encode_qr(const FieldRef& f, const Poly& g, Validation v = Validation::strict);

/// values[i] = trace(g(alpha_i)) in {0,1}. Strict mode requires only
/// odd-degree monomials. Characteristic 2.
ReceivedWord encode_dbch(const FieldRef& f, const Poly& g, Validation v = Validation::strict);

/// values[i] = power_residue_char(m, g(alpha_i)). Strict mode requires g monic
/// with every factor multiplicity in {1..m-1}.
ReceivedWord encode_mth(const FieldRef& f, uint64_t m, const Poly& g,
                        Validation v = Validation::strict);

/// values[i] = trace(g(alpha_i)), valued in the prime subfield. Strict mode
/// requires every monomial degree coprime to p.
ReceivedWord encode_addp(const FieldRef& f, const Poly& g, Validation v = Validation::strict);

size_t hamming_distance(const ReceivedWord& a, const ReceivedWord& b);

class Rng;

/// Uniform random message from the family's strict class. qr and mth draw a
/// monic polynomial of degree exactly spec.d (rejection for the class); dbch
/// and addp draw every admissible coefficient uniformly, zero included.
Poly random_message(const FieldRef& f, const CodeSpec& spec, Rng& rng);

/// Change exactly e positions (chosen without replacement by seed) to a
/// different symbol of the word's alphabet, uniformly among the alternatives.
ReceivedWord corrupt(const ReceivedWord& w, uint64_t e, uint64_t seed);

}  // namespace charcodes
