#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "charcodes/field.hpp"

namespace charcodes {

/// Dense row-major matrix over a FieldCtx.
class MatrixFq {
   public:
    MatrixFq(FieldRef f, size_t rows, size_t cols)
        : ctx_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, Fq(0)) {}

    const FieldRef& field() const { return ctx_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Fq& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    Fq at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    std::span<Fq> row(size_t r) { return {a_.data() + r * cols_, cols_}; }
    std::span<const Fq> row(size_t r) const { return {a_.data() + r * cols_, cols_}; }

   private:
    FieldRef ctx_;
    size_t rows_, cols_;
    std::vector<Fq> a_;
};

/// Canonical nullspace basis: one vector per free column in increasing column
/// order, the free variable set to 1 and the other free variables to 0.
std::vector<std::vector<Fq>> nullspace_basis(const MatrixFq& m);

/// Up to `count` nonzero solutions of M v = 0: the canonical basis first, then
/// seeded random nonzero combinations of it. Empty iff the nullspace is trivial.
std::vector<std::vector<Fq>> nullspace_sample(const MatrixFq& m, size_t count, uint64_t seed);

/// One solution of M v = rhs with free variables set to 0, or nullopt if the
/// system is inconsistent.
std::optional<std::vector<Fq>> solve_affine(const MatrixFq& m, std::span<const Fq> rhs);

/// rank via row reduction (used by tests to cross-check rank + nullity = cols).
size_t rank(const MatrixFq& m);

}  // namespace charcodes
