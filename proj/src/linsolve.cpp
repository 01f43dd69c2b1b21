#include "charcodes/linsolve.hpp"

#include "charcodes/rng.hpp"

namespace charcodes {

namespace {

struct Reduced {
    MatrixFq mat;                 // reduced row echelon form
    std::vector<Fq> rhs;          // transformed right-hand side (may be empty)
    std::vector<size_t> pivot_col;  // per pivot row
    std::vector<int64_t> col_pivot_row;  // per column, -1 if free
    bool consistent = true;
};

Reduced rref(MatrixFq m, std::vector<Fq> rhs) {
    const FieldCtx& f = *m.field();
    const size_t rows = m.rows(), cols = m.cols();
    Reduced out{std::move(m), std::move(rhs), {}, std::vector<int64_t>(cols, -1), true};
    MatrixFq& a = out.mat;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a.at(piv, c) == Fq(0)) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (size_t j = c; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
            if (!out.rhs.empty()) std::swap(out.rhs[piv], out.rhs[r]);
        }
        Fq inv = f.inv(a.at(r, c));
        if (inv != Fq(1)) {
            for (size_t j = c; j < cols; ++j) a.at(r, j) = f.mul(a.at(r, j), inv);
            if (!out.rhs.empty()) out.rhs[r] = f.mul(out.rhs[r], inv);
        }
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Fq factor = a.at(i, c);
            if (factor == Fq(0)) continue;
            a.at(i, c) = Fq(0);
            for (size_t j = c + 1; j < cols; ++j) {
                Fq v = a.at(r, j);
                if (v != Fq(0)) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, v));
            }
            if (!out.rhs.empty()) out.rhs[i] = f.sub(out.rhs[i], f.mul(factor, out.rhs[r]));
        }
        out.pivot_col.push_back(c);
        out.col_pivot_row[c] = static_cast<int64_t>(r);
        ++r;
    }
    if (!out.rhs.empty()) {
        for (size_t i = r; i < rows; ++i)
            if (out.rhs[i] != Fq(0)) {
                out.consistent = false;
                break;
            }
    }
    return out;
}

}  // namespace

std::vector<std::vector<Fq>> nullspace_basis(const MatrixFq& m) {
    const FieldCtx& f = *m.field();
    Reduced red = rref(m, {});
    const size_t cols = m.cols();
    std::vector<std::vector<Fq>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (red.col_pivot_row[c] >= 0) continue;  // pivot column
        std::vector<Fq> v(cols, Fq(0));
        v[c] = Fq(1);
        for (size_t pr = 0; pr < red.pivot_col.size(); ++pr) {
            size_t pc = red.pivot_col[pr];
            v[pc] = f.neg(red.mat.at(pr, c));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Fq>> nullspace_sample(const MatrixFq& m, size_t count, uint64_t seed) {
    const FieldCtx& f = *m.field();
    std::vector<std::vector<Fq>> out = nullspace_basis(m);
    if (out.empty() || out.size() >= count) {
        if (out.size() > count) out.resize(count);
        return out;
    }
    Rng rng(seed);
    const size_t dim = out.size();
    while (out.size() < count) {
        std::vector<Fq> coeffs(dim, Fq(0));
        bool nonzero = false;
        for (Fq& c : coeffs) {
            c = Fq(static_cast<uint32_t>(rng.below(f.q())));
            nonzero |= (c != Fq(0));
        }
        if (!nonzero) continue;
        std::vector<Fq> v(m.cols(), Fq(0));
        for (size_t k = 0; k < dim; ++k) {
            if (coeffs[k] == Fq(0)) continue;
            for (size_t j = 0; j < m.cols(); ++j)
                v[j] = f.add(v[j], f.mul(coeffs[k], out[k][j]));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Fq>> solve_affine(const MatrixFq& m, std::span<const Fq> rhs) {
    if (rhs.size() != m.rows()) throw DimensionMismatch("rhs length must equal row count");
    Reduced red = rref(m, std::vector<Fq>(rhs.begin(), rhs.end()));
    if (!red.consistent) return std::nullopt;
    std::vector<Fq> v(m.cols(), Fq(0));
    for (size_t pr = 0; pr < red.pivot_col.size(); ++pr) v[red.pivot_col[pr]] = red.rhs[pr];
    return v;
}

size_t rank(const MatrixFq& m) { return rref(m, {}).pivot_col.size(); }

}  // namespace charcodes
