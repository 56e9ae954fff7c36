#pragma once

#include <vector>

#include "knothom/rational.hpp"

namespace knothom {

// Dense exact linear algebra over Q. Sizes here are small (per-degree
// pieces of graded complexes), so simplicity beats sparsity.
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major

inline QMat qmat(size_t rows, size_t cols) { return QMat(rows, QVec(cols, Rat(0))); }

// In-place reduced row echelon form with fixed leftmost-pivot order.
// Returns rank; pivot column indices appended to *pivots when non-null.
size_t rref(QMat& m, std::vector<size_t>* pivots = nullptr);

size_t rank(QMat m);

// Basis of the null space { x : m x = 0 }, as column vectors.
std::vector<QVec> kernel_basis(const QMat& m, size_t ncols);

// Solve m x = b exactly. Returns false when inconsistent.
bool solve(const QMat& m, const QVec& b, QVec& x);

// Row space of `rows` extended by those of `candidates` that are independent
// of it; returns indices of the accepted candidates (deterministic order).
std::vector<size_t> extend_basis(const QMat& rows, const std::vector<QVec>& candidates);

// Coordinates of b in span(basis_rows) union span(mod_rows), i.e. solve
// b = sum c_i basis_i + (something in mod rows); returns the c_i.
// False when b is not in the combined span.
bool coords_mod(const std::vector<QVec>& basis, const QMat& mod_rows, const QVec& b, QVec& coeffs);

}  // namespace knothom
