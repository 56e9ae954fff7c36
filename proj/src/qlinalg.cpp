#include "knothom/qlinalg.hpp"

#include <stdexcept>

namespace knothom {

size_t rref(QMat& m, std::vector<size_t>* pivots) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) pivot++;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; j++) m[r][j] *= inv;
        for (size_t i = 0; i < rows; i++) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; j++) m[i][j] -= f * m[r][j];
        }
        if (pivots) pivots->push_back(c);
        r++;
    }
    return r;
}

size_t rank(QMat m) { return rref(m); }

std::vector<QVec> kernel_basis(const QMat& m, size_t ncols) {
    QMat a(m);
    std::vector<size_t> pivots;
    size_t r = rref(a, &pivots);
    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (size_t c = 0; c < ncols; c++) {
        if (is_pivot[c]) continue;
        QVec v(ncols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < r; i++) v[pivots[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(const QMat& m, const QVec& b, QVec& x) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    QMat aug = m;
    for (size_t i = 0; i < rows; i++) aug[i].push_back(b[i]);
    std::vector<size_t> pivots;
    size_t r = rref(aug, &pivots);
    x.assign(cols, Rat(0));
    for (size_t i = 0; i < r; i++) {
        if (pivots[i] == cols) return false;  // pivot in the augmented column
        x[pivots[i]] = aug[i][cols];
    }
    return true;
}

std::vector<size_t> extend_basis(const QMat& rows, const std::vector<QVec>& candidates) {
    QMat work(rows);
    size_t cur = rank(work);
    work = rows;
    std::vector<size_t> accepted;
    for (size_t k = 0; k < candidates.size(); k++) {
        work.push_back(candidates[k]);
        size_t r = rank(work);
        if (r > cur) {
            cur = r;
            accepted.push_back(k);
        } else {
            work.pop_back();
        }
    }
    return accepted;
}

bool coords_mod(const std::vector<QVec>& basis, const QMat& mod_rows, const QVec& b, QVec& coeffs) {
    // Solve [basis^T | mod^T] * (c, d) = b and return c.
    size_t dim = b.size();
    size_t nb = basis.size(), nm = mod_rows.size();
    QMat m = qmat(dim, nb + nm);
    for (size_t j = 0; j < nb; j++)
        for (size_t i = 0; i < dim; i++) m[i][j] = basis[j][i];
    for (size_t j = 0; j < nm; j++)
        for (size_t i = 0; i < dim; i++) m[i][nb + j] = mod_rows[j][i];
    QVec x;
    if (!solve(m, b, x)) return false;
    coeffs.assign(x.begin(), x.begin() + static_cast<long>(nb));
    return true;
}

}  // namespace knothom
