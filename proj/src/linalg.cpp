#include "rmc/linalg.hpp"

namespace rmc {

std::size_t rref(Mat& M, std::vector<std::size_t>* pivots) {
    const FieldCtx& F = *M.F;
    std::size_t r = 0;
    if (pivots) pivots->clear();
    for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
        std::size_t piv = r;
        while (piv < M.rows && M.at(piv, c) == 0) ++piv;
        if (piv == M.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
        u64 d = F.inv(M.at(r, c));
        for (std::size_t j = c; j < M.cols; ++j) M.at(r, j) = F.mul(d, M.at(r, j));
        for (std::size_t i = 0; i < M.rows; ++i) {
            if (i == r || M.at(i, c) == 0) continue;
            u64 f = M.at(i, c);
            for (std::size_t j = c; j < M.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

std::size_t rank(Mat M) { return rref(M); }

std::vector<std::vector<u64>> kernel_basis(Mat M) {
    const FieldCtx& F = *M.F;
    std::vector<std::size_t> pivots;
    std::size_t r = rref(M, &pivots);
    std::vector<bool> is_pivot(M.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<u64>> basis;
    for (std::size_t c = 0; c < M.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<u64> v(M.cols, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = F.neg(M.at(i, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

u64 det(Mat M) {
    if (M.rows != M.cols) throw invalid_error("det: non-square matrix");
    const FieldCtx& F = *M.F;
    u64 d = 1;
    std::size_t n = M.rows;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && M.at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(c, j));
            d = F.neg(d);
        }
        d = F.mul(d, M.at(c, c));
        u64 icc = F.inv(M.at(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (M.at(i, c) == 0) continue;
            u64 f = F.mul(icc, M.at(i, c));
            for (std::size_t j = c; j < n; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(c, j)));
        }
    }
    return d;
}

std::vector<u64> solve(Mat M, std::vector<u64> b) {
    if (b.size() != M.rows) throw invalid_error("solve: size mismatch");
    Mat A(*M.F, M.rows, M.cols + 1);
    for (std::size_t i = 0; i < M.rows; ++i) {
        for (std::size_t j = 0; j < M.cols; ++j) A.at(i, j) = M.at(i, j);
        A.at(i, M.cols) = b[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t r = rref(A, &pivots);
    for (std::size_t i = 0; i < r; ++i)
        if (pivots[i] == M.cols) return {};  // inconsistent
    std::vector<u64> x(M.cols, 0);
    for (std::size_t i = 0; i < r; ++i)
        if (pivots[i] < M.cols) x[pivots[i]] = A.at(i, M.cols);
    return x;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    if (A.cols != B.rows || *A.F != *B.F) throw invalid_error("mat_mul: shape or field mismatch");
    const FieldCtx& F = *A.F;
    Mat C(F, A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            u64 aik = A.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

}  // namespace rmc
