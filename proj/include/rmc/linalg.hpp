#ifndef RMC_LINALG_HPP
#define RMC_LINALG_HPP

#include <cstddef>
#include <vector>

#include "rmc/gf.hpp"

namespace rmc {

/// Dense matrix with entries encoded over a FieldCtx.
struct Mat {
    const FieldCtx* F = nullptr;
    std::size_t rows = 0, cols = 0;
    std::vector<u64> a;  // row-major

    Mat() = default;
    Mat(const FieldCtx& f, std::size_t r, std::size_t c) : F(&f), rows(r), cols(c), a(r * c, 0) {}
    u64& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    u64 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// In-place reduced row echelon form; returns rank, records pivot columns.
std::size_t rref(Mat& M, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(Mat M);

/// Basis of the right null space {x : Mx = 0}; deterministic (one vector per
/// free column of the RREF, ordered by column index).
std::vector<std::vector<u64>> kernel_basis(Mat M);

u64 det(Mat M);

/// Solves Mx = b; returns empty vector when inconsistent.
std::vector<u64> solve(Mat M, std::vector<u64> b);

Mat mat_mul(const Mat& A, const Mat& B);

}  // namespace rmc

#endif
