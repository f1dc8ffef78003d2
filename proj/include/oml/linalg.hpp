#pragma once

/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra over the scalar field.
 *
 * Everything here is plain Gaussian elimination with exact division;
 * there are no stability concerns, so pivoting just takes the first
 * nonzero entry.  Matrices are row-major vectors of rows.
 */

#include <optional>
#include <vector>

#include "oml/scalar.hpp"

namespace oml {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

namespace la {

Vec zero_vec(int n, const Field& f);
Mat identity(int n, const Field& f);

bool is_zero(const Vec& v);

Vec conj(const Vec& v);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scale(const Scalar& c, const Vec& v);

/// Plain bilinear sum (no involution); forms apply their own conjugations.
Scalar dot(const Vec& x, const Vec& y);

Vec matvec(const Mat& m, const Vec& v);
Mat matmul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);

/// In-place reduction to the canonical reduced row echelon form: leading
/// entries 1, zero entries above and below each pivot, zero rows dropped,
/// rows ordered by pivot column.  Returns the pivot columns.  The result
/// is the unique canonical basis of the row space.
std::vector<int> rref(Mat& m);

int rank(Mat m);

/// Canonical basis (as rref rows) of {x : m x = 0} in dimension ncols.
Mat nullspace(const Mat& m, int ncols, const Field& f);

/// One solution of a x = b, if any.
std::optional<Vec> solve(const Mat& a, const Vec& b);

Scalar det(Mat m);

std::optional<Mat> inverse(Mat m);

} // namespace la
} // namespace oml
