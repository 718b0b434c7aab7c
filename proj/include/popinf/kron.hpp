#ifndef POPINF_KRON_HPP
#define POPINF_KRON_HPP

#include <Eigen/Dense>

#include <array>
#include <utility>
#include <vector>

namespace popinf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Kronecker product W (x) Z: block (i,j) of the result equals w_ij * Z.
Matrix kron(const Matrix& W, const Matrix& Z);

/// Khatri-Rao (column-wise Kronecker) product of matrices with equal column
/// counts: column j of the result is w_j (x) z_j.
Matrix khatri_rao(const Matrix& W, const Matrix& Z);

/// Number of unique degree-2 monomials in r variables, C(r+1,2).
long compact_sq_size(long r);
/// Number of unique degree-3 monomials in r variables, C(r+2,3).
long compact_cube_size(long r);

/// Compact self Khatri-Rao product of a vector: the unique entries of
/// w (x) w in block order [w_1^2; w_2*w_{1:2}; ...; w_r*w_{1:r}].
Vector compact_sq(const Vector& w);
/// Column-wise compact square of a matrix.
Matrix compact_sq_cols(const Matrix& W);

/// Compact third-order self product: block k is w_k * compact_sq(w_{1:k}).
Vector compact_cube(const Vector& w);
/// Column-wise compact cube of a matrix.
Matrix compact_cube_cols(const Matrix& W);

/// Index pairs (i,j), i >= j, 0-based, mapping compact position k to the
/// monomial w_i * w_j, in the same block order as compact_sq.
std::vector<std::pair<int, int>> compact_sq_index_map(int r);

/// Index triples (i,j,k), i >= j >= k, in the block order of compact_cube.
std::vector<std::array<int, 3>> compact_cube_index_map(int r);

/// Converts a compact quadratic operator H (r x C(r+1,2)) to its full
/// Kronecker form E (r x r^2) with H * compact_sq(w) == E * (w (x) w) for
/// every w. Off-diagonal weight is split evenly between the (i,j) and (j,i)
/// Kronecker positions, so E is symmetric in its Kronecker indices.
Matrix expand_quadratic_operator(const Matrix& H_compact);

}  // namespace popinf

#endif  // POPINF_KRON_HPP
