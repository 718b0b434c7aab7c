#include "popinf/kron.hpp"

#include <stdexcept>

namespace popinf {

Matrix kron(const Matrix& W, const Matrix& Z) {
  Matrix out(W.rows() * Z.rows(), W.cols() * Z.cols());
  for (long i = 0; i < W.rows(); ++i)
    for (long j = 0; j < W.cols(); ++j)
      out.block(i * Z.rows(), j * Z.cols(), Z.rows(), Z.cols()) = W(i, j) * Z;
  return out;
}

Matrix khatri_rao(const Matrix& W, const Matrix& Z) {
  if (W.cols() != Z.cols())
    throw std::invalid_argument("khatri_rao: column counts differ");
  Matrix out(W.rows() * Z.rows(), W.cols());
  for (long j = 0; j < W.cols(); ++j)
    for (long i = 0; i < W.rows(); ++i)
      out.col(j).segment(i * Z.rows(), Z.rows()) = W(i, j) * Z.col(j);
  return out;
}

long compact_sq_size(long r) { return r * (r + 1) / 2; }

long compact_cube_size(long r) { return r * (r + 1) * (r + 2) / 6; }

Vector compact_sq(const Vector& w) {
  const long r = w.size();
  Vector out(compact_sq_size(r));
  long pos = 0;
  for (long k = 0; k < r; ++k)
    for (long j = 0; j <= k; ++j) out(pos++) = w(k) * w(j);
  return out;
}

Matrix compact_sq_cols(const Matrix& W) {
  Matrix out(compact_sq_size(W.rows()), W.cols());
  for (long j = 0; j < W.cols(); ++j) out.col(j) = compact_sq(W.col(j));
  return out;
}

Vector compact_cube(const Vector& w) {
  const long r = w.size();
  Vector out(compact_cube_size(r));
  long pos = 0;
  for (long k = 0; k < r; ++k) {
    const Vector head = compact_sq(w.head(k + 1));
    out.segment(pos, head.size()) = w(k) * head;
    pos += head.size();
  }
  return out;
}

Matrix compact_cube_cols(const Matrix& W) {
  Matrix out(compact_cube_size(W.rows()), W.cols());
  for (long j = 0; j < W.cols(); ++j) out.col(j) = compact_cube(W.col(j));
  return out;
}

std::vector<std::pair<int, int>> compact_sq_index_map(int r) {
  std::vector<std::pair<int, int>> map;
  map.reserve(static_cast<size_t>(compact_sq_size(r)));
  for (int k = 0; k < r; ++k)
    for (int j = 0; j <= k; ++j) map.emplace_back(k, j);
  return map;
}

std::vector<std::array<int, 3>> compact_cube_index_map(int r) {
  std::vector<std::array<int, 3>> map;
  map.reserve(static_cast<size_t>(compact_cube_size(r)));
  for (int k = 0; k < r; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= i; ++j) map.push_back({k, i, j});
  return map;
}

Matrix expand_quadratic_operator(const Matrix& H_compact) {
  // Recover r from C(r+1,2) columns.
  long r = 0;
  while (compact_sq_size(r) < H_compact.cols()) ++r;
  if (compact_sq_size(r) != H_compact.cols())
    throw std::invalid_argument(
        "expand_quadratic_operator: column count is not C(r+1,2)");
  Matrix out = Matrix::Zero(H_compact.rows(), r * r);
  const auto map = compact_sq_index_map(static_cast<int>(r));
  for (size_t k = 0; k < map.size(); ++k) {
    const auto [i, j] = map[k];
    if (i == j) {
      out.col(i * r + j) += H_compact.col(static_cast<long>(k));
    } else {
      out.col(i * r + j) += 0.5 * H_compact.col(static_cast<long>(k));
      out.col(j * r + i) += 0.5 * H_compact.col(static_cast<long>(k));
    }
  }
  return out;
}

}  // namespace popinf
