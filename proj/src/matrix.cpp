#include "futaki/matrix.hpp"

namespace futaki {

std::vector<QVector> fixed_subspace(const QMatrix& m) {
  if (!m.is_square()) throw DomainError("fixed_subspace: matrix is not square");
  return kernel_basis(m - QMatrix::identity(m.rows()));
}

bool in_span(const std::vector<QVector>& basis, const QVector& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }
  const auto a = QMatrix::from_columns(v.size(), basis);
  return solve(a, std::span<const Rational>(v)).has_value();
}

std::vector<QVector> common_kernel(const std::vector<QMatrix>& blocks, std::size_t cols) {
  QMatrix stacked(0, cols);
  for (const auto& b : blocks) stacked.append_rows(b);
  return kernel_basis(stacked);
}

std::string to_string(const QMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ", ";
    out += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += m(r, c).get_str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace futaki
