#include "gpd/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gpd {

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, operator_norm(m));
  return operator_norm(m - m.adjoint()) <= tol * scale;
}

PsdVerdict psd_check(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("psd_check: matrix must be square");
  }
  if (!is_hermitian(m, tol)) {
    throw std::invalid_argument("psd_check: matrix is not Hermitian within "
                                "tolerance");
  }
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("psd_check: eigenvalue computation failed");
  }
  PsdVerdict v;
  const RealVector& ev = es.eigenvalues();
  v.min_eigenvalue = ev.size() ? ev.minCoeff() : 0.0;
  const double top = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
  v.scale = std::max(1.0, top);
  v.positive = v.min_eigenvalue >= -tol * v.scale;
  return v;
}

Matrix hermitian_sqrt(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_sqrt: matrix must be square");
  }
  if (!is_hermitian(m, tol)) {
    throw std::invalid_argument("hermitian_sqrt: matrix is not Hermitian "
                                "within tolerance");
  }
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_sqrt: eigenvalue computation failed");
  }
  RealVector ev = es.eigenvalues();
  const double top = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
  const double floor = -tol * std::max(1.0, top);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < floor) {
      std::ostringstream os;
      os << "hermitian_sqrt: eigenvalue " << ev(i)
         << " below the clamping tolerance " << floor;
      throw std::domain_error(os.str());
    }
    ev(i) = ev(i) > 0.0 ? std::sqrt(ev(i)) : 0.0;
  }
  return es.eigenvectors() * ev.asDiagonal().toDenseMatrix().cast<Complex>() *
         es.eigenvectors().adjoint();
}

Matrix pseudo_inverse(const Matrix& m, double rcond) {
  if (m.size() == 0) return m.adjoint();
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  const double cutoff = rcond * (sv.size() ? sv(0) : 0.0);
  RealVector inv = RealVector::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
  }
  return svd.matrixV() * inv.asDiagonal().toDenseMatrix().cast<Complex>() *
         svd.matrixU().adjoint();
}

Matrix matrix_power(const Matrix& m, std::int64_t k) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix_power: matrix must be square");
  }
  if (k < 0) throw std::invalid_argument("matrix_power: exponent must be >= 0");
  Matrix acc = Matrix::Identity(m.rows(), m.cols());
  Matrix base = m;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

OperatorMatrix::OperatorMatrix(std::vector<std::string> row_labels,
                               std::vector<std::string> col_labels,
                               int block_dim)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      block_dim_(block_dim) {
  if (block_dim_ < 1) {
    throw std::invalid_argument("OperatorMatrix: block dimension must be >= 1");
  }
  data_ = Matrix::Zero(block_rows() * block_dim_, block_cols() * block_dim_);
}

Eigen::Block<Matrix> OperatorMatrix::block(int i, int j) {
  return data_.block(i * block_dim_, j * block_dim_, block_dim_, block_dim_);
}

Eigen::Block<const Matrix> OperatorMatrix::block(int i, int j) const {
  return data_.block(i * block_dim_, j * block_dim_, block_dim_, block_dim_);
}

bool OperatorMatrix::is_hermitian(double tol) const {
  return row_labels_ == col_labels_ && gpd::is_hermitian(data_, tol);
}

}  // namespace gpd
