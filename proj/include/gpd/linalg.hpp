#ifndef GPD_LINALG_HPP_
#define GPD_LINALG_HPP_

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace gpd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline Matrix identity(int d) { return Matrix::Identity(d, d); }

/// Largest singular value.
double operator_norm(const Matrix& m);

inline double frobenius_norm(const Matrix& m) { return m.norm(); }

/// ||M - M*|| <= tol * max(1, ||M||), both in operator norm.
bool is_hermitian(const Matrix& m, double tol = 1e-9);

struct PsdVerdict {
  bool positive = false;
  double min_eigenvalue = 0.0;
  double scale = 1.0;  // max(1, ||M||), the threshold reference
};

/// Spectral test: positive iff the smallest eigenvalue of the Hermitian
/// part is >= -tol * max(1, ||M||). Throws std::invalid_argument when M is
/// not Hermitian within the same relative tolerance.
PsdVerdict psd_check(const Matrix& m, double tol = 1e-9);

/// Principal square root through the spectral decomposition. Eigenvalues in
/// [-tol * max(1, ||M||), 0) are clamped to zero; anything lower throws
/// std::domain_error.
Matrix hermitian_sqrt(const Matrix& m, double tol = 1e-9);

/// Moore-Penrose pseudoinverse; singular values <= rcond * sigma_max are
/// treated as zero.
Matrix pseudo_inverse(const Matrix& m, double rcond = 1e-12);

/// Integer matrix power with exponent >= 0.
Matrix matrix_power(const Matrix& m, std::int64_t k);

/// Square matrix of operator blocks with named rows and columns; all blocks
/// share one dimension. Backing storage is a single dense matrix.
class OperatorMatrix {
 public:
  OperatorMatrix() : block_dim_(1) {}  // empty block grid
  OperatorMatrix(std::vector<std::string> row_labels,
                 std::vector<std::string> col_labels, int block_dim);

  int block_rows() const { return static_cast<int>(row_labels_.size()); }
  int block_cols() const { return static_cast<int>(col_labels_.size()); }
  int block_dim() const { return block_dim_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  Eigen::Block<Matrix> block(int i, int j);
  Eigen::Block<const Matrix> block(int i, int j) const;

  Matrix& data() { return data_; }
  const Matrix& data() const { return data_; }

  bool is_hermitian(double tol = 1e-9) const;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  int block_dim_;
  Matrix data_;
};

}  // namespace gpd

#endif  // GPD_LINALG_HPP_
