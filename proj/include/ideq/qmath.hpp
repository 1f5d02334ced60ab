#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace ideq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Default tolerance for structural checks (Hermiticity, trace, PSD slack).
inline constexpr double kStructuralTol = 1e-9;
// Default tolerance for probability normalization.
inline constexpr double kProbTol = 1e-12;

// Thrown when a value fails domain validation (shapes, normalization,
// positivity, parameter ranges).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Direct sum with zero padding: both operands are zero-padded to the
// elementwise-max shape, then added. Associative and commutative.
ComplexMatrix boxplus(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix boxplus(const ComplexMatrix& a, const ComplexMatrix& b,
                      const ComplexMatrix& c);

// Probability vector: nonnegative entries summing to 1 within tol.
class ProbVec {
 public:
  explicit ProbVec(std::vector<double> values, double tol = kProbTol);
  static ProbVec uniform(int n);
  // Point mass on 0-based index i.
  static ProbVec point_mass(int n, int i);

  int size() const { return static_cast<int>(v_.size()); }
  double operator[](int i) const { return v_[static_cast<size_t>(i)]; }
  const std::vector<double>& values() const { return v_; }

 private:
  std::vector<double> v_;
};

// Density operator: Hermitian, PSD, unit trace within tol. Eigenvalues in
// [-tol, 0) are clipped to 0; anything below -tol is rejected.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix m, double tol = kStructuralTol);
  static DensityOperator pure(const ComplexVector& psi,
                              double tol = kStructuralTol);
  static DensityOperator maximally_mixed(int d);
  // |k><k| in dimension d, 0-based k.
  static DensityOperator basis_projector(int d, int k);

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  // Eigenvalues ascending, negatives within tolerance clipped to 0.
  std::vector<double> eigenvalues() const;

 private:
  DensityOperator() = default;
  ComplexMatrix m_;
};

// Shannon entropy in bits; 0 log 0 = 0.
double shannon_entropy(const ProbVec& p);
double shannon_entropy(const std::vector<double>& p);

// Von Neumann entropy in bits of a density operator.
double von_neumann_entropy(const DensityOperator& rho);
// Same, for a raw Hermitian PSD unit-trace matrix (validated).
double von_neumann_entropy(const ComplexMatrix& m, double tol = kStructuralTol);

// Trace norm (sum of singular values) of a square matrix.
double trace_norm(const ComplexMatrix& m);

// Cyclic shift X|k> = |k+1 mod d> on the computational basis (0-based).
ComplexMatrix shift_operator(int d);
// Phase Z|k> = exp(i 2 pi k / d)|k> (0-based k).
ComplexMatrix phase_operator(int d);

// Generalized Bell state |phi_{i,j}> = (X^i Z^j (x) I) |phi_{0,0}> where
// |phi_{0,0}> = d^{-1/2} sum_k |k>|k>. Component on |a>|b> sits at index
// a*d + b. Indices i, j are 0-based residues mod d.
ComplexVector bell_state(int d, int i, int j);

}  // namespace ideq
