#include "ideq/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ideq {

namespace {

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

void check_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw ValidationError("matrix is not square");
  }
  double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    std::ostringstream os;
    os << "matrix is not Hermitian (max deviation " << dev << ")";
    throw ValidationError(os.str());
  }
}

}  // namespace

ComplexMatrix boxplus(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rows = std::max(a.rows(), b.rows());
  const Eigen::Index cols = std::max(a.cols(), b.cols());
  ComplexMatrix out = ComplexMatrix::Zero(rows, cols);
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.topLeftCorner(b.rows(), b.cols()) += b;
  return out;
}

ComplexMatrix boxplus(const ComplexMatrix& a, const ComplexMatrix& b,
                      const ComplexMatrix& c) {
  return boxplus(boxplus(a, b), c);
}

ProbVec::ProbVec(std::vector<double> values, double tol) : v_(std::move(values)) {
  if (v_.empty()) {
    throw ValidationError("probability vector is empty");
  }
  double sum = 0.0;
  for (double x : v_) {
    if (!(x >= 0.0)) {
      throw ValidationError("probability vector has a negative entry");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > tol) {
    std::ostringstream os;
    os << "probability vector sums to " << sum << ", not 1";
    throw ValidationError(os.str());
  }
}

ProbVec ProbVec::uniform(int n) {
  if (n <= 0) throw ValidationError("uniform pmf needs n >= 1");
  return ProbVec(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

ProbVec ProbVec::point_mass(int n, int i) {
  if (n <= 0 || i < 0 || i >= n) {
    throw ValidationError("point mass index out of range");
  }
  std::vector<double> v(static_cast<size_t>(n), 0.0);
  v[static_cast<size_t>(i)] = 1.0;
  return ProbVec(std::move(v));
}

DensityOperator::DensityOperator(ComplexMatrix m, double tol) : m_(std::move(m)) {
  check_hermitian(m_, tol);
  double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    std::ostringstream os;
    os << "density operator trace is " << tr << ", not 1";
    throw ValidationError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m_, Eigen::EigenvaluesOnly);
  double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < -tol) {
    std::ostringstream os;
    os << "density operator has eigenvalue " << min_ev << " below -tolerance";
    throw ValidationError(os.str());
  }
}

DensityOperator DensityOperator::pure(const ComplexVector& psi, double tol) {
  double n2 = psi.squaredNorm();
  if (std::abs(n2 - 1.0) > tol) {
    std::ostringstream os;
    os << "pure state has squared norm " << n2 << ", not 1";
    throw ValidationError(os.str());
  }
  DensityOperator rho;
  rho.m_ = psi * psi.adjoint();
  return rho;
}

DensityOperator DensityOperator::maximally_mixed(int d) {
  if (d <= 0) throw ValidationError("dimension must be >= 1");
  DensityOperator rho;
  rho.m_ = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  return rho;
}

DensityOperator DensityOperator::basis_projector(int d, int k) {
  if (d <= 0 || k < 0 || k >= d) {
    throw ValidationError("basis projector index out of range");
  }
  DensityOperator rho;
  rho.m_ = ComplexMatrix::Zero(d, d);
  rho.m_(k, k) = 1.0;
  return rho;
}

std::vector<double> DensityOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m_, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(),
                         es.eigenvalues().data() + es.eigenvalues().size());
  for (double& x : ev) {
    if (x < 0.0) x = 0.0;  // ctor already rejected anything below -tol
  }
  return ev;
}

double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) h += entropy_term(x);
  return h;
}

double shannon_entropy(const ProbVec& p) { return shannon_entropy(p.values()); }

double von_neumann_entropy(const DensityOperator& rho) {
  double h = 0.0;
  for (double ev : rho.eigenvalues()) h += entropy_term(ev);
  return h;
}

double von_neumann_entropy(const ComplexMatrix& m, double tol) {
  return von_neumann_entropy(DensityOperator(m, tol));
}

double trace_norm(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ValidationError("trace norm needs a square matrix");
  }
  double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev <= kStructuralTol) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

ComplexMatrix shift_operator(int d) {
  if (d <= 0) throw ValidationError("dimension must be >= 1");
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
  return x;
}

ComplexMatrix phase_operator(int d) {
  if (d <= 0) throw ValidationError("dimension must be >= 1");
  ComplexMatrix z = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    double ang = 2.0 * std::numbers::pi * k / d;
    z(k, k) = Complex(std::cos(ang), std::sin(ang));
  }
  return z;
}

ComplexVector bell_state(int d, int i, int j) {
  if (d <= 0) throw ValidationError("dimension must be >= 1");
  i = ((i % d) + d) % d;
  j = ((j % d) + d) % d;
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int b = 0; b < d; ++b) {
    int a = (b + i) % d;
    double ang = 2.0 * std::numbers::pi * b * j / d;
    psi(static_cast<Eigen::Index>(a) * d + b) =
        amp * Complex(std::cos(ang), std::sin(ang));
  }
  return psi;
}

}  // namespace ideq
