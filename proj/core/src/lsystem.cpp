#include "lsys/lsystem.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lsys/errors.hpp"

namespace lsys {

namespace {

bool all_finite(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex c = m.data()[i];
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

}  // namespace

LSystem::LSystem(Matrix main_operator, Vector channel, int direction)
    : main_(std::move(main_operator)), channel_(std::move(channel)), direction_(direction) {
  if (main_.rows() == 0 || main_.rows() != main_.cols()) {
    throw DimensionError("main operator must be a non-empty square matrix, got " +
                         std::to_string(main_.rows()) + "x" + std::to_string(main_.cols()));
  }
  if (channel_.size() != main_.rows()) {
    throw DimensionError("channel operator has " + std::to_string(channel_.size()) +
                         " rows; main operator has " + std::to_string(main_.rows()));
  }
  if (direction_ != 1 && direction_ != -1) {
    throw DomainError("directing operator must be +1 or -1");
  }
  if (!all_finite(main_) || !all_finite(channel_)) {
    throw DomainError("L-system has non-finite entries");
  }
}

Matrix LSystem::real_part() const { return (main_ + main_.adjoint()) / 2.0; }

Matrix LSystem::imaginary_part() const { return (main_ - main_.adjoint()) / (2.0 * kI); }

ValidationReport validate(const LSystem& sys, double tol) {
  const Matrix kjk = static_cast<double>(sys.direction()) * sys.channel() * sys.channel().adjoint();
  const double residual = (sys.imaginary_part() - kjk).norm();
  const double threshold = tol * (1.0 + sys.main_operator().norm());
  return {residual, threshold, residual <= threshold};
}

Vector solve_shifted(const Matrix& a, Complex z, const Vector& rhs) {
  const Eigen::Index n = a.rows();
  const Matrix shifted = a - z * Matrix::Identity(n, n);
  const double norm = shifted.cwiseAbs().rowwise().sum().maxCoeff();
  const double threshold = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * norm;

  const Eigen::PartialPivLU<Matrix> lu(shifted);
  const double smallest_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (smallest_pivot <= threshold) {
    throw SingularResolventError("resolvent is singular: z lies in the spectrum");
  }
  return lu.solve(rhs);
}

Complex transfer_function(const LSystem& sys, Complex z) {
  const Vector x = solve_shifted(sys.main_operator(), z, sys.channel());
  const Complex quad = sys.channel().dot(x);  // K* x
  return 1.0 - 2.0 * kI * quad * static_cast<double>(sys.direction());
}

Complex impedance_function(const LSystem& sys, Complex z) {
  const Vector x = solve_shifted(sys.real_part(), z, sys.channel());
  return sys.channel().dot(x);
}

}  // namespace lsys
