#pragma once

#include <Eigen/Dense>

#include "lsys/num.hpp"

namespace lsys {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Canonical L-system (T, K, J) with state space C^n and a one-dimensional
/// input-output space. J is +1 or -1.
///
/// Construction checks shapes and finiteness only; whether Im T = K J K* holds
/// is reported by validate().
class LSystem {
 public:
  /// Throws DimensionError if T is not square or K does not match it, and
  /// DomainError for J outside {+1, -1} or non-finite entries.
  LSystem(Matrix main_operator, Vector channel, int direction = 1);

  [[nodiscard]] const Matrix& main_operator() const { return main_; }
  [[nodiscard]] const Vector& channel() const { return channel_; }
  [[nodiscard]] int direction() const { return direction_; }
  [[nodiscard]] Eigen::Index dimension() const { return main_.rows(); }

  /// (T + T*)/2
  [[nodiscard]] Matrix real_part() const;
  /// (T - T*)/(2i)
  [[nodiscard]] Matrix imaginary_part() const;

 private:
  Matrix main_;
  Vector channel_;
  int direction_;
};

inline constexpr double kColligationTolerance = 1e-9;

struct ValidationReport {
  double residual;   // ||Im T - K J K*||_F
  double threshold;  // tol * (1 + ||T||_F)
  bool passed;
};

ValidationReport validate(const LSystem& sys, double tol = kColligationTolerance);

/// W(z) = 1 - 2i K*(T - zI)^{-1} K J. Throws SingularResolventError when z is
/// numerically in the spectrum of T.
Complex transfer_function(const LSystem& sys, Complex z);

/// V(z) = K*(Re T - zI)^{-1} K. Throws SingularResolventError when z is
/// numerically in the spectrum of Re T.
Complex impedance_function(const LSystem& sys, Complex z);

/// Solves (A - zI) x = rhs by LU with partial pivoting. A pivot of magnitude
/// <= n * eps * ||A - zI||_inf is treated as singular.
Vector solve_shifted(const Matrix& a, Complex z, const Vector& rhs);

}  // namespace lsys
