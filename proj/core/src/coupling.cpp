#include "lsys/coupling.hpp"

#include <string>

#include "lsys/elementary.hpp"
#include "lsys/errors.hpp"

namespace lsys {

namespace {

void require_couplable(const LSystem& sys, const char* which) {
  if (sys.direction() != 1) {
    throw IncompatibleError(std::string(which) + " factor has J = -1; coupling requires J = +1");
  }
  const ValidationReport report = validate(sys);
  if (!report.passed) {
    throw IncompatibleError(std::string(which) + " factor violates Im T = K J K* (residual " +
                            std::to_string(report.residual) + ")");
  }
}

}  // namespace

CoupledSystem couple(const LSystem& first, const LSystem& second) {
  require_couplable(first, "first");
  require_couplable(second, "second");

  const Eigen::Index n1 = first.dimension();
  const Eigen::Index n2 = second.dimension();
  Matrix t = Matrix::Zero(n1 + n2, n1 + n2);
  t.topLeftCorner(n1, n1) = first.main_operator();
  t.topRightCorner(n1, n2) = 2.0 * kI * first.channel() * second.channel().adjoint();
  t.bottomRightCorner(n2, n2) = second.main_operator();

  Vector k(n1 + n2);
  k << first.channel(), second.channel();

  return {LSystem(std::move(t), std::move(k), 1), first, second};
}

RationalFunction coupling_transfer(Complex lambda0, Complex mu0) {
  return elementary_transfer(lambda0) * elementary_transfer(mu0);
}

RationalFunction coupling_impedance(Complex lambda0, Complex mu0) {
  require_upper_half_plane(lambda0);
  require_upper_half_plane(mu0);
  const Complex sum = lambda0 + mu0;
  const Complex product = lambda0 * mu0;
  return RationalFunction(Polynomial{-product.imag(), sum.imag()},
                          Polynomial{-product.real(), sum.real(), -1.0});
}

CoupledSystem self_skew_coupling(Complex lambda0) {
  return couple(make_elementary(lambda0).system, make_skew_adjoint(lambda0).system);
}

RationalFunction self_skew_transfer(Complex lambda0) {
  require_upper_half_plane(lambda0);
  const double modulus2 = std::norm(lambda0);
  const Complex cross = 2.0 * kI * lambda0.imag();
  return RationalFunction(Polynomial{modulus2, -cross, -1.0}, Polynomial{modulus2, cross, -1.0});
}

RationalFunction self_skew_impedance(Complex lambda0) {
  require_upper_half_plane(lambda0);
  return RationalFunction(Polynomial{0.0, 2.0 * lambda0.imag()},
                          Polynomial{std::norm(lambda0), 0.0, -1.0});
}

}  // namespace lsys
