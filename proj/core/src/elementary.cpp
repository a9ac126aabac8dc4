#include "lsys/elementary.hpp"

#include <cmath>

#include "lsys/errors.hpp"

namespace lsys {

namespace {

LSystem scalar_system(Complex main, double channel) {
  return LSystem(Matrix::Constant(1, 1, main), Vector::Constant(1, Complex{channel, 0.0}), 1);
}

}  // namespace

Complex require_upper_half_plane(Complex lambda0) {
  checked_complex(lambda0);
  if (!(lambda0.imag() > 0.0)) {
    throw DomainError("lambda0 must lie in the open upper half-plane (Im lambda0 > 0)");
  }
  return lambda0;
}

ElementarySystem make_elementary(Complex lambda0) {
  require_upper_half_plane(lambda0);
  return {lambda0, scalar_system(lambda0, std::sqrt(lambda0.imag()))};
}

SkewAdjointSystem make_skew_adjoint(Complex lambda0) {
  require_upper_half_plane(lambda0);
  return {lambda0, scalar_system(-std::conj(lambda0), std::sqrt(lambda0.imag()))};
}

RationalFunction elementary_transfer(Complex lambda0) {
  require_upper_half_plane(lambda0);
  return RationalFunction(Polynomial{std::conj(lambda0), -1.0}, Polynomial{lambda0, -1.0});
}

RationalFunction elementary_impedance(Complex lambda0) {
  require_upper_half_plane(lambda0);
  return RationalFunction(Polynomial::constant(lambda0.imag()), Polynomial{lambda0.real(), -1.0});
}

RationalFunction skew_adjoint_transfer(Complex lambda0) {
  require_upper_half_plane(lambda0);
  return RationalFunction(Polynomial{lambda0, 1.0}, Polynomial{std::conj(lambda0), 1.0});
}

RationalFunction skew_adjoint_impedance(Complex lambda0) {
  require_upper_half_plane(lambda0);
  return RationalFunction(Polynomial::constant(-lambda0.imag()), Polynomial{lambda0.real(), 1.0});
}

}  // namespace lsys
