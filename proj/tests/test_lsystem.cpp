#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lsys/errors.hpp"
#include "lsys/lsystem.hpp"
#include "test_support.hpp"

using namespace lsys;
using lsys::testing::rel_err;
using lsys::testing::Sampler;

namespace {

LSystem scalar(Complex t, Complex k, int j = 1) {
  return LSystem(Matrix::Constant(1, 1, t), Vector::Constant(1, k), j);
}

/// T = A + i J K K* with A Hermitian satisfies Im T = K J K* by construction.
LSystem random_system(Sampler& s, Eigen::Index n, int j) {
  Matrix b(n, n);
  Vector k(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    k(r) = {s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0)};
    for (Eigen::Index c = 0; c < n; ++c) b(r, c) = {s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0)};
  }
  const Matrix a = (b + b.adjoint()) / 2.0;
  return LSystem(a + kI * static_cast<double>(j) * k * k.adjoint(), k, j);
}

}  // namespace

TEST_CASE("construction checks shapes and directing operator") {
  CHECK_THROWS_AS(LSystem(Matrix::Zero(2, 3), Vector::Zero(2), 1), DimensionError);
  CHECK_THROWS_AS(LSystem(Matrix::Zero(2, 2), Vector::Zero(3), 1), DimensionError);
  CHECK_THROWS_AS(LSystem(Matrix::Zero(0, 0), Vector::Zero(0), 1), DimensionError);
  CHECK_THROWS_AS(LSystem(Matrix::Zero(1, 1), Vector::Zero(1), 2), DomainError);
  Matrix bad = Matrix::Zero(1, 1);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(LSystem(bad, Vector::Zero(1), 1), DomainError);
}

TEST_CASE("colligation check") {
  const ValidationReport ok = validate(scalar(kI, 1.0));
  CHECK(ok.residual == 0.0);
  CHECK(ok.passed);

  const ValidationReport broken = validate(scalar(2.0 * kI, 1.0));
  CHECK(broken.residual == doctest::Approx(1.0));
  CHECK_FALSE(broken.passed);

  // Coupling block for lambda0 = mu0 = i, assembled by hand.
  Matrix t(2, 2);
  t << kI, 2.0 * kI, 0.0, kI;
  Vector k(2);
  k << 1.0, 1.0;
  const ValidationReport coupled = validate(LSystem(t, k, 1));
  CHECK(coupled.residual <= 1e-14);
  CHECK(coupled.passed);

  // J = -1 flips the sign of the channel term.
  CHECK(validate(scalar(-kI, 1.0, -1)).passed);
  CHECK_FALSE(validate(scalar(kI, 1.0, -1)).passed);
}

TEST_CASE("transfer function through the resolvent") {
  const Complex w = transfer_function(scalar({1.0, 1.0}, 1.0), -kI);
  CHECK(std::abs(w - 1.0 / Complex{1.0, 2.0}) < 1e-15);
  CHECK(std::abs(std::abs(w) - 1.0 / std::sqrt(5.0)) < 1e-15);

  CHECK_THROWS_AS(transfer_function(scalar(kI, 1.0), kI), SingularResolventError);

  // (z + i)/(z - i) at 2i, written out independently.
  const Complex z = 2.0 * kI;
  CHECK(rel_err(transfer_function(scalar(kI, 1.0), z), (z + kI) / (z - kI)) <= 1e-15);
  CHECK(std::abs(transfer_function(scalar(kI, 1.0), z) - 3.0) < 1e-15);
}

TEST_CASE("impedance function through the resolvent of Re T") {
  CHECK(std::abs(impedance_function(scalar({1.0, 1.0}, 1.0), kI) - Complex{0.5, 0.5}) < 1e-15);
  CHECK(std::abs(impedance_function(scalar(kI, 1.0), kI) - kI) < 1e-15);
  CHECK_THROWS_AS(impedance_function(scalar(kI, 1.0), 0.0), SingularResolventError);
}

TEST_CASE("singular resolvent detection on a defective block") {
  Matrix t(2, 2);
  t << kI, 2.0 * kI, 0.0, kI;
  Vector k(2);
  k << 1.0, 1.0;
  const LSystem sys(t, k, 1);
  CHECK_THROWS_AS(transfer_function(sys, kI), SingularResolventError);
  CHECK_NOTHROW(transfer_function(sys, kI + Complex{1e-6, 0.0}));
}

TEST_CASE("Cayley consistency of resolvent transfer and impedance") {
  Sampler s(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int j = trial % 2 == 0 ? 1 : -1;
    const LSystem sys = random_system(s, 1 + trial % 4, j);
    REQUIRE(validate(sys).passed);
    for (int p = 0; p < 5; ++p) {
      const Complex z = s.off_axis();
      const Complex w = transfer_function(sys, z);
      const Complex v = impedance_function(sys, z);
      CHECK(rel_err(kI * (w - 1.0) / (w + 1.0) * static_cast<double>(j), v) <= 1e-10);
    }
  }
}

TEST_CASE("impedance of J = +1 systems is Herglotz") {
  Sampler s(22);
  for (int trial = 0; trial < 20; ++trial) {
    const LSystem sys = random_system(s, 1 + trial % 5, 1);
    for (int p = 0; p < 50; ++p) CHECK(impedance_function(sys, s.in_upper()).imag() > 0.0);
  }
}
