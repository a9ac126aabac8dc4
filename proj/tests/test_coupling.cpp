#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lsys/analysis.hpp"
#include "lsys/coupling.hpp"
#include "lsys/elementary.hpp"
#include "lsys/errors.hpp"
#include "test_support.hpp"

using namespace lsys;
using lsys::testing::rel_err;
using lsys::testing::Sampler;

namespace {

/// W of the coupled elementary pair via back substitution on the 2x2 block.
Complex coupled_transfer_oracle(Complex l, Complex m, Complex z) {
  const double k1 = std::sqrt(l.imag());
  const double k2 = std::sqrt(m.imag());
  const auto [x1, x2] = lsys::testing::upper_triangular_solve(l, 2.0 * kI * k1 * k2, m, z, k1, k2);
  return 1.0 - 2.0 * kI * (k1 * x1 + k2 * x2);
}

}  // namespace

TEST_CASE("coupling block structure") {
  const CoupledSystem c = couple(make_elementary(kI).system, make_elementary(kI).system);
  const Matrix& t = c.system.main_operator();
  CHECK(t(0, 0) == kI);
  CHECK(t(0, 1) == 2.0 * kI);
  CHECK(t(1, 0) == Complex{});
  CHECK(t(1, 1) == kI);
  CHECK(c.system.channel()(0) == Complex{1.0, 0.0});
  CHECK(c.system.channel()(1) == Complex{1.0, 0.0});
  CHECK(validate(c.system).residual <= 1e-14);

  const Complex l{1.0, 1.0};
  const CoupledSystem c2 = couple(make_elementary(l).system, make_elementary(l).system);
  CHECK(c2.system.main_operator()(0, 0) == l);
  CHECK(c2.system.main_operator()(0, 1) == 2.0 * kI);
  CHECK(c2.system.main_operator()(1, 1) == l);
  CHECK(validate(c2.system).passed);

  // W(-i) = (1/(1 + 2i))^2 = (-3 - 4i)/25
  const Complex w = transfer_function(c2.system, -kI);
  CHECK(std::abs(w - Complex{-3.0, -4.0} / 25.0) <= 1e-15);
  CHECK(rel_err(w, coupled_transfer_oracle(l, l, -kI)) <= 1e-14);
}

TEST_CASE("coupling rejects incompatible factors") {
  const LSystem flipped(Matrix::Constant(1, 1, -kI), Vector::Constant(1, 1.0), -1);
  REQUIRE(validate(flipped).passed);
  CHECK_THROWS_AS(couple(flipped, make_elementary(kI).system), IncompatibleError);
  CHECK_THROWS_AS(couple(make_elementary(kI).system, flipped), IncompatibleError);

  const LSystem broken(Matrix::Constant(1, 1, 2.0 * kI), Vector::Constant(1, 1.0), 1);
  CHECK_THROWS_AS(couple(broken, make_elementary(kI).system), IncompatibleError);
}

TEST_CASE("closed-form coupling transfer") {
  const RationalFunction w = coupling_transfer(kI, kI);
  CHECK(max_relative_difference(w, RationalFunction(Polynomial{-1.0, 2.0 * kI, 1.0},
                                                    Polynomial{-1.0, -2.0 * kI, 1.0})) <= 1e-12);
  CHECK(w.numerator().degree() == 2);
  CHECK(w.denominator().degree() == 2);

  CHECK(std::abs(coupling_transfer(kI, 2.0 * kI)(-kI)) == 0.0);

  const Complex l{1.0, 1.0};
  const Complex m = 2.0 * kI;
  const Complex value = coupling_transfer(l, m)(-kI);
  CHECK(std::abs(std::abs(value) - 1.0 / (3.0 * std::sqrt(5.0))) <= 1e-15);
  CHECK(rel_err(value, transfer_function(couple(make_elementary(l).system, make_elementary(m).system).system,
                                         -kI)) <= 1e-13);

  CHECK_THROWS_AS(coupling_transfer(kI, -kI), DomainError);
}

TEST_CASE("closed-form coupling impedance") {
  CHECK(max_relative_difference(coupling_impedance(kI, kI),
                                RationalFunction(Polynomial{0.0, 2.0}, Polynomial{1.0, 0.0, -1.0})) <= 1e-12);

  for (const auto& [a1, a2] : {std::pair{0.5, 0.5}, std::pair{0.2, 0.9}, std::pair{3.0, 0.4}}) {
    const Complex v = coupling_impedance(a1 * kI, a2 * kI)(kI);
    CHECK(std::abs(v - kI * (a1 + a2) / (1.0 + a1 * a2)) <= 1e-15);
  }

  const Complex l{1.0, 1.0};
  const RationalFunction v = coupling_impedance(l, l);
  CHECK(max_relative_difference(v, RationalFunction(Polynomial{-2.0, 2.0}, Polynomial{0.0, 2.0, -1.0})) <=
        1e-12);
  const LSystem block = couple(make_elementary(l).system, make_elementary(l).system).system;
  for (const Complex z : comparison_points()) CHECK(rel_err(v(z), impedance_function(block, z)) <= 1e-12);

  CHECK_THROWS_AS(coupling_impedance(kI, {1.0, 0.0}), DomainError);
}

TEST_CASE("self-skew coupling") {
  SUBCASE("lambda0 = i") {
    const RationalFunction v = self_skew_impedance(kI);
    CHECK(max_relative_difference(v, RationalFunction(Polynomial{0.0, 2.0}, Polynomial{1.0, 0.0, -1.0})) <=
          1e-12);
    CHECK(std::abs(v(kI) - kI) <= 1e-15);
    CHECK(classify_at_i(v(kI)).tag == DonoghueClass::MHat);
  }
  SUBCASE("lambda0 = 1 + i") {
    const Complex l{1.0, 1.0};
    const CoupledSystem c = self_skew_coupling(l);
    CHECK(c.system.main_operator()(0, 0) == l);
    CHECK(c.system.main_operator()(0, 1) == l - std::conj(l));
    CHECK(c.system.main_operator()(1, 1) == -std::conj(l));
    const RationalFunction v = self_skew_impedance(l);
    CHECK(max_relative_difference(v, RationalFunction(Polynomial{0.0, 2.0}, Polynomial{2.0, 0.0, -1.0})) <=
          1e-12);
    CHECK(std::abs(v(kI) - 2.0 / 3.0 * kI) <= 1e-15);
  }
  SUBCASE("lambda0 = 2i against the resolvent") {
    const CoupledSystem c = self_skew_coupling(2.0 * kI);
    CHECK(std::abs(impedance_function(c.system, kI) - 0.8 * kI) <= 1e-14);
    CHECK(std::abs(self_skew_impedance(2.0 * kI)(kI) - 0.8 * kI) <= 1e-15);
  }
}

TEST_CASE("self-skew closed forms match resolvent, product and Cayley routes") {
  Sampler s(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex l = s.upper_half_plane();
    const CoupledSystem c = self_skew_coupling(l);
    const RationalFunction w = self_skew_transfer(l);
    const RationalFunction v = self_skew_impedance(l);
    CHECK(max_relative_difference(w, elementary_transfer(l) * skew_adjoint_transfer(l)) <= 1e-12);
    CHECK(max_relative_difference(v, cayley_w_to_v(w)) <= 1e-12);
    for (int p = 0; p < 5; ++p) {
      const Complex z = s.off_axis();
      CHECK(rel_err(w(z), transfer_function(c.system, z)) <= 1e-10);
      CHECK(rel_err(v(z), impedance_function(c.system, z)) <= 1e-10);
    }
  }
}

TEST_CASE("coupled transfer equals the product of factor transfers") {
  Sampler s(42);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex l = s.upper_half_plane();
    const Complex m = s.upper_half_plane();
    const LSystem e1 = make_elementary(l).system;
    const LSystem e2 = make_elementary(m).system;
    const LSystem block = couple(e1, e2).system;
    for (int p = 0; p < 5; ++p) {
      const Complex z = s.off_axis();
      const Complex product = transfer_function(e1, z) * transfer_function(e2, z);
      CHECK(rel_err(transfer_function(block, z), product) <= 1e-10);
      CHECK(rel_err(coupled_transfer_oracle(l, m, z), product) <= 1e-10);
      CHECK(rel_err(coupling_transfer(l, m)(z), product) <= 1e-10);
    }
  }
}

TEST_CASE("coupled impedance formula is the Cayley image of the product") {
  Sampler s(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex l = s.upper_half_plane();
    const Complex m = s.upper_half_plane();
    CHECK(max_relative_difference(coupling_impedance(l, m), cayley_w_to_v(coupling_transfer(l, m))) <= 1e-12);
  }
}

TEST_CASE("kappa is multiplicative under coupling") {
  Sampler s(44);
  for (int trial = 0; trial < 100; ++trial) {
    const double a1 = s.uniform(0.01, 0.99);
    const double a2 = s.uniform(0.01, 0.99);
    const DonoghueClassification c1 = classify_elementary(a1 * kI);
    const DonoghueClassification c2 = classify_elementary(a2 * kI);
    const DonoghueClassification c = classify_at_i(coupling_impedance(a1 * kI, a2 * kI)(kI));
    REQUIRE(c.tag == DonoghueClass::MHatKappa);
    CHECK(std::abs(*c.kappa - *c1.kappa * *c2.kappa) <= 1e-12);
  }
  const DonoghueClassification half = classify_at_i(coupling_impedance(0.5 * kI, 0.5 * kI)(kI));
  CHECK(*half.kappa == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("coupling order changes the block but not the transfer function") {
  Sampler s(45);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex l = s.upper_half_plane();
    const Complex m = s.upper_half_plane();
    const LSystem ab = couple(make_elementary(l).system, make_elementary(m).system).system;
    const LSystem ba = couple(make_elementary(m).system, make_elementary(l).system).system;
    CHECK(ab.main_operator() != ba.main_operator());
    for (int p = 0; p < 5; ++p) {
      const Complex z = s.off_axis();
      CHECK(rel_err(transfer_function(ab, z), transfer_function(ba, z)) <= 1e-10);
    }
  }
}

TEST_CASE("chained couplings multiply transfer functions") {
  Sampler s(46);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex l1 = s.upper_half_plane();
    const Complex l2 = s.upper_half_plane();
    const Complex l3 = s.upper_half_plane();
    const LSystem left =
        couple(couple(make_elementary(l1).system, make_elementary(l2).system).system, make_elementary(l3).system)
            .system;
    const LSystem right =
        couple(make_elementary(l1).system, couple(make_elementary(l2).system, make_elementary(l3).system).system)
            .system;
    CHECK(validate(left).passed);
    CHECK(validate(right).passed);
    const RationalFunction w = elementary_transfer(l1) * elementary_transfer(l2) * elementary_transfer(l3);
    for (int p = 0; p < 5; ++p) {
      const Complex z = s.off_axis();
      CHECK(rel_err(transfer_function(left, z), w(z)) <= 1e-10);
      CHECK(rel_err(transfer_function(right, z), w(z)) <= 1e-10);
    }
  }
}

TEST_CASE("self-skew impedance splits into two atoms at +-|lambda0|") {
  Sampler s(47);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex l = s.upper_half_plane();
    const AtomicMeasure m = partial_fractions_real_poles(self_skew_impedance(l));
    REQUIRE(m.size() == 2);
    CHECK(rel_err(m.atoms()[0].location, -std::abs(l)) <= 1e-12);
    CHECK(rel_err(m.atoms()[1].location, std::abs(l)) <= 1e-12);
    CHECK(rel_err(m.atoms()[0].weight, l.imag()) <= 1e-12);
    CHECK(rel_err(m.atoms()[1].weight, l.imag()) <= 1e-12);
  }
}
