#include "lsys/analysis.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lsys/elementary.hpp"
#include "lsys/errors.hpp"
#include "lsys/format.hpp"

namespace lsys {

ExtendedReal ExtendedReal::finite(double value) {
  if (!std::isfinite(value)) throw RangeError("ExtendedReal::finite given a non-finite value");
  return ExtendedReal(value, false);
}

double ExtendedReal::value() const {
  if (infinite_) throw RangeError("value() of an infinite extended real");
  return value_;
}

double ExtendedReal::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
  if (a.infinite_ || b.infinite_) return ExtendedReal::infinity();
  return ExtendedReal::finite(a.value_ + b.value_);
}

std::string_view to_string(DonoghueClass tag) {
  switch (tag) {
    case DonoghueClass::MHat:
      return "M_hat";
    case DonoghueClass::MHatKappa:
      return "M_hat_kappa";
    case DonoghueClass::MHatKappaInverse:
      return "M_hat_kappa_inverse";
    case DonoghueClass::None:
      break;
  }
  return "none";
}

DonoghueClassification classify_at_i(Complex v_at_i, double tol) {
  const double a = v_at_i.imag();
  if (!(a > 0.0)) throw NotHerglotzError("Im V(i) must be positive");
  if (std::abs(v_at_i.real()) > tol) return {DonoghueClass::None, std::nullopt, a};
  if (std::abs(a - 1.0) <= tol) return {DonoghueClass::MHat, 0.0, a};
  if (a < 1.0) return {DonoghueClass::MHatKappa, (1.0 - a) / (1.0 + a), a};
  return {DonoghueClass::MHatKappaInverse, (a - 1.0) / (1.0 + a), a};
}

DonoghueClassification classify_elementary(Complex lambda0) {
  require_upper_half_plane(lambda0);
  return classify_at_i(lambda0.imag() / (lambda0.real() - kI));
}

ExtendedReal entropy_from_transfer(Complex w_at_minus_i) {
  const double modulus = std::abs(checked_complex(w_at_minus_i));
  if (modulus <= kZeroTransferTolerance) return ExtendedReal::infinity();
  return ExtendedReal::finite(-std::log(modulus));
}

ExtendedReal c_entropy(const LSystem& sys) { return entropy_from_transfer(transfer_function(sys, -kI)); }

namespace {

// (Re l)^2 + (1 + Im l)^2 and (Re l)^2 + (1 - Im l)^2
struct EntropyTerms {
  double plus;
  double minus;
};

EntropyTerms entropy_terms(Complex lambda0) {
  require_upper_half_plane(lambda0);
  const double x2 = lambda0.real() * lambda0.real();
  const double y = lambda0.imag();
  return {x2 + (1.0 + y) * (1.0 + y), x2 + (1.0 - y) * (1.0 - y)};
}

}  // namespace

ExtendedReal elementary_entropy(Complex lambda0) {
  const EntropyTerms t = entropy_terms(lambda0);
  if (t.minus == 0.0) return ExtendedReal::infinity();
  return ExtendedReal::finite(0.5 * std::log(t.plus / t.minus));
}

double elementary_dissipation(Complex lambda0) {
  const EntropyTerms t = entropy_terms(lambda0);
  return 4.0 * lambda0.imag() / t.plus;
}

double dissipation_from_entropy(ExtendedReal entropy) {
  if (entropy.is_infinite()) return 1.0;
  return -std::expm1(-2.0 * entropy.value());
}

ExtendedReal compose_entropy(ExtendedReal s1, ExtendedReal s2) { return s1 + s2; }

double compose_dissipation(double d1, double d2) {
  if (!(d1 >= 0.0 && d1 <= 1.0) || !(d2 >= 0.0 && d2 <= 1.0)) {
    throw RangeError("dissipation coefficients must lie in [0, 1]");
  }
  return d1 + d2 - d1 * d2;
}

ExtendedReal coupling_entropy(Complex lambda0, Complex mu0) {
  const EntropyTerms l = entropy_terms(lambda0);
  const EntropyTerms m = entropy_terms(mu0);
  if (l.minus == 0.0 || m.minus == 0.0) return ExtendedReal::infinity();
  return ExtendedReal::finite(0.5 * std::log((l.plus / l.minus) * (m.plus / m.minus)));
}

double coupling_dissipation(Complex lambda0, Complex mu0) {
  const EntropyTerms l = entropy_terms(lambda0);
  const EntropyTerms m = entropy_terms(mu0);
  const double numerator = 4.0 * lambda0.imag() * (std::norm(mu0) + 1.0) +
                           4.0 * mu0.imag() * (std::norm(lambda0) + 1.0);
  return numerator / (l.plus * m.plus);
}

namespace {

double grid_point(double lo, double hi, std::size_t k, std::size_t n) {
  const double last = static_cast<double>(n - 1);
  const double kk = static_cast<double>(k);
  return (lo * (last - kk) + hi * kk) / last;
}

}  // namespace

EntropyGrid entropy_surface(double x_min, double x_max, double y_min, double y_max,
                            std::size_t nx, std::size_t ny) {
  if (!(y_min > 0.0)) throw DomainError("entropy surface needs y_min > 0");
  if (!(x_max >= x_min) || !(y_max >= y_min) || !std::isfinite(x_min) || !std::isfinite(x_max) ||
      !std::isfinite(y_max)) {
    throw DomainError("entropy surface bounds must be finite and ordered");
  }
  if (nx < 2 || ny < 2) throw DomainError("entropy surface needs at least 2 points per axis");

  EntropyGrid grid;
  grid.xs.reserve(nx);
  grid.ys.reserve(ny);
  for (std::size_t i = 0; i < nx; ++i) grid.xs.push_back(grid_point(x_min, x_max, i, nx));
  for (std::size_t j = 0; j < ny; ++j) grid.ys.push_back(grid_point(y_min, y_max, j, ny));

  grid.values.reserve(nx * ny);
  for (const double y : grid.ys) {
    for (const double x : grid.xs) grid.values.push_back(elementary_entropy({x, y}));
  }
  return grid;
}

std::string entropy_surface_csv(const EntropyGrid& grid) {
  std::ostringstream out;
  out << "x,y,S,D\n";
  for (std::size_t row = 0; row < grid.ys.size(); ++row) {
    for (std::size_t col = 0; col < grid.xs.size(); ++col) {
      const ExtendedReal& s = grid.at(row, col);
      out << format_real(grid.xs[col]) << ',' << format_real(grid.ys[row]) << ','
          << format_real(s) << ','
          << format_real(elementary_dissipation({grid.xs[col], grid.ys[row]})) << '\n';
    }
  }
  return out.str();
}

}  // namespace lsys
