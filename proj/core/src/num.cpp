#include "lsys/num.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "lsys/errors.hpp"

namespace lsys {

Complex checked_complex(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("complex scalar has a non-finite component");
  }
  return z;
}

double relative_difference(Complex a, Complex b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(Complex c) { return Polynomial({c}); }

Polynomial Polynomial::linear(Complex root) { return Polynomial({-root, Complex{1.0, 0.0}}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Complex Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }

Complex Polynomial::leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

Complex Polynomial::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::magnitude_at(double r) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::trimmed(double rel_tol) const {
  double scale = 0.0;
  for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
  std::vector<Complex> c = coeffs_;
  while (!c.empty() && std::abs(c.back()) <= rel_tol * scale) c.pop_back();
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled_argument(Complex s) const {
  std::vector<Complex> c = coeffs_;
  Complex power{1.0, 0.0};
  for (auto& ck : c) {
    ck *= power;
    power *= s;
  }
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial& p) {
  std::vector<Complex> c = p.coeffs_;
  for (auto& ck : c) ck *= s;
  return Polynomial(std::move(c));
}

std::vector<Complex> polynomial_roots(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw DomainError("root finding needs a polynomial of degree >= 1");

  const Complex lead = p.leading();
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) companion(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) companion(k, n - 1) = -p.coeff(static_cast<std::size_t>(k)) / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw DegenerateError("companion eigenvalue iteration failed");

  const Polynomial dp = p.derivative();
  std::vector<Complex> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (auto& r : roots) {
    for (int iter = 0; iter < 3; ++iter) {
      const Complex slope = dp(r);
      if (slope == Complex{}) break;
      const Complex candidate = r - p(r) / slope;
      if (std::abs(p(candidate)) >= std::abs(p(r))) break;
      r = candidate;
    }
  }
  return roots;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DegenerateError("rational function with zero denominator");
  const Complex lead = den.leading();
  const Complex scale = Complex{1.0, 0.0} / lead;
  if (lead == Complex{1.0, 0.0}) {
    num_ = std::move(num);
    den_ = std::move(den);
  } else {
    num_ = scale * num;
    den_ = scale * den;
    // Force an exact monic leading coefficient; scale*lead may round.
    std::vector<Complex> d(den_.coeffs().begin(), den_.coeffs().end());
    d.back() = Complex{1.0, 0.0};
    den_ = Polynomial(std::move(d));
  }
}

RationalFunction RationalFunction::constant(Complex c) {
  return RationalFunction(Polynomial::constant(c), Polynomial::constant(1.0));
}

Complex RationalFunction::operator()(Complex z) const {
  const Complex d = den_(z);
  if (std::abs(d) < kPoleTolerance * den_.magnitude_at(std::abs(z))) {
    throw PoleError("rational function evaluated at a pole");
  }
  return num_(z) / d;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::span<const Complex> comparison_points() {
  static const std::array<Complex, 8> points = [] {
    std::array<Complex, 8> p{};
    std::mt19937_64 rng(0x5eedc0ffeeULL);
    std::uniform_real_distribution<double> re(-3.0, 3.0);
    std::uniform_real_distribution<double> im(0.25, 3.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      const double x = re(rng);
      const double y = im(rng);
      p[k] = Complex{x, k % 2 == 0 ? y : -y};
    }
    return p;
  }();
  return points;
}

double max_relative_difference(const RationalFunction& a, const RationalFunction& b) {
  double worst = 0.0;
  for (const Complex z : comparison_points()) {
    Complex va;
    Complex vb;
    try {
      va = a(z);
      vb = b(z);
    } catch (const PoleError&) {
      continue;
    }
    worst = std::max(worst, relative_difference(va, vb));
  }
  return worst;
}

namespace {

constexpr double kCancellationTolerance = 8.0 * std::numeric_limits<double>::epsilon();

}  // namespace

RationalFunction cayley_w_to_v(const RationalFunction& w) {
  const Polynomial& n = w.numerator();
  const Polynomial& d = w.denominator();
  Polynomial den = (n + d).trimmed(kCancellationTolerance);
  if (den.is_zero()) throw DegenerateError("Cayley transform: W + 1 vanishes identically");
  Polynomial num = (kI * (n - d)).trimmed(kCancellationTolerance);
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction cayley_v_to_w(const RationalFunction& v) {
  const Polynomial& n = v.numerator();
  const Polynomial& d = v.denominator();
  Polynomial den = (d + kI * n).trimmed(kCancellationTolerance);
  if (den.is_zero()) throw DegenerateError("Cayley transform: 1 + iV vanishes identically");
  Polynomial num = (d - kI * n).trimmed(kCancellationTolerance);
  return RationalFunction(std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------
// AtomicMeasure

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) {
    if (!std::isfinite(a.location) || !std::isfinite(a.weight)) {
      throw DomainError("atomic measure with non-finite atom");
    }
    if (!(a.weight > 0.0)) throw DomainError("atomic measure weights must be positive");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& x, const Atom& y) { return x.location < y.location; });
  for (std::size_t k = 1; k < atoms_.size(); ++k) {
    if (atoms_[k].location == atoms_[k - 1].location) {
      throw DomainError("atomic measure locations must be distinct");
    }
  }
}

Complex AtomicMeasure::stieltjes(Complex z) const {
  Complex acc{};
  for (const auto& a : atoms_) acc += a.weight / (a.location - z);
  return acc;
}

double AtomicMeasure::balance() const {
  double acc = 0.0;
  for (const auto& a : atoms_) acc += a.location * a.weight / (1.0 + a.location * a.location);
  return acc;
}

double AtomicMeasure::normalized_mass() const {
  double acc = 0.0;
  for (const auto& a : atoms_) acc += a.weight / (1.0 + a.location * a.location);
  return acc;
}

AtomicMeasure partial_fractions_real_poles(const RationalFunction& r) {
  const Polynomial& num = r.numerator();
  const Polynomial& den = r.denominator();
  if (num.is_zero()) return {};
  if (num.degree() >= den.degree()) {
    throw NotHerglotzAtomicError("partial fractions need deg(num) < deg(den)");
  }

  const std::vector<Complex> roots = polynomial_roots(den);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double scale = std::max(1.0, std::abs(roots[i]));
    if (std::abs(roots[i].imag()) > kRootTolerance * scale) {
      throw NotHerglotzAtomicError("pole off the real axis at " + std::to_string(roots[i].real()) +
                                   (roots[i].imag() < 0 ? "-" : "+") +
                                   std::to_string(std::abs(roots[i].imag())) + "i");
    }
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) <= kRootTolerance * scale) {
        throw NotHerglotzAtomicError("repeated pole near " + std::to_string(roots[i].real()));
      }
    }
  }

  const Polynomial dden = den.derivative();
  std::vector<Atom> atoms;
  atoms.reserve(roots.size());
  for (const Complex root : roots) {
    const double t = root.real();
    // Near t, r(z) ~ -w/(z - t), so w = -num(t)/den'(t).
    const Complex w = -num(Complex{t, 0.0}) / dden(Complex{t, 0.0});
    if (std::abs(w.imag()) > kResidueTolerance * std::max(1.0, std::abs(w)) || !(w.real() > 0.0)) {
      throw NotHerglotzAtomicError("non-positive weight at pole " + std::to_string(t));
    }
    atoms.push_back({t, w.real()});
  }
  return AtomicMeasure(std::move(atoms));
}

}  // namespace lsys
