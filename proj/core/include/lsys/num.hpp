#pragma once

// Complex polynomials, rational functions and atomic measures.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lsys {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Throws DomainError unless both components are finite.
Complex checked_complex(Complex z);

/// |a - b| / max(|a|, |b|); zero when a == b.
double relative_difference(Complex a, Complex b);

/// Polynomial with complex coefficients in ascending degree. The zero
/// polynomial holds no coefficients; otherwise the leading coefficient is
/// nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial constant(Complex c);
  /// z - root
  static Polynomial linear(Complex root);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] std::span<const Complex> coeffs() const { return coeffs_; }
  [[nodiscard]] Complex coeff(std::size_t k) const;
  [[nodiscard]] Complex leading() const;

  /// Horner evaluation.
  [[nodiscard]] Complex operator()(Complex z) const;
  /// sum_k |c_k| r^k, the magnitude scale of an evaluation at |z| = r.
  [[nodiscard]] double magnitude_at(double r) const;

  [[nodiscard]] Polynomial derivative() const;
  /// Drops leading coefficients with |c| <= rel_tol * max_k |c_k|.
  [[nodiscard]] Polynomial trimmed(double rel_tol) const;
  /// Substitutes z -> s*z.
  [[nodiscard]] Polynomial scaled_argument(Complex s) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

/// Roots of a polynomial of degree >= 1 via eigenvalues of its companion
/// matrix, polished by guarded Newton steps.
std::vector<Complex> polynomial_roots(const Polynomial& p);

/// num/den with den normalized to be monic. No common-factor cancellation is
/// attempted.
class RationalFunction {
 public:
  /// Throws DegenerateError if den is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(Complex c);

  [[nodiscard]] const Polynomial& numerator() const { return num_; }
  [[nodiscard]] const Polynomial& denominator() const { return den_; }

  /// Throws PoleError when |den(z)| < kPoleTolerance * sum_k |d_k| |z|^k.
  [[nodiscard]] Complex operator()(Complex z) const;

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

inline constexpr double kPoleTolerance = 1e-12;
inline constexpr double kRootTolerance = 1e-8;
inline constexpr double kResidueTolerance = 1e-8;

/// Fixed, seeded sample points in the open upper and lower half-planes used to
/// compare rational functions by evaluation.
std::span<const Complex> comparison_points();

/// Largest relative difference of a and b over comparison_points(), skipping
/// points where either side has a pole.
double max_relative_difference(const RationalFunction& a, const RationalFunction& b);

/// V = i (W - 1)/(W + 1). Throws DegenerateError if num_W + den_W vanishes.
RationalFunction cayley_w_to_v(const RationalFunction& w);
/// W = (1 - iV)/(1 + iV). Throws DegenerateError if den_V + i num_V vanishes.
RationalFunction cayley_v_to_w(const RationalFunction& v);

struct Atom {
  double location;
  double weight;
};

/// Finite positive measure with pairwise distinct atoms, kept sorted by
/// location.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms);

  [[nodiscard]] std::span<const Atom> atoms() const { return atoms_; }
  [[nodiscard]] std::size_t size() const { return atoms_.size(); }

  /// sum_j w_j / (t_j - z)
  [[nodiscard]] Complex stieltjes(Complex z) const;
  /// sum_j t_j w_j / (1 + t_j^2); zero for measures of the normalized classes.
  [[nodiscard]] double balance() const;
  /// sum_j w_j / (1 + t_j^2), equal to Im M(i) when balance() vanishes.
  [[nodiscard]] double normalized_mass() const;

 private:
  std::vector<Atom> atoms_;
};

/// Atoms (t_j, w_j) with r(z) = sum_j w_j/(t_j - z). Requires deg num < deg den,
/// simple real poles and positive real weights; otherwise throws
/// NotHerglotzAtomicError.
AtomicMeasure partial_fractions_real_poles(const RationalFunction& r);

}  // namespace lsys
