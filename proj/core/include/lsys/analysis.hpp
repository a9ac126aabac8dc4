#pragma once

// Donoghue-class membership, c-entropy and dissipation coefficient.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsys/lsystem.hpp"
#include "lsys/num.hpp"

namespace lsys {

/// Extended real: a finite value or +infinity. Infinity is a
/// distinct state, never a large double.
class ExtendedReal {
 public:
  static ExtendedReal finite(double value);
  static ExtendedReal infinity() { return ExtendedReal(0.0, true); }

  [[nodiscard]] bool is_infinite() const { return infinite_; }
  /// Throws RangeError on infinity.
  [[nodiscard]] double value() const;
  /// The value, or std::numeric_limits<double>::infinity() for +inf.
  [[nodiscard]] double to_double() const;

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b);
  friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

 private:
  ExtendedReal(double value, bool infinite) : value_(value), infinite_(infinite) {}
  double value_;
  bool infinite_;
};

enum class DonoghueClass { MHat, MHatKappa, MHatKappaInverse, None };

std::string_view to_string(DonoghueClass tag);

struct DonoghueClassification {
  DonoghueClass tag;
  std::optional<double> kappa;  // empty when tag == None
  double a;                     // Im V(i)
};

inline constexpr double kClassTolerance = 1e-9;
inline constexpr double kZeroTransferTolerance = 1e-300;

/// Classifies a Herglotz function by its value at i. Throws NotHerglotzError
/// if Im v_at_i <= 0.
DonoghueClassification classify_at_i(Complex v_at_i, double tol = kClassTolerance);

/// Classification of the elementary impedance Im l / (Re l - z).
DonoghueClassification classify_elementary(Complex lambda0);

/// -ln |w| for a transfer value w = W(-i); +inf when |w| <= 1e-300.
ExtendedReal entropy_from_transfer(Complex w_at_minus_i);

/// S = -ln |W(-i)| through the resolvent; +inf when |W(-i)| <= 1e-300.
ExtendedReal c_entropy(const LSystem& sys);

/// S = 1/2 ln[((Re l)^2 + (1 + Im l)^2) / ((Re l)^2 + (1 - Im l)^2)]
ExtendedReal elementary_entropy(Complex lambda0);

/// D = 4 Im l / ((Re l)^2 + (1 + Im l)^2)
double elementary_dissipation(Complex lambda0);

/// D = 1 - exp(-2S); 1 for S = +inf.
double dissipation_from_entropy(ExtendedReal entropy);

/// S1 + S2 with +inf absorbing.
ExtendedReal compose_entropy(ExtendedReal s1, ExtendedReal s2);

/// D1 + D2 - D1 D2. Throws RangeError unless both lie in [0, 1].
double compose_dissipation(double d1, double d2);

/// Sum of the two elementary entropies written in the defining numbers.
ExtendedReal coupling_entropy(Complex lambda0, Complex mu0);

/// [4 Im l (|m|^2 + 1) + 4 Im m (|l|^2 + 1)] / ([(Re l)^2 + (1 + Im l)^2][(Re m)^2 + (1 + Im m)^2])
double coupling_dissipation(Complex lambda0, Complex mu0);

/// Elementary c-entropy sampled over lambda0 = x + iy, row-major with rows
/// indexed by y.
struct EntropyGrid {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<ExtendedReal> values;

  [[nodiscard]] const ExtendedReal& at(std::size_t row, std::size_t col) const {
    return values[row * xs.size() + col];
  }
};

/// Grid points are x_i = (x_min (nx-1-i) + x_max i)/(nx-1), likewise for y.
/// Throws DomainError if y_min <= 0, y_max < y_min, x_max < x_min or a count is below 2.
EntropyGrid entropy_surface(double x_min, double x_max, double y_min, double y_max,
                            std::size_t nx, std::size_t ny);

/// "x,y,S,D" header, one LF-terminated row per cell, "inf" for +infinity.
std::string entropy_surface_csv(const EntropyGrid& grid);

}  // namespace lsys
