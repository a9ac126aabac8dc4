#pragma once

// Foster-form reactance functions and their realization as a series chain of
// a capacitor and parallel LC blocks.
//
//   M(z) = -a0/z + sum_k a_k z / (b_k^2 - z^2)
//   Z(p) = M(ip)/i = a0/p + sum_k a_k p / (b_k^2 + p^2)
//
// Stage k realizes with L_k = a_k/b_k^2 and C_k = 1/a_k; the series capacitor
// is C0 = 1/a0 and is absent when a0 = 0.

#include <optional>
#include <string>
#include <vector>

#include "lsys/analysis.hpp"
#include "lsys/num.hpp"

namespace lsys {

struct FosterStage {
  double a;
  double b;
};

struct FosterSpec {
  double a0 = 0.0;
  std::vector<FosterStage> stages;
};

/// Throws SpecError unless a0 >= 0, every a_k > 0 and b_k > 0, the b_k are
/// pairwise distinct, and the function is not identically zero.
void validate(const FosterSpec& spec);

RationalFunction foster_to_herglotz(const FosterSpec& spec);

/// Atoms a0 at 0 (omitted when a0 = 0) and a_k/2 at +-b_k.
AtomicMeasure measure_atoms(const FosterSpec& spec);

/// a = a0 + sum_k a_k/(b_k^2 + 1) = Im M(i).
double donoghue_parameter(const FosterSpec& spec);

DonoghueClassification classify_foster(const FosterSpec& spec);

/// Z(p) as a rational function of p.
RationalFunction positive_real_impedance(const FosterSpec& spec);

struct LCStage {
  double inductance;
  double capacitance;

  [[nodiscard]] double resonance() const;  // 1/sqrt(LC)
};

struct Netlist {
  std::optional<double> series_capacitor;
  std::vector<LCStage> stages;
};

Netlist synthesize(const FosterSpec& spec);

/// Inverse of synthesize: a0 = 1/C0, a_k = 1/C_k, b_k = 1/sqrt(L_k C_k).
FosterSpec recover_foster(const Netlist& netlist);

/// Single parallel LC block with L = Im l/|l|^2 and C = 1/Im l, the circuit
/// associated with the coupling of an elementary system and its skew-adjoint.
Netlist skew_coupling_circuit(Complex lambda0);

/// Foster data {a0 = 0, (2 Im l, |l|)} whose M(z) is the impedance
/// 2 Im(l) z/(|l|^2 - z^2) of that coupling.
FosterSpec skew_coupling_foster(Complex lambda0);

/// Line-oriented netlist: "C0 n0 n1 <v>" when present, then "Lk"/"Ck" lines
/// sharing the node pair of stage k, then ".end". LF line endings, values with
/// 12 significant digits. Throws SpecError on non-positive component values.
std::string emit_netlist(const Netlist& netlist);

}  // namespace lsys
