#include "lsys/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lsys/elementary.hpp"
#include "lsys/errors.hpp"
#include "lsys/format.hpp"

namespace lsys {

void validate(const FosterSpec& spec) {
  if (!std::isfinite(spec.a0) || spec.a0 < 0.0) throw SpecError("a0 must be finite and >= 0");
  for (const auto& s : spec.stages) {
    if (!std::isfinite(s.a) || !(s.a > 0.0)) throw SpecError("stage weight a_k must be positive");
    if (!std::isfinite(s.b) || !(s.b > 0.0)) throw SpecError("stage frequency b_k must be positive");
  }
  std::vector<double> bs;
  for (const auto& s : spec.stages) bs.push_back(s.b);
  std::sort(bs.begin(), bs.end());
  if (std::adjacent_find(bs.begin(), bs.end()) != bs.end()) {
    throw SpecError("stage frequencies b_k must be distinct");
  }
  if (spec.a0 == 0.0 && spec.stages.empty()) {
    throw SpecError("Foster data describes the zero function");
  }
}

RationalFunction foster_to_herglotz(const FosterSpec& spec) {
  validate(spec);
  RationalFunction m(Polynomial{}, Polynomial::constant(1.0));
  if (spec.a0 > 0.0) m = m + RationalFunction(Polynomial::constant(-spec.a0), Polynomial{0.0, 1.0});
  for (const auto& s : spec.stages) {
    m = m + RationalFunction(Polynomial{0.0, s.a}, Polynomial{s.b * s.b, 0.0, -1.0});
  }
  return m;
}

AtomicMeasure measure_atoms(const FosterSpec& spec) {
  validate(spec);
  std::vector<Atom> atoms;
  if (spec.a0 > 0.0) atoms.push_back({0.0, spec.a0});
  for (const auto& s : spec.stages) {
    atoms.push_back({s.b, 0.5 * s.a});
    atoms.push_back({-s.b, 0.5 * s.a});
  }
  return AtomicMeasure(std::move(atoms));
}

double donoghue_parameter(const FosterSpec& spec) {
  validate(spec);
  double a = spec.a0;
  for (const auto& s : spec.stages) a += s.a / (s.b * s.b + 1.0);
  return a;
}

DonoghueClassification classify_foster(const FosterSpec& spec) {
  return classify_at_i(Complex{0.0, donoghue_parameter(spec)});
}

RationalFunction positive_real_impedance(const FosterSpec& spec) {
  validate(spec);
  RationalFunction z(Polynomial{}, Polynomial::constant(1.0));
  if (spec.a0 > 0.0) z = z + RationalFunction(Polynomial::constant(spec.a0), Polynomial{0.0, 1.0});
  for (const auto& s : spec.stages) {
    z = z + RationalFunction(Polynomial{0.0, s.a}, Polynomial{s.b * s.b, 0.0, 1.0});
  }
  return z;
}

double LCStage::resonance() const { return 1.0 / std::sqrt(inductance * capacitance); }

Netlist synthesize(const FosterSpec& spec) {
  validate(spec);
  Netlist net;
  if (spec.a0 > 0.0) net.series_capacitor = 1.0 / spec.a0;
  for (const auto& s : spec.stages) net.stages.push_back({s.a / (s.b * s.b), 1.0 / s.a});
  return net;
}

FosterSpec recover_foster(const Netlist& netlist) {
  FosterSpec spec;
  if (netlist.series_capacitor) spec.a0 = 1.0 / *netlist.series_capacitor;
  for (const auto& s : netlist.stages) spec.stages.push_back({1.0 / s.capacitance, s.resonance()});
  return spec;
}

Netlist skew_coupling_circuit(Complex lambda0) {
  require_upper_half_plane(lambda0);
  const double im = lambda0.imag();
  return Netlist{std::nullopt, {LCStage{im / std::norm(lambda0), 1.0 / im}}};
}

FosterSpec skew_coupling_foster(Complex lambda0) {
  require_upper_half_plane(lambda0);
  return FosterSpec{0.0, {FosterStage{2.0 * lambda0.imag(), std::abs(lambda0)}}};
}

std::string emit_netlist(const Netlist& netlist) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  std::ostringstream out;
  std::size_t node = 0;
  if (netlist.series_capacitor) {
    if (!positive(*netlist.series_capacitor)) throw SpecError("series capacitance must be positive");
    out << "C0 n0 n1 " << format_real(*netlist.series_capacitor) << '\n';
    node = 1;
  }
  for (std::size_t k = 0; k < netlist.stages.size(); ++k, ++node) {
    const LCStage& s = netlist.stages[k];
    if (!positive(s.inductance) || !positive(s.capacitance)) {
      throw SpecError("LC stage values must be positive");
    }
    const std::string nodes = "n" + std::to_string(node) + " n" + std::to_string(node + 1) + ' ';
    out << 'L' << k + 1 << ' ' << nodes << format_real(s.inductance) << '\n';
    out << 'C' << k + 1 << ' ' << nodes << format_real(s.capacitance) << '\n';
  }
  out << ".end\n";
  return out.str();
}

}  // namespace lsys
