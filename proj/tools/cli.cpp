#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "lsys/analysis.hpp"
#include "lsys/circuit.hpp"
#include "lsys/coupling.hpp"
#include "lsys/descriptors.hpp"
#include "lsys/elementary.hpp"
#include "lsys/errors.hpp"
#include "lsys/format.hpp"

namespace lsys::cli {

namespace {

constexpr const char* kDefaultGrid = "-2,2,0.05,3,81,61";

struct Options {
  std::string lambda0;
  std::string mu0;
  std::string in;
  std::string out;
  std::string grid = kDefaultGrid;
  std::uint64_t seed = 42;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text, const char* flag) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw InputError(std::string(flag) + ": expected a finite number, got \"" + text + "\"");
  }
  return v;
}

std::size_t parse_count(const std::string& text, const char* flag) {
  const double v = parse_double(text, flag);
  if (v < 0.0 || v != std::floor(v) || v > 1e7) {
    throw InputError(std::string(flag) + ": expected a non-negative integer, got \"" + text + "\"");
  }
  return static_cast<std::size_t>(v);
}

Complex parse_complex(const std::string& text, const char* flag) {
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 2) throw InputError(std::string(flag) + ": expected re,im");
  return {parse_double(parts[0], flag), parse_double(parts[1], flag)};
}

Json read_input(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << file.rdbuf();
  return parse_json(buf.str());
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw InputError("cannot write " + opt.out);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + '\n'; }

Json real_json(double v) { return round_significant(v); }

Json real_json(const ExtendedReal& v) { return v.is_infinite() ? Json("inf") : real_json(v.value()); }

Json classification_json(const DonoghueClassification& c) {
  return Json{{"class", std::string(to_string(c.tag))},
              {"kappa", c.kappa ? real_json(*c.kappa) : Json(nullptr)},
              {"a", real_json(c.a)}};
}

Json validation_json(const LSystem& sys) {
  const ValidationReport r = validate(sys);
  return Json{{"residual", real_json(r.residual)}, {"passed", r.passed}};
}

/// Entropies are equal when both are infinite or the finite values agree.
bool entropies_agree(const ExtendedReal& a, const ExtendedReal& b, double tol) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return std::abs(a.value() - b.value()) <= tol * std::max(1.0, std::abs(b.value()));
}

Complex require_lambda0(const Options& opt) {
  if (!opt.lambda0.empty()) return parse_complex(opt.lambda0, "--lambda0");
  if (!opt.in.empty()) {
    const SystemDescriptor d = system_from_descriptor(read_input(opt.in));
    if (d.lambda0) return *d.lambda0;
    throw InputError("descriptor does not name lambda0");
  }
  throw InputError("--lambda0 or --in is required");
}

// ---------------------------------------------------------------- reports

/// Closed-form transfer function for descriptors that have one.
std::optional<RationalFunction> closed_transfer(const SystemDescriptor& d) {
  if (!d.lambda0) return std::nullopt;
  return d.skew ? skew_adjoint_transfer(*d.lambda0) : elementary_transfer(*d.lambda0);
}

ExtendedReal descriptor_entropy(const SystemDescriptor& d) {
  if (d.lambda0 && !d.skew) return elementary_entropy(*d.lambda0);
  return c_entropy(d.system);
}

Json factor_json(const SystemDescriptor& d) {
  Json j;
  if (d.lambda0) {
    j["lambda0"] = to_json(*d.lambda0);
    j["skew"] = d.skew;
  }
  const ExtendedReal s = descriptor_entropy(d);
  j["classification"] = classification_json(classify_at_i(impedance_function(d.system, kI)));
  j["entropy"] = real_json(s);
  j["dissipation"] = real_json(dissipation_from_entropy(s));
  return j;
}

Json elementary_report(Complex lambda0) {
  const ElementarySystem e = make_elementary(lambda0);
  return Json{{"lambda0", to_json(lambda0)},
              {"system", to_json(e.system)},
              {"validation", validation_json(e.system)},
              {"transfer", to_json(elementary_transfer(lambda0))},
              {"impedance", to_json(elementary_impedance(lambda0))},
              {"classification", classification_json(classify_elementary(lambda0))},
              {"entropy", real_json(elementary_entropy(lambda0))},
              {"dissipation", real_json(elementary_dissipation(lambda0))}};
}

Json skew_report(Complex lambda0) {
  const SkewAdjointSystem sk = make_skew_adjoint(lambda0);
  const ExtendedReal s = c_entropy(sk.system);
  const double d = dissipation_from_entropy(s);

  const CoupledSystem self = self_skew_coupling(lambda0);
  const RationalFunction w = self_skew_transfer(lambda0);
  const RationalFunction v = self_skew_impedance(lambda0);
  const ExtendedReal s2 = entropy_from_transfer(w(-kI));
  const double d2 = dissipation_from_entropy(s2);
  const Complex v_at_i = v(kI);

  Json coupling{{"system", to_json(self.system)},
                {"validation", validation_json(self.system)},
                {"transfer", to_json(w)},
                {"impedance", to_json(v)},
                {"v_at_i", to_json(v_at_i)},
                {"classification", classification_json(classify_at_i(v_at_i))},
                {"entropy", real_json(s2)},
                {"dissipation", real_json(d2)},
                {"entropy_doubled", entropies_agree(s2, s + s, 1e-10)},
                {"dissipation_composed", std::abs(d2 - (2.0 * d - d * d)) <= 1e-10}};

  return Json{{"lambda0", to_json(lambda0)},
              {"system", to_json(sk.system)},
              {"validation", validation_json(sk.system)},
              {"transfer", to_json(skew_adjoint_transfer(lambda0))},
              {"impedance", to_json(skew_adjoint_impedance(lambda0))},
              {"entropy", real_json(s)},
              {"dissipation", real_json(d)},
              {"matches_elementary", entropies_agree(s, elementary_entropy(lambda0), 1e-10)},
              {"self_coupling", std::move(coupling)}};
}

std::pair<SystemDescriptor, SystemDescriptor> coupling_factors(const Options& opt) {
  if (!opt.in.empty()) return coupling_from_descriptor(read_input(opt.in));
  if (opt.lambda0.empty() || opt.mu0.empty()) throw InputError("couple needs --lambda0 and --mu0, or --in");
  const Complex l = parse_complex(opt.lambda0, "--lambda0");
  const Complex m = parse_complex(opt.mu0, "--mu0");
  return {SystemDescriptor{make_elementary(l).system, l, false}, SystemDescriptor{make_elementary(m).system, m, false}};
}

Json couple_report(const SystemDescriptor& a, const SystemDescriptor& b) {
  const CoupledSystem c = couple(a.system, b.system);
  Json j{{"factors", Json::array({factor_json(a), factor_json(b)})},
         {"system", to_json(c.system)},
         {"validation", validation_json(c.system)}};

  const std::optional<RationalFunction> wa = closed_transfer(a);
  const std::optional<RationalFunction> wb = closed_transfer(b);
  if (wa && wb) {
    const RationalFunction w = *wa * *wb;
    j["transfer"] = to_json(w);
    const bool elementary_pair = !a.skew && !b.skew;
    j["impedance"] = to_json(elementary_pair ? coupling_impedance(*a.lambda0, *b.lambda0) : cayley_w_to_v(w));
  }

  const Complex v_at_i = impedance_function(c.system, kI);
  const ExtendedReal s = compose_entropy(descriptor_entropy(a), descriptor_entropy(b));
  const double d = compose_dissipation(dissipation_from_entropy(descriptor_entropy(a)),
                                       dissipation_from_entropy(descriptor_entropy(b)));
  j["v_at_i"] = to_json(v_at_i);
  j["classification"] = classification_json(classify_at_i(v_at_i));
  j["entropy"] = real_json(s);
  j["dissipation"] = real_json(d);
  return j;
}

Json classify_report(const Options& opt) {
  Complex v_at_i;
  if (!opt.lambda0.empty()) {
    v_at_i = impedance_function(make_elementary(parse_complex(opt.lambda0, "--lambda0")).system, kI);
  } else if (!opt.in.empty()) {
    const Json doc = read_input(opt.in);
    if (doc.is_object() && (doc.contains("a0") || doc.contains("stages"))) {
      const FosterSpec spec = foster_from_json(doc);
      v_at_i = foster_to_herglotz(spec)(kI);
      return Json{{"v_at_i", to_json(v_at_i)}, {"classification", classification_json(classify_foster(spec))}};
    }
    if (doc.is_object() && doc.contains("factors")) {
      const auto [a, b] = coupling_from_descriptor(doc);
      v_at_i = impedance_function(couple(a.system, b.system).system, kI);
    } else {
      v_at_i = impedance_function(system_from_descriptor(doc).system, kI);
    }
  } else {
    throw InputError("classify needs --lambda0 or --in");
  }
  return Json{{"v_at_i", to_json(v_at_i)}, {"classification", classification_json(classify_at_i(v_at_i))}};
}

Json entropy_report(const Options& opt) {
  if (!opt.lambda0.empty() || opt.in.empty()) {
    const Complex l = require_lambda0(opt);
    return Json{{"entropy", real_json(elementary_entropy(l))},
                {"dissipation", real_json(elementary_dissipation(l))},
                {"entropy_resolvent", real_json(c_entropy(make_elementary(l).system))}};
  }
  const Json doc = read_input(opt.in);
  if (doc.is_object() && doc.contains("factors")) {
    const auto [a, b] = coupling_from_descriptor(doc);
    const ExtendedReal s1 = descriptor_entropy(a);
    const ExtendedReal s2 = descriptor_entropy(b);
    const ExtendedReal s = compose_entropy(s1, s2);
    return Json{{"factor_entropies", Json::array({real_json(s1), real_json(s2)})},
                {"entropy", real_json(s)},
                {"dissipation", real_json(compose_dissipation(dissipation_from_entropy(s1),
                                                              dissipation_from_entropy(s2)))},
                {"entropy_resolvent", real_json(c_entropy(couple(a.system, b.system).system))}};
  }
  const SystemDescriptor d = system_from_descriptor(doc);
  const ExtendedReal s = descriptor_entropy(d);
  return Json{{"entropy", real_json(s)},
              {"dissipation", real_json(dissipation_from_entropy(s))},
              {"entropy_resolvent", real_json(c_entropy(d.system))}};
}

std::string surface_csv(const Options& opt) {
  const std::vector<std::string> p = split(opt.grid, ',');
  if (p.size() != 6) throw InputError("--grid: expected xmin,xmax,ymin,ymax,nx,ny");
  const EntropyGrid grid =
      entropy_surface(parse_double(p[0], "--grid"), parse_double(p[1], "--grid"), parse_double(p[2], "--grid"),
                      parse_double(p[3], "--grid"), parse_count(p[4], "--grid"), parse_count(p[5], "--grid"));
  return entropy_surface_csv(grid);
}

std::string synth_netlist(const Options& opt) {
  if (!opt.lambda0.empty()) return emit_netlist(skew_coupling_circuit(parse_complex(opt.lambda0, "--lambda0")));
  if (opt.in.empty()) throw InputError("synth needs --in <foster.json> or --lambda0");
  return emit_netlist(synthesize(foster_from_json(read_input(opt.in))));
}

// ---------------------------------------------------------------- verify

class Residual {
 public:
  Residual(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

  void record(double r) { worst_ = std::max(worst_, std::isnan(r) ? INFINITY : r); }
  [[nodiscard]] bool ok() const { return worst_ <= tolerance_; }

  [[nodiscard]] std::string line() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-28s %-20s %-20s %s\n", name_.c_str(), format_real(worst_).c_str(),
                  format_real(tolerance_).c_str(), ok() ? "ok" : "FAIL");
    return buf;
  }

 private:
  std::string name_;
  double tolerance_;
  double worst_ = 0.0;
};

double entropy_gap(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite() ? 0.0 : INFINITY;
  return std::abs(a.value() - b.value()) / std::max(1.0, std::abs(b.value()));
}

std::pair<std::string, bool> verify(std::uint64_t seed) {
  constexpr int kPairs = 100;
  constexpr int kPoints = 5;
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto upper = [&] { return Complex{uniform(-2.0, 2.0), uniform(0.1, 3.0)}; };
  auto off_axis = [&] {
    const Complex z{uniform(-3.0, 3.0), uniform(0.2, 3.0)};
    return uniform(0.0, 1.0) < 0.5 ? z : std::conj(z);
  };

  Residual colligation("colligation", 1e-12);
  Residual elem_w("elementary.transfer", 1e-10);
  Residual elem_v("elementary.impedance", 1e-10);
  Residual skew_w("skew.transfer", 1e-10);
  Residual skew_v("skew.impedance", 1e-10);
  Residual coup_w("coupling.transfer", 1e-10);
  Residual coup_v("coupling.impedance", 1e-10);
  Residual self_w("self_skew.transfer", 1e-10);
  Residual self_v("self_skew.impedance", 1e-10);
  Residual cayley("cayley.round_trip", 1e-12);
  Residual entropy("entropy.additivity", 1e-10);
  Residual dissipation("dissipation.composition", 1e-10);
  Residual herglotz("herglotz.violations", 0.0);

  for (int trial = 0; trial < kPairs; ++trial) {
    const Complex l = upper();
    const Complex m = upper();
    const LSystem e = make_elementary(l).system;
    const LSystem x = make_skew_adjoint(l).system;
    const LSystem block = couple(e, make_elementary(m).system).system;
    const LSystem self = self_skew_coupling(l).system;
    for (const LSystem* sys : {&e, &x, &block, &self}) colligation.record(validate(*sys).residual);

    const RationalFunction w = elementary_transfer(l);
    const RationalFunction v = elementary_impedance(l);
    const RationalFunction wx = skew_adjoint_transfer(l);
    const RationalFunction vx = skew_adjoint_impedance(l);
    const RationalFunction wc = coupling_transfer(l, m);
    const RationalFunction vc = coupling_impedance(l, m);
    const RationalFunction ws = self_skew_transfer(l);
    const RationalFunction vs = self_skew_impedance(l);
    for (int p = 0; p < kPoints; ++p) {
      const Complex z = off_axis();
      elem_w.record(relative_difference(w(z), transfer_function(e, z)));
      elem_v.record(relative_difference(v(z), impedance_function(e, z)));
      skew_w.record(relative_difference(wx(z), transfer_function(x, z)));
      skew_v.record(relative_difference(vx(z), impedance_function(x, z)));
      coup_w.record(relative_difference(wc(z), transfer_function(block, z)));
      coup_v.record(relative_difference(vc(z), impedance_function(block, z)));
      self_w.record(relative_difference(ws(z), transfer_function(self, z)));
      self_v.record(relative_difference(vs(z), impedance_function(self, z)));
      const Complex up{z.real(), std::abs(z.imag())};
      for (const LSystem* sys : {&e, &x, &block, &self}) {
        herglotz.record(impedance_function(*sys, up).imag() > 0.0 ? 0.0 : 1.0);
      }
    }
    for (const RationalFunction* f : {&w, &wx, &wc, &ws}) {
      cayley.record(max_relative_difference(cayley_v_to_w(cayley_w_to_v(*f)), *f));
    }

    const ExtendedReal s = compose_entropy(elementary_entropy(l), elementary_entropy(m));
    entropy.record(entropy_gap(c_entropy(block), s));
    entropy.record(entropy_gap(coupling_entropy(l, m), s));
    const double d = compose_dissipation(elementary_dissipation(l), elementary_dissipation(m));
    dissipation.record(std::abs(d - coupling_dissipation(l, m)));
    dissipation.record(std::abs(d - dissipation_from_entropy(c_entropy(block))));
  }

  std::string text;
  char header[160];
  std::snprintf(header, sizeof header, "%-28s %-20s %-20s %s\n", "check", "max_residual", "tolerance", "status");
  text += header;
  bool all = true;
  for (const Residual* r : {&colligation, &elem_w, &elem_v, &skew_w, &skew_v, &coup_w, &coup_v, &self_w, &self_v,
                            &cayley, &entropy, &dissipation, &herglotz}) {
    text += r->line();
    all = all && r->ok();
  }
  text += "seed " + std::to_string(seed) + ", " + std::to_string(kPairs) + " pairs, " + std::to_string(kPoints) +
          " points each: " + (all ? "ok" : "FAIL") + '\n';
  return {text, all};
}

// ---------------------------------------------------------------- dispatch

int report_error(std::ostream& err, const std::exception& e, int code) {
  err << "lsys: " << e.what() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scalar L-systems: transfer and impedance functions, couplings, entropy and LC synthesis", "lsys"};
  app.require_subcommand(1);
  Options opt;
  int status = 0;

  auto add = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto lambda0 = [&](CLI::App* c) { c->add_option("--lambda0", opt.lambda0, "lambda0 as re,im"); };
  auto in = [&](CLI::App* c) { c->add_option("--in", opt.in, "JSON descriptor file"); };
  auto output = [&](CLI::App* c) { c->add_option("--out", opt.out, "write to this file instead of stdout"); };

  CLI::App* elementary = add("elementary", "report for the elementary system of lambda0");
  CLI::App* skew = add("skew", "skew-adjoint companion and its self-coupling");
  CLI::App* couple_cmd = add("couple", "coupling of two systems");
  CLI::App* classify = add("classify", "Donoghue class of the impedance function");
  CLI::App* entropy = add("entropy", "c-entropy and dissipation coefficient");
  CLI::App* surface = add("surface", "c-entropy of elementary systems over a grid, as CSV");
  CLI::App* synth = add("synth", "LC netlist from Foster data or for a skew coupling");
  CLI::App* verify_cmd = add("verify", "cross-check closed forms against the resolvent");

  for (CLI::App* c : {elementary, skew, classify, entropy, synth}) lambda0(c);
  lambda0(couple_cmd);
  couple_cmd->add_option("--mu0", opt.mu0, "mu0 as re,im");
  for (CLI::App* c : {elementary, skew, couple_cmd, classify, entropy, synth}) in(c);
  for (CLI::App* c : {elementary, skew, couple_cmd, classify, entropy, surface, synth, verify_cmd}) output(c);
  surface->add_option("--grid", opt.grid, "xmin,xmax,ymin,ymax,nx,ny")->default_str(kDefaultGrid);
  verify_cmd->add_option("--seed", opt.seed, "sampler seed")->default_val(42);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (elementary->parsed()) {
      emit(opt, dump(elementary_report(require_lambda0(opt))), out);
    } else if (skew->parsed()) {
      emit(opt, dump(skew_report(require_lambda0(opt))), out);
    } else if (couple_cmd->parsed()) {
      const auto [a, b] = coupling_factors(opt);
      emit(opt, dump(couple_report(a, b)), out);
    } else if (classify->parsed()) {
      emit(opt, dump(classify_report(opt)), out);
    } else if (entropy->parsed()) {
      emit(opt, dump(entropy_report(opt)), out);
    } else if (surface->parsed()) {
      emit(opt, surface_csv(opt), out);
    } else if (synth->parsed()) {
      emit(opt, synth_netlist(opt), out);
    } else if (verify_cmd->parsed()) {
      const auto [text, ok] = verify(opt.seed);
      emit(opt, text, out);
      status = ok ? 0 : 2;
    }
  } catch (const InputError& e) {
    return report_error(err, e, 1);
  } catch (const DimensionError& e) {
    return report_error(err, e, 1);
  } catch (const Json::exception& e) {
    return report_error(err, e, 1);
  } catch (const IncompatibleError& e) {
    return report_error(err, e, 2);
  } catch (const SpecError& e) {
    return report_error(err, e, 2);
  } catch (const Error& e) {
    return report_error(err, e, 3);
  }
  return status;
}

}  // namespace lsys::cli
