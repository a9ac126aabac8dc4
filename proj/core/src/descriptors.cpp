#include "lsys/descriptors.hpp"

#include <string>

#include "lsys/elementary.hpp"
#include "lsys/errors.hpp"

namespace lsys {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("descriptor is missing \"") + key + "\"");
  }
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

// Adding 0.0 turns a negative zero into a positive one.
Json to_json(Complex z) { return Json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

Complex complex_from_json(const Json& j) {
  return {number(member(j, "re"), "re"), number(member(j, "im"), "im")};
}

Json to_json(const LSystem& sys) {
  Json t = Json::array();
  for (Eigen::Index r = 0; r < sys.dimension(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < sys.dimension(); ++c) row.push_back(to_json(sys.main_operator()(r, c)));
    t.push_back(std::move(row));
  }
  Json k = Json::array();
  for (Eigen::Index r = 0; r < sys.dimension(); ++r) k.push_back(to_json(sys.channel()(r)));
  return Json{{"T", std::move(t)}, {"K", std::move(k)}, {"J", sys.direction()}};
}

LSystem lsystem_from_json(const Json& j) {
  const Json& t = member(j, "T");
  const Json& k = member(j, "K");
  const Json& dir = member(j, "J");
  if (!t.is_array() || t.empty()) throw InputError("\"T\" must be a non-empty array of rows");
  if (!k.is_array()) throw InputError("\"K\" must be an array");
  if (!dir.is_number_integer() || (dir.get<int>() != 1 && dir.get<int>() != -1)) {
    throw InputError("\"J\" must be 1 or -1");
  }

  const auto n = static_cast<Eigen::Index>(t.size());
  Matrix main(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = t[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw InputError("\"T\" must be square");
    }
    for (Eigen::Index c = 0; c < n; ++c) main(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  if (static_cast<Eigen::Index>(k.size()) != n) {
    throw InputError("\"K\" must have as many entries as \"T\" has rows");
  }
  Vector channel(n);
  for (Eigen::Index r = 0; r < n; ++r) channel(r) = complex_from_json(k[static_cast<std::size_t>(r)]);
  return LSystem(std::move(main), std::move(channel), dir.get<int>());
}

Json to_json(const RationalFunction& r) {
  auto coeffs = [](const Polynomial& p) {
    Json a = Json::array();
    for (const Complex c : p.coeffs()) a.push_back(to_json(c));
    return a;
  };
  return Json{{"num", coeffs(r.numerator())}, {"den", coeffs(r.denominator())}};
}

Json to_json(const FosterSpec& spec) {
  Json stages = Json::array();
  for (const auto& s : spec.stages) stages.push_back(Json{{"a", s.a}, {"b", s.b}});
  return Json{{"a0", spec.a0}, {"stages", std::move(stages)}};
}

FosterSpec foster_from_json(const Json& j) {
  FosterSpec spec;
  spec.a0 = j.is_object() && j.contains("a0") ? number(j.at("a0"), "a0") : 0.0;
  if (j.is_object() && j.contains("stages")) {
    const Json& stages = j.at("stages");
    if (!stages.is_array()) throw InputError("\"stages\" must be an array");
    for (const Json& s : stages) {
      spec.stages.push_back({number(member(s, "a"), "a"), number(member(s, "b"), "b")});
    }
  } else if (!j.is_object()) {
    throw InputError("Foster descriptor must be an object");
  }
  return spec;
}

SystemDescriptor system_from_descriptor(const Json& j) {
  if (!j.is_object()) throw InputError("system descriptor must be an object");
  if (j.contains("lambda0")) {
    const Complex lambda0 = complex_from_json(j.at("lambda0"));
    const bool skew = j.contains("skew") && j.at("skew").is_boolean() && j.at("skew").get<bool>();
    if (skew) return {make_skew_adjoint(lambda0).system, lambda0, true};
    return {make_elementary(lambda0).system, lambda0, false};
  }
  if (j.contains("T")) return {lsystem_from_json(j), std::nullopt, false};
  if (j.contains("system")) return system_from_descriptor(j.at("system"));
  throw InputError("unrecognized system descriptor: expected \"lambda0\", \"T\" or \"system\"");
}

std::pair<SystemDescriptor, SystemDescriptor> coupling_from_descriptor(const Json& j) {
  const Json& factors = member(j, "factors");
  if (!factors.is_array() || factors.size() != 2) {
    throw InputError("\"factors\" must hold exactly two system descriptors");
  }
  return {system_from_descriptor(factors[0]), system_from_descriptor(factors[1])};
}

}  // namespace lsys
