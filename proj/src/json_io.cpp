#include "eulerhall/json_io.hpp"

#include "eulerhall/errors.hpp"

namespace eulerhall {
namespace {

std::uint64_t positive_integer(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) throw InvalidInput(field + ": expected a positive integer");
  if (v.is_number_unsigned()) {
    auto x = v.get<std::uint64_t>();
    if (x == 0) throw InvalidInput(field + ": expected a positive integer, got 0");
    return x;
  }
  auto x = v.get<std::int64_t>();
  if (x <= 0) throw InvalidInput(field + ": expected a positive integer, got " + std::to_string(x));
  return static_cast<std::uint64_t>(x);
}

}  // namespace

BundleFamily family_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("family: expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "sets" && key != "trivial_lines") throw InvalidInput(key + ": unknown field");
  }
  if (!j.contains("sets")) throw InvalidInput("sets: missing");
  const auto& sets = j.at("sets");
  if (!sets.is_array()) throw InvalidInput("sets: expected an array of arrays");

  BundleFamily f;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string field = "sets[" + std::to_string(i) + "]";
    const auto& inner = sets[i];
    if (!inner.is_array()) throw InvalidInput(field + ": expected an array of atoms");
    if (inner.empty()) throw InvalidInput(field + ": index sets must be nonempty");
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < inner.size(); ++k) {
      atoms.push_back(Atom{positive_integer(inner[k], field + "[" + std::to_string(k) + "]")});
    }
    f.sets.emplace_back(std::move(atoms));
  }

  if (j.contains("trivial_lines")) {
    const auto& t = j.at("trivial_lines");
    if (!t.is_number_integer() || (t.is_number_integer() && !t.is_number_unsigned() && t.get<std::int64_t>() < 0)) {
      throw InvalidInput("trivial_lines: expected a nonnegative integer");
    }
    f.trivial_lines = t.get<std::size_t>();
  }
  return f;
}

BundleFamily parse_family(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("family: malformed JSON: ") + e.what());
  }
  return family_from_json(j);
}

Json atoms_to_json(std::span<const Atom> atoms) {
  Json arr = Json::array();
  for (Atom a : atoms) arr.push_back(id(a));
  return arr;
}

Json family_to_json(const BundleFamily& family) {
  Json sets = Json::array();
  for (const auto& s : family.sets) sets.push_back(atoms_to_json(s.atoms()));
  return Json{{"sets", std::move(sets)}, {"trivial_lines", family.trivial_lines}};
}

Json to_json(const MatchingResult& m) {
  if (!m.assignment) return nullptr;
  return atoms_to_json(*m.assignment);
}

Json to_json(const std::optional<HallViolation>& v) {
  if (!v) return nullptr;
  return Json(v->sets);
}

Json analysis_to_json(const BundleFamily& family, const EquivalenceReport& eq, const Verdict& verdict) {
  Json out;
  out["family"] = family_to_json(family);
  out["dimension"] = dimension(family);
  out["euler_class"] = eq.euler_class.to_string();
  out["euler_class_degree"] = eq.euler_class_degree ? Json(*eq.euler_class_degree) : Json(nullptr);
  out["euler_nonzero"] = eq.euler_nonzero;
  out["hall"] = eq.hall;
  out["matching"] = to_json(eq.matching);
  out["agree"] = eq.agree;
  out["verdict"] = std::string(to_string(verdict.tag));
  out["witness"] = verdict.witness ? Json(id(*verdict.witness)) : Json(nullptr);
  out["violation"] = to_json(verdict.violation);
  return out;
}

Json to_json(const CheckOutcome& c) {
  return Json{{"passed", c.passed}, {"counterexample", c.counterexample ? Json(*c.counterexample) : Json(nullptr)}};
}

Json to_json(const LabelingReport& r) {
  return Json{{"membership", to_json(r.membership)},
              {"injectivity", to_json(r.injectivity)},
              {"level", to_json(r.level)},
              {"passed", r.passed()}};
}

}  // namespace eulerhall
