#include "serialize.hpp"

#include "error.hpp"

#include <algorithm>
#include <cmath>

namespace qflag {

namespace {

Rational rational_field(const Json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidArgument(std::string(what) + " must be a rational string or an integer");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InvalidArgument("expected an integer");
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, to_json(c)}));
  return Json{{"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
  std::vector<std::pair<long, Integer>> terms;
  for (const auto& t : field(j, "terms")) {
    if (!t.is_array() || t.size() != 2) throw InvalidArgument("Laurent term must be [exponent, coefficient]");
    terms.emplace_back(t[0].get<long>(), integer_from_json(t[1]));
  }
  return LaurentPoly::from_terms(terms);
}

Json to_json(const RationalFunction& f) { return Json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}}; }

RationalFunction rational_function_from_json(const Json& j) {
  return {laurent_from_json(field(j, "num")), laurent_from_json(field(j, "den"))};
}

Json to_json(const Weight& w) { return Json(w.coords); }

Weight weight_from_json(const Json& j) { return Weight(j.get<std::vector<std::int64_t>>()); }

Json to_json(const QValue& q) {
  if (const auto* r = std::get_if<Rational>(&q)) return Json(r->get_str());
  return Json(std::get<double>(q));
}

QValue qvalue_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number()) return j.get<double>();
  throw InvalidArgument("q must be a rational string or a number");
}

Json to_json(const RootSystem& rs) {
  Json gram = Json::array();
  for (const auto& row : rs.gram()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    gram.push_back(r);
  }
  Json roots = Json::array();
  for (const auto& beta : rs.positive_roots()) roots.push_back(to_json(beta));
  Json simple = Json::array();
  for (int i = 1; i <= rs.rank(); ++i) simple.push_back(to_json(rs.simple_root(i)));
  return Json{{"type", rs.type().name()},
              {"rank", rs.rank()},
              {"cartan", rs.cartan()},
              {"symmetrizers", std::vector<int>(rs.symmetrizers().begin(), rs.symmetrizers().end())},
              {"gram", gram},
              {"simple_roots", simple},
              {"w0_word", rs.w0_word().letters},
              {"positive_roots", roots},
              {"rho", to_json(rs.weyl_vector())}};
}

std::string weight_key(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.coords.size(); ++i) out += (i ? "," : "") + std::to_string(w.coords[i]);
  return out;
}

Weight weight_from_key(std::string_view key) {
  std::vector<std::int64_t> coords;
  std::size_t start = 0;
  while (start <= key.size()) {
    const auto end = std::min(key.find(',', start), key.size());
    coords.push_back(std::stoll(std::string(key.substr(start, end - start))));
    start = end + 1;
  }
  return Weight(coords);
}

Json to_json(const WeightTable& t) {
  Json mult = Json::object();
  for (const auto& [mu, m] : t.entries) mult[weight_key(mu)] = m;
  return Json{{"highest", to_json(t.highest)}, {"dimension", to_json(t.dimension())}, {"multiplicities", mult}};
}

WeightTable weight_table_from_json(const Json& j) {
  WeightTable t;
  t.highest = weight_from_json(field(j, "highest"));
  for (const auto& [key, m] : field(j, "multiplicities").items()) t.entries[weight_from_key(key)] = m.get<std::int64_t>();
  return t;
}

void put_value(Json& j, const Scalar& s) {
  if (const auto* r = std::get_if<Rational>(&s)) j["value_exact"] = Json{{"num", to_json(Integer(r->get_num()))}, {"den", to_json(Integer(r->get_den()))}};
  else j["value_float"] = std::get<double>(s);
}

Scalar value_from_json(const Json& j) {
  if (j.contains("value_exact")) {
    const Json& v = j.at("value_exact");
    Rational r(integer_from_json(field(v, "num")), integer_from_json(field(v, "den")));
    r.canonicalize();
    return r;
  }
  return field(j, "value_float").get<double>();
}

Json to_json(const std::vector<ExponentMultiplicity>& f) {
  Json out = Json::array();
  for (const auto& e : f) out.push_back(Json::array({e.exponent, e.multiplicity}));
  return Json{{"exponents", out}};
}

Json to_json(const ExponentPair& e) { return Json{{"modular", e.modular}, {"scaling", e.scaling}}; }

Json to_json(const DiagonalModel& m) {
  return Json{{"exponents", m.exponents},
              {"coroot_exponents", m.coroot_exponents},
              {"lambda", to_json(m.lambda)},
              {"word", m.word.letters},
              {"regular", m.regular},
              {"q", to_json(m.q)},
              {"trunc", m.trunc}};
}

DiagonalModel diagonal_model_from_json(const Json& j) {
  DiagonalModel m;
  m.exponents = field(j, "exponents").get<std::vector<long>>();
  m.q = qvalue_from_json(field(j, "q"));
  m.trunc = field(j, "trunc").get<int>();
  if (j.contains("coroot_exponents")) m.coroot_exponents = j.at("coroot_exponents").get<std::vector<long>>();
  if (j.contains("lambda")) m.lambda = weight_from_json(j.at("lambda"));
  if (j.contains("word")) m.word.letters = j.at("word").get<std::vector<int>>();
  m.regular = j.contains("regular")
                  ? j.at("regular").get<bool>()
                  : std::all_of(m.exponents.begin(), m.exponents.end(), [](long e) { return e > 0; });
  return m;
}

Json to_json(const std::vector<SpectrumEntry>& spectrum) {
  Json out = Json::array();
  for (const auto& e : spectrum) out.push_back(Json{{"exponent", e.exponent}, {"value", e.value}, {"multiplicity", to_json(e.multiplicity)}});
  return out;
}

Json to_json(const CommutationReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(Json{{"generator", std::string(1, generator_letter(e.generator))}, {"exponent", e.exponent}, {"violation", e.violation}});
  return Json{{"lambda_coord", r.lambda_coord}, {"entries", entries}, {"ux_violation", r.ux_violation}, {"max_violation", r.max_violation}};
}

Json to_json(const OrthogonalityReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(Json{{"word", e.word}, {"computed", e.computed}, {"predicted", e.predicted}, {"deviation", e.deviation}});
  return Json{{"q", r.q}, {"trunc", r.trunc}, {"max_deviation", r.max_deviation}, {"entries", entries}};
}

Json to_json(const HaarALambda& h) {
  return Json{{"via_product", to_json(h.via_product)}, {"via_orthogonality", to_json(h.via_orthogonality)}, {"equal", h.equal}};
}

Json to_json(const Su2Operator& op) {
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(op.matrix.size()));
  for (Eigen::Index r = 0; r < op.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < op.matrix.cols(); ++c) data.push_back(op.matrix(r, c));
  return Json{{"label", op.label}, {"trunc", op.trunc}, {"data", data}};
}

Json to_json(const ExactLog& l) {
  Json out = Json::object();
  for (const auto& [p, r] : l.exponents()) out[p.get_str()] = r.get_str();
  return out;
}

ExactLog exact_log_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("exact log must be an object prime -> coefficient");
  ExactLog out;
  for (const auto& [key, value] : j.items()) {
    const auto factors = factorize(Integer(key));
    if (factors.size() != 1 || factors.begin()->second != 1) throw InvalidArgument("exact log key '" + key + "' is not a prime");
    out += exact_log(Rational(Integer(key)), rational_field(value, "log coefficient"));
  }
  return out;
}

Json to_json(const CanonicalSubgroup& g) {
  Json out{{"step", g.step}, {"kernel", to_string(g.kernel)}};
  out["kernel_generator"] = g.kernel == KernelKind::cyclic ? to_json(g.kernel_generator) : Json(nullptr);
  out["coset"] = g.coset ? to_json(*g.coset) : Json(nullptr);
  return out;
}

CanonicalSubgroup canonical_subgroup_from_json(const Json& j) {
  CanonicalSubgroup g;
  g.step = field(j, "step").get<long>();
  const auto kind = field(j, "kernel").get<std::string>();
  if (kind == "trivial") g.kernel = KernelKind::trivial;
  else if (kind == "cyclic") g.kernel = KernelKind::cyclic;
  else if (kind == "dense_line") g.kernel = KernelKind::dense_line;
  else throw InvalidArgument("unknown kernel kind '" + kind + "'");
  if (g.kernel == KernelKind::cyclic) g.kernel_generator = exact_log_from_json(field(j, "kernel_generator"));
  if (j.contains("coset") && !j.at("coset").is_null()) g.coset = exact_log_from_json(j.at("coset"));
  return g;
}

Json to_json(const ClassificationResult& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back(Json::array({to_json(g.first), g.second}));
  Json out{{"verdict", to_string(r.verdict)}, {"invariant", to_json(r.invariant)}, {"generators", gens}};
  if (r.log_lambda) {
    out["lambda"] = Json{{"log", to_json(*r.log_lambda)}, {"text", r.log_lambda->to_string()}, {"value", std::exp(r.log_lambda->to_double())}};
  }
  if (r.module) out["module"] = to_string(*r.module);
  return out;
}

ActionSpec action_spec_from_json(const Json& j) {
  ActionSpec spec;
  spec.q = rational_field(field(j, "q"), "q");
  for (const auto& b : field(j, "blocks")) {
    ActionBlock block;
    block.spin = rational_field(field(b, "spin"), "spin");
    if (b.contains("c")) {
      const Json& c = b.at("c");
      if (c.is_object()) {
        block.c_base = rational_field(field(c, "base"), "c.base");
        block.c_exponent = c.contains("exp") ? rational_field(c.at("exp"), "c.exp") : Rational(1);
      } else {
        block.c_base = rational_field(c, "c");
      }
    }
    const long copies = b.contains("multiplicity") ? b.at("multiplicity").get<long>() : 1;
    if (copies < 1) throw InvalidArgument("block multiplicity must be positive");
    for (long k = 0; k < copies; ++k) spec.blocks.push_back(block);
  }
  return spec;
}

Json to_json(const ActionSpec& spec) {
  Json blocks = Json::array();
  for (const auto& b : spec.blocks)
    blocks.push_back(Json{{"spin", b.spin.get_str()}, {"c", Json{{"base", b.c_base.get_str()}, {"exp", b.c_exponent.get_str()}}}});
  return Json{{"q", spec.q.get_str()}, {"blocks", blocks}};
}

}  // namespace qflag
