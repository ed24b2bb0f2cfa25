// qflag command-line frontend. Talks to the library only through the C API.

#include "qflag/qflag.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CallError : std::runtime_error {
  CallError(qflag_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  qflag_status status;
};

struct Options {
  std::string type;
  int rank = 0;
  std::string lambda;
  std::optional<std::string> q;
  bool as_float = false;
  bool allow_outside = false;
  bool eval = false;
  int trunc = 0;
  std::string m_list;
  long m = 1;
  std::string n = "inf";
  std::string word;
  std::string spec;
  std::string cutoff;
  std::string route = "product";
  std::string format = "json";
  long lambda_coord = 1;
  bool commutation = false;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* flag) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": expected a comma separated integer list, got '" + text + "'");
    }
  }
  return out;
}

double parse_number(const std::string& text, const char* flag) {
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used == text.size()) return v;
    } else {
      const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
      std::size_t used_b = 0;
      const double num = std::stod(a, &used), den = std::stod(b, &used_b);
      if (used == a.size() && used_b == b.size()) return num / den;
    }
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(flag) + ": cannot parse '" + text + "'");
}

void check(qflag_status s) {
  if (s != QFLAG_OK) throw CallError(s, qflag_last_error());
}

Json take(char* raw) {
  Json j = Json::parse(raw);
  qflag_string_free(raw);
  return j;
}

class RootSys {
public:
  explicit RootSys(const Options& o) {
    if (o.type.empty()) throw UsageError("--type is required");
    check(qflag_rootsys_new(o.type.c_str(), o.rank, &handle_));
  }
  ~RootSys() { qflag_rootsys_free(handle_); }
  RootSys(const RootSys&) = delete;
  RootSys& operator=(const RootSys&) = delete;
  const qflag_rootsys* get() const { return handle_; }

private:
  qflag_rootsys* handle_ = nullptr;
};

int q_flags(const Options& o) {
  return (o.as_float ? QFLAG_Q_FLOAT : 0) | (o.allow_outside ? QFLAG_Q_ALLOW_OUTSIDE : 0);
}

const char* optional_q(const Options& o) {
  if (o.eval && !o.q) throw UsageError("--eval needs --q");
  return o.q ? o.q->c_str() : nullptr;
}

const char* required_q(const Options& o) {
  if (!o.q) throw UsageError("--q is required");
  return o.q->c_str();
}

std::vector<std::int64_t> lambda_of(const Options& o) {
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  return parse_int_list(o.lambda, "--lambda");
}

// ---------------------------------------------------------------- tables

std::string poly_text(const Json& p) {
  std::string out;
  for (const auto& t : p.at("terms")) {
    const long e = t[0].get<long>();
    std::string c = t[1].is_string() ? t[1].get<std::string>() : std::to_string(t[1].get<long long>());
    const bool negative = c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) out = negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (e == 0) out += c;
    else {
      if (c != "1") out += c + "*";
      out += e == 1 ? "q" : "q^" + std::to_string(e);
    }
  }
  return out.empty() ? "0" : out;
}

bool is_poly(const Json& j) { return j.is_object() && j.size() == 1 && j.contains("terms"); }

std::string cell(const Json& j) {
  if (is_poly(j)) return poly_text(j);
  if (j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den") && is_poly(j["num"]))
    return "(" + poly_text(j["num"]) + ") / (" + poly_text(j["den"]) + ")";
  if (j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den")) {
    const std::string num = cell(j["num"]), den = cell(j["den"]);
    return den == "1" ? num : num + "/" + den;
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat_map(const Json& j) {
  if (!j.is_object() || j.empty() || is_poly(j) || j.contains("num")) return false;
  for (const auto& [k, v] : j.items())
    if (v.is_structured()) return false;
  return j.size() > 2;
}

bool is_record_array(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& e : j)
    if (!e.is_object() || e.size() != j.front().size()) return false;
  return true;
}

void print_records(std::ostream& os, const Json& rows, const std::string& indent) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  std::vector<std::size_t> width(keys.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < keys.size(); ++c) {
      line.push_back(r.contains(keys[c]) ? cell(r[keys[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto row = [&](const std::vector<std::string>& v) {
    os << indent;
    for (std::size_t c = 0; c < v.size(); ++c) {
      os << v[c];
      if (c + 1 < v.size()) os << std::string(width[c] - v[c].size() + 2, ' ');
    }
    os << '\n';
  };
  row(keys);
  for (const auto& line : cells) row(line);
}

void print_table(std::ostream& os, const Json& j) {
  if (is_record_array(j)) return print_records(os, j, "");
  if (!j.is_object() || is_poly(j)) {
    os << cell(j) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    if (is_record_array(v)) {
      os << k << ":\n";
      print_records(os, v, "  ");
    } else if (is_flat_map(v)) {
      os << k << ":\n";
      std::size_t w = 0;
      for (const auto& [kk, vv] : v.items()) w = std::max(w, kk.size());
      for (const auto& [kk, vv] : v.items()) os << "  " << kk << std::string(w - kk.size() + 2, ' ') << cell(vv) << '\n';
    } else {
      os << k << std::string(width - k.size() + 2, ' ') << cell(v) << '\n';
    }
  }
}

// ---------------------------------------------------------------- dispatch

Json run_command(const std::string& cmd, const Options& o, int& extra_status) {
  char* raw = nullptr;
  const int flags = q_flags(o);
  if (cmd == "rootsys") {
    RootSys rs(o);
    check(qflag_rootsys_json(rs.get(), &raw));
  } else if (cmd == "weights" || cmd == "fmatrix") {
    RootSys rs(o);
    const auto l = lambda_of(o);
    check(cmd == "weights" ? qflag_weights(rs.get(), l.data(), l.size(), &raw)
                           : qflag_fmatrix(rs.get(), l.data(), l.size(), &raw));
  } else if (cmd == "qdim") {
    RootSys rs(o);
    const auto l = lambda_of(o);
    check(qflag_qdim(rs.get(), l.data(), l.size(), o.route.c_str(), optional_q(o), flags, &raw));
  } else if (cmd == "haar-p0") {
    RootSys rs(o);
    check(qflag_haar_p0(rs.get(), optional_q(o), flags, &raw));
  } else if (cmd == "haar-alambda") {
    RootSys rs(o);
    const auto l = lambda_of(o);
    check(qflag_haar_alambda(rs.get(), l.data(), l.size(), optional_q(o), flags, &raw));
  } else if (cmd == "haar-diag") {
    RootSys rs(o);
    if (o.m_list.empty()) throw UsageError("--m is required");
    const auto m = parse_int_list(o.m_list, "--m");
    check(qflag_haar_diag(rs.get(), m.data(), m.size(), optional_q(o), flags, &raw));
  } else if (cmd == "su2-haar") {
    if (o.word.empty()) throw UsageError("--word is required");
    check(qflag_su2_haar(o.word.c_str(), required_q(o), flags, o.trunc, &raw));
  } else if (cmd == "su2-ortho") {
    if (o.commutation) check(qflag_su2_commutation(required_q(o), flags, o.trunc, o.lambda_coord, &raw));
    else check(qflag_su2_ortho(required_q(o), flags, o.trunc, &raw));
  } else if (cmd == "soibelman-spectrum" || cmd == "soibelman-gap") {
    RootSys rs(o);
    const auto l = lambda_of(o);
    std::vector<int> word;
    for (auto x : parse_int_list(o.word, "--word")) word.push_back(static_cast<int>(x));
    if (cmd == "soibelman-spectrum") {
      const double cutoff = o.cutoff.empty() ? 0.0 : parse_number(o.cutoff, "--cutoff");
      if (!o.cutoff.empty() && !(cutoff > 0)) throw UsageError("--cutoff must be positive");
      check(qflag_soibelman_spectrum(rs.get(), l.data(), l.size(), word.empty() ? nullptr : word.data(), word.size(),
                                     required_q(o), flags, o.trunc, cutoff, &raw));
    } else {
      long n = -1;
      if (o.n != "inf") {
        const auto v = parse_int_list(o.n, "--n");
        if (v.size() != 1) throw UsageError("--n: expected an integer or 'inf'");
        n = static_cast<long>(v[0]);
        if (n < o.m) throw UsageError("--n must be at least --m");
      }
      check(qflag_soibelman_gap(rs.get(), l.data(), l.size(), word.empty() ? nullptr : word.data(), word.size(),
                                required_q(o), flags, o.trunc, o.m, n, &raw));
    }
  } else if (cmd == "classify") {
    if (o.spec.empty()) throw UsageError("--spec is required");
    std::ifstream in(o.spec);
    if (!in) throw UsageError("--spec: cannot read '" + o.spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    check(qflag_classify(buf.str().c_str(), &raw));
  } else if (cmd == "selftest") {
    int failed = 0;
    check(qflag_selftest(&raw, &failed));
    extra_status = failed == 0 ? 0 : kExitDomain;
  }
  return take(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and truncated computations for q-deformed compact groups and their flag manifolds"};
  app.require_subcommand(1);
  Options o;

  auto add_type = [&](CLI::App* s) {
    s->add_option("--type", o.type, "Cartan type letter (with --rank) or full name such as B2")->required();
    s->add_option("--rank", o.rank, "Rank when --type is a single letter");
  };
  auto add_q = [&](CLI::App* s) {
    s->add_option("--q", o.q, "Deformation parameter as a rational p/q (a decimal with --float)");
    s->add_flag("--float", o.as_float, "Read --q as a floating point number");
  };
  auto add_eval = [&](CLI::App* s) {
    add_q(s);
    s->add_flag("--eval", o.eval, "Evaluate at --q");
    s->add_flag("--allow-outside", o.allow_outside, "Allow evaluation at q outside (0,1)");
  };
  auto add_lambda = [&](CLI::App* s) {
    s->add_option("--lambda", o.lambda, "Weight coordinates in the fundamental weight basis, e.g. 1,0")->required();
  };
  auto add_trunc = [&](CLI::App* s) {
    s->add_option("--N", o.trunc, "Truncation dimension (default QFLAG_TRUNC_N or 32)")->check(CLI::PositiveNumber);
  };

  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    subs.emplace_back(name, s);
    return s;
  };

  add_type(sub("rootsys", "Cartan data, longest element and positive roots"));
  {
    auto* s = sub("weights", "Weight multiplicities of L(lambda)");
    add_type(s);
    add_lambda(s);
  }
  {
    auto* s = sub("qdim", "Quantum dimension of L(lambda) as a Laurent polynomial");
    add_type(s);
    add_lambda(s);
    add_eval(s);
    s->add_option("--route", o.route, "product, weights or character")->check(CLI::IsMember({"product", "weights", "character"}));
  }
  {
    auto* s = sub("fmatrix", "Exponents of the diagonal F matrix with multiplicities");
    add_type(s);
    add_lambda(s);
  }
  {
    auto* s = sub("haar-p0", "Haar state of the minimal projection p0");
    add_type(s);
    add_eval(s);
  }
  {
    auto* s = sub("haar-alambda", "h(|a_lambda|^2) by both formulas");
    add_type(s);
    add_lambda(s);
    add_eval(s);
  }
  {
    auto* s = sub("haar-diag", "Haar mass of a diagonal projection");
    add_type(s);
    add_eval(s);
    s->add_option("--m", o.m_list, "Grid index, one entry per positive root")->required();
  }
  {
    auto* s = sub("su2-haar", "Haar state of a word in the SU_q(2) generators");
    add_q(s);
    add_trunc(s);
    s->add_option("--word", o.word, "Word such as \"x x*\" or \"u*u\"")->required();
  }
  {
    auto* s = sub("su2-ortho", "SU_q(2) orthogonality relations");
    add_q(s);
    add_trunc(s);
    s->add_flag("--commutation", o.commutation, "Check the commutation relations with |a_Lambda| instead");
    s->add_option("--Lambda", o.lambda_coord, "Highest weight coordinate for --commutation");
  }
  for (const char* name : {"soibelman-spectrum", "soibelman-gap"}) {
    auto* s = sub(name, std::string(name) == "soibelman-gap" ? "Norm of |a_lambda|^m - |a_lambda|^n" : "Spectrum of |a_lambda|");
    add_type(s);
    add_lambda(s);
    add_q(s);
    add_trunc(s);
    s->add_option("--word", o.word, "Reduced word, e.g. 1,2,1 (default: longest element)");
    if (std::string(name) == "soibelman-gap") {
      s->add_option("--m", o.m, "Power m")->check(CLI::PositiveNumber);
      s->add_option("--n", o.n, "Power n or 'inf'");
    } else {
      s->add_option("--cutoff", o.cutoff, "Smallest eigenvalue to report (default q^12)");
    }
  }
  sub("classify", "Classify a product type action from a JSON spec")->add_option("--spec", o.spec, "Spec file")->required();
  sub("selftest", "Run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::string cmd;
  for (const auto& [name, s] : subs)
    if (s->parsed()) cmd = name;

  try {
    int status = 0;
    const Json result = run_command(cmd, o, status);
    if (o.format == "table") print_table(std::cout, result);
    else std::cout << result.dump() << '\n';
    return status;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CallError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.status == QFLAG_ERR_INVALID ? kExitUsage : kExitDomain;
  }
}
