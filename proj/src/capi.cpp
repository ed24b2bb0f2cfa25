#include "qflag/qflag.h"

#include "error.hpp"
#include "haar.hpp"
#include "qcalc.hpp"
#include "repdata.hpp"
#include "selftest.hpp"
#include "serialize.hpp"
#include "soibelman.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct qflag_rootsys {
  qflag::RootSystem rs;
};

namespace {

using namespace qflag;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
qflag_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return QFLAG_OK;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return QFLAG_ERR_DOMAIN;
  } catch (const InvalidArgument& e) {
    g_last_error = e.what();
    return QFLAG_ERR_INVALID;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed JSON: ") + e.what();
    return QFLAG_ERR_INVALID;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return QFLAG_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QFLAG_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QFLAG_ERR_INTERNAL;
  }
}

template <class F>
qflag_status emit(char** out, F&& body) {
  return guard([&] {
    if (!out) throw InvalidArgument("output pointer is null");
    *out = nullptr;
    const Json j = body();
    *out = dup_string(j.dump());
  });
}

const RootSystem& root_system(const qflag_rootsys* rs) {
  if (!rs) throw InvalidArgument("root system handle is null");
  return rs->rs;
}

Weight read_weight(const RootSystem& rs, const int64_t* coords, size_t len) {
  if (len > 0 && !coords) throw InvalidArgument("weight pointer is null");
  Weight w(std::vector<std::int64_t>(coords, coords + len));
  rs.check_weight(w);
  return w;
}

QValue read_q(const char* text, int flags) {
  if (!text) throw InvalidArgument("q is required");
  QValue q;
  if (flags & QFLAG_Q_FLOAT) {
    char* end = nullptr;
    const double d = std::strtod(text, &end);
    if (end == text || *end != '\0') throw InvalidArgument(std::string("cannot parse q '") + text + "' as a float");
    q = d;
  } else {
    q = parse_rational(text);
  }
  check_q(q, (flags & QFLAG_Q_ALLOW_OUTSIDE) != 0);
  return q;
}

double read_q_double(const char* text, int flags) {
  const QValue q = read_q(text, flags & ~QFLAG_Q_ALLOW_OUTSIDE);
  return to_double(q);
}

int read_trunc(int trunc) { return trunc > 0 ? trunc : default_truncation(); }

DiagonalModel read_model(const qflag_rootsys* handle, const int64_t* lambda, size_t len, const int* word,
                         size_t word_len, const char* q, int q_flags, int trunc) {
  const RootSystem& rs = root_system(handle);
  const Weight w = read_weight(rs, lambda, len);
  WeylWord ww = rs.w0_word();
  if (word_len > 0) {
    if (!word) throw InvalidArgument("word pointer is null");
    ww.letters.assign(word, word + word_len);
  }
  return diagonal_model(rs, w, ww, read_q(q, q_flags & ~QFLAG_Q_ALLOW_OUTSIDE), read_trunc(trunc));
}

}  // namespace

extern "C" {

const char* qflag_last_error(void) { return g_last_error.c_str(); }

void qflag_string_free(char* s) { std::free(s); }

const char* qflag_version(void) { return "0.1.0"; }

qflag_status qflag_rootsys_new(const char* type, int rank, qflag_rootsys** out) {
  return guard([&] {
    if (!type || !out) throw InvalidArgument("null argument");
    *out = nullptr;
    const std::string t(type);
    const LieType lt = rank > 0 && t.size() == 1 ? LieType::make(t[0], rank) : LieType::parse(t);
    if (rank > 0 && lt.rank != rank) throw InvalidArgument("type '" + t + "' conflicts with rank " + std::to_string(rank));
    *out = new qflag_rootsys{RootSystem(lt)};
  });
}

void qflag_rootsys_free(qflag_rootsys* rs) { delete rs; }

int qflag_rootsys_rank(const qflag_rootsys* rs) { return rs ? rs->rs.rank() : 0; }

qflag_status qflag_rootsys_json(const qflag_rootsys* rs, char** out) {
  return emit(out, [&] { return to_json(root_system(rs)); });
}

qflag_status qflag_weights(const qflag_rootsys* handle, const int64_t* lambda, size_t len, char** out) {
  return emit(out, [&] {
    const RootSystem& rs = root_system(handle);
    return to_json(weight_table(rs, read_weight(rs, lambda, len)));
  });
}

qflag_status qflag_qdim(const qflag_rootsys* handle, const int64_t* lambda, size_t len, const char* route,
                        const char* q, int q_flags, char** out) {
  return emit(out, [&] {
    const RootSystem& rs = root_system(handle);
    const Weight w = read_weight(rs, lambda, len);
    const std::string r = route ? route : "product";
    LaurentPoly p;
    if (r == "product") p = quantum_dim_product(rs, w);
    else if (r == "weights") p = quantum_dim_weight_sum(rs, w, weight_table(rs, w));
    else if (r == "character") p = qdim_via_character(rs, w);
    else throw InvalidArgument("unknown route '" + r + "' (expected product, weights or character)");
    Json j = to_json(p);
    if (q) put_value(j, eval_laurent(p, read_q(q, q_flags), (q_flags & QFLAG_Q_ALLOW_OUTSIDE) != 0));
    return j;
  });
}

qflag_status qflag_fmatrix(const qflag_rootsys* handle, const int64_t* lambda, size_t len, char** out) {
  return emit(out, [&] {
    const RootSystem& rs = root_system(handle);
    const Weight w = read_weight(rs, lambda, len);
    return to_json(f_matrix_exponents(rs, weight_table(rs, w)));
  });
}

qflag_status qflag_haar_p0(const qflag_rootsys* handle, const char* q, int q_flags, char** out) {
  return emit(out, [&] {
    const RootSystem& rs = root_system(handle);
    const LaurentPoly p = haar_p0(rs);
    Json j{{"type", rs.type().name()}, {"h_p0", to_json(p)}};
    Json exps = Json::array();
    for (const auto& beta : rs.positive_roots()) exps.push_back(rho_exponent(rs, beta));
    j["density_exponents"] = exps;
    if (q) put_value(j, eval_laurent(p, read_q(q, q_flags), (q_flags & QFLAG_Q_ALLOW_OUTSIDE) != 0));
    return j;
  });
}

qflag_status qflag_haar_alambda(const qflag_rootsys* handle, const int64_t* lambda, size_t len, const char* q,
                                int q_flags, char** out) {
  return emit(out, [&] {
    const RootSystem& rs = root_system(handle);
    const auto h = haar_a_lambda_sq(rs, read_weight(rs, lambda, len));
    Json j = to_json(h);
    if (q)
      put_value(j, eval_rational_function(h.via_product, read_q(q, q_flags), (q_flags & QFLAG_Q_ALLOW_OUTSIDE) != 0));
    return j;
  });
}

qflag_status qflag_haar_diag(const qflag_rootsys* handle, const int64_t* m, size_t len, const char* q, int q_flags,
                             char** out) {
  return emit(out, [&] {
    const RootSystem& rs = root_system(handle);
    if (len > 0 && !m) throw InvalidArgument("m pointer is null");
    const std::vector<long> mm(m, m + len);
    for (long x : mm)
      if (x < 0) throw DomainError("grid indices must be non-negative");
    const LaurentPoly p = haar_diag_mass(rs, mm);
    Json j{{"m", mm}, {"mass", to_json(p)}};
    if (q) put_value(j, eval_laurent(p, read_q(q, q_flags), (q_flags & QFLAG_Q_ALLOW_OUTSIDE) != 0));
    return j;
  });
}

qflag_status qflag_su2_haar(const char* word, const char* q, int q_flags, int trunc, char** out) {
  return emit(out, [&] {
    if (!word) throw InvalidArgument("word is required");
    const double qd = read_q_double(q, q_flags);
    const auto letters = parse_su2_word(word);
    const auto v = su2_haar_eval(letters, qd, read_trunc(trunc));
    return Json{{"word", format_su2_word(letters)}, {"q", qd}, {"trunc", read_trunc(trunc)},
                {"value_float", v.value}, {"tail_bound", v.tail_bound}, {"weight", v.weight}};
  });
}

qflag_status qflag_su2_ortho(const char* q, int q_flags, int trunc, char** out) {
  return emit(out, [&] { return to_json(su2_orthogonality_suite(read_q_double(q, q_flags), read_trunc(trunc))); });
}

qflag_status qflag_su2_commutation(const char* q, int q_flags, int trunc, int64_t lambda_coord, char** out) {
  return emit(out, [&] {
    if (lambda_coord < 0) throw DomainError("Lambda must be dominant");
    return to_json(commutation_check(read_q_double(q, q_flags), read_trunc(trunc), lambda_coord));
  });
}

qflag_status qflag_soibelman_spectrum(const qflag_rootsys* rs, const int64_t* lambda, size_t len, const int* word,
                                      size_t word_len, const char* q, int q_flags, int trunc, double cutoff,
                                      char** out) {
  return emit(out, [&] {
    const DiagonalModel model = read_model(rs, lambda, len, word, word_len, q, q_flags, trunc);
    const double c = cutoff > 0 ? cutoff : std::pow(to_double(model.q), 12.0);
    Json j{{"model", to_json(model)}, {"cutoff", c}, {"spectrum", to_json(spectrum(model, c))}};
    Json units = Json::array();
    for (const auto& v : unit_eigenvectors(model)) units.push_back(v);
    j["unit_eigenvectors"] = units;
    return j;
  });
}

qflag_status qflag_soibelman_gap(const qflag_rootsys* rs, const int64_t* lambda, size_t len, const int* word,
                                 size_t word_len, const char* q, int q_flags, int trunc, int64_t m, int64_t n,
                                 char** out) {
  return emit(out, [&] {
    const DiagonalModel model = read_model(rs, lambda, len, word, word_len, q, q_flags, trunc);
    if (m < 1) throw DomainError("m must be at least 1");
    const double gap = n < 0 ? projection_gap(model, m) : power_norm_gap(model, m, n);
    const double bound = std::pow(to_double(model.q), static_cast<double>(m));
    Json j{{"m", m}, {"n", n < 0 ? Json("inf") : Json(n)}, {"gap", gap}, {"bound", bound}, {"within_bound", gap <= bound}};
    return j;
  });
}

qflag_status qflag_classify(const char* spec_json, char** out) {
  return emit(out, [&] {
    if (!spec_json) throw InvalidArgument("spec is required");
    return to_json(classify_action(action_spec_from_json(Json::parse(spec_json))));
  });
}

qflag_status qflag_selftest(char** out, int* failed) {
  return emit(out, [&] {
    const auto report = run_selftest();
    if (failed) *failed = report.failed();
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"passed", report.passed()}, {"failed", report.failed()}, {"checks", checks}};
  });
}

}  // extern "C"
