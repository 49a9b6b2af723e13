#include "waring/waring.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "waring/apolarity.hpp"
#include "waring/decompose.hpp"
#include "waring/json_io.hpp"
#include "waring/linalg.hpp"
#include "waring/random.hpp"
#include "waring/secant.hpp"

#ifndef WARING_VERSION_STRING
#define WARING_VERSION_STRING "0.0.0"
#endif

struct waring_form {
  waring::HomogeneousForm value;
};

struct waring_decomposition {
  waring::Decomposition value;
};

struct waring_sample {
  waring::VspSample value;
  waring::io::json extra;  // method-specific fields merged into the JSON output
};

namespace {

thread_local std::string g_last_error;

using waring::ErrorKind;
using waring::io::json;

waring_status to_status(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return WARING_ERR_INVALID_ARGUMENT;
    case ErrorKind::Precondition: return WARING_ERR_PRECONDITION;
    case ErrorKind::Rejected: return WARING_ERR_REJECTED;
    case ErrorKind::Internal: return WARING_ERR_INTERNAL;
  }
  return WARING_ERR_INTERNAL;
}

template <class Fn>
waring_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return WARING_OK;
  } catch (const waring::Error& e) {
    g_last_error = e.what();
    return to_status(e.kind());
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return WARING_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return WARING_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WARING_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) waring::fail(ErrorKind::InvalidArgument, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out_json) {
  need(out_json, "out_json");
  *out_json = dup_string(j.dump());
}

waring::Tolerances tolerances(const waring_tolerances* t) {
  if (t == nullptr) return waring::kDefaultTolerances;
  waring::Tolerances out;
  out.rank = t->rank;
  out.residual = t->residual;
  out.inclusion = t->inclusion;
  out.distinct = t->distinct;
  out.pivot = t->pivot;
  out.weight = t->weight;
  return out;
}

waring::CVector complex_vector(const double* data, size_t count) {
  if (count > 0) need(data, "vector data");
  waring::CVector v(static_cast<Eigen::Index>(count));
  for (size_t i = 0; i < count; ++i) v(static_cast<Eigen::Index>(i)) = {data[2 * i], data[2 * i + 1]};
  return v;
}

waring_sample* make_sample(waring::VspSample s, json extra = json::object()) {
  return new waring_sample{std::move(s), std::move(extra)};
}

}  // namespace

extern "C" {

const char* waring_version(void) { return WARING_VERSION_STRING; }

const char* waring_last_error(void) { return g_last_error.c_str(); }

void waring_string_free(char* s) { std::free(s); }

waring_tolerances waring_default_tolerances(void) {
  const waring::Tolerances& t = waring::kDefaultTolerances;
  return {t.rank, t.residual, t.inclusion, t.distinct, t.pivot, t.weight};
}

uint64_t waring_derive_seed(uint64_t seed, uint64_t tag) { return waring::derive_seed(seed, tag); }

waring_status waring_tolerances_json(const waring_tolerances* tol, char** out_json) {
  return guarded([&] { emit(waring::io::to_json(tolerances(tol)), out_json); });
}

// ---- forms ------------------------------------------------------------------

waring_status waring_form_create(int n, int d, const double* coeffs, size_t num_coeffs, waring_form** out) {
  return guarded([&] {
    need(out, "out");
    waring::require(n >= 0 && d >= 0, "form needs n >= 0 and d >= 0");
    *out = new waring_form{waring::HomogeneousForm(n + 1, d, complex_vector(coeffs, num_coeffs))};
  });
}

waring_status waring_form_from_json(const char* text, waring_form** out) {
  return guarded([&] {
    need(text, "json");
    need(out, "out");
    *out = new waring_form{waring::io::form_from_json(waring::io::parse(text))};
  });
}

waring_status waring_form_to_json(const waring_form* f, char** out_json) {
  return guarded([&] {
    need(f, "form");
    emit(waring::io::to_json(f->value), out_json);
  });
}

waring_status waring_form_random(int n, int d, uint64_t seed, waring_form** out) {
  return guarded([&] {
    need(out, "out");
    *out = new waring_form{waring::random_form(n, d, seed)};
  });
}

waring_status waring_form_synthesize(const waring_decomposition* dec, int n, waring_form** out) {
  return guarded([&] {
    need(dec, "decomposition");
    need(out, "out");
    *out = new waring_form{waring::synthesize(dec->value, n + 1)};
  });
}

waring_status waring_form_clone(const waring_form* f, waring_form** out) {
  return guarded([&] {
    need(f, "form");
    need(out, "out");
    *out = new waring_form{f->value};
  });
}

int waring_form_n(const waring_form* f) { return f ? f->value.n() : -1; }
int waring_form_degree(const waring_form* f) { return f ? f->value.degree() : -1; }
size_t waring_form_num_coeffs(const waring_form* f) { return f ? static_cast<size_t>(f->value.coeffs().size()) : 0; }

waring_status waring_form_coeffs(const waring_form* f, double* out, size_t capacity) {
  return guarded([&] {
    need(f, "form");
    need(out, "out");
    const auto& c = f->value.coeffs();
    waring::require(capacity >= 2 * static_cast<size_t>(c.size()), "output buffer too small");
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      out[2 * i] = c(i).real();
      out[2 * i + 1] = c(i).imag();
    }
  });
}

void waring_form_free(waring_form* f) { delete f; }

// ---- decompositions -----------------------------------------------------------

waring_status waring_decomposition_from_json(const char* text, const waring_tolerances* tol,
                                             waring_decomposition** out) {
  return guarded([&] {
    need(text, "json");
    need(out, "out");
    *out = new waring_decomposition{waring::io::decomposition_from_json(waring::io::parse(text), tolerances(tol))};
  });
}

waring_status waring_decomposition_to_json(const waring_decomposition* dec, char** out_json) {
  return guarded([&] {
    need(dec, "decomposition");
    emit(waring::io::to_json(dec->value), out_json);
  });
}

waring_status waring_decomposition_random(int n, int d, int h, uint64_t seed, waring_decomposition** out) {
  return guarded([&] {
    need(out, "out");
    *out = new waring_decomposition{waring::random_decomposition(n, d, h, seed)};
  });
}

waring_status waring_decomposition_canonical(const waring_decomposition* dec, waring_decomposition** out) {
  return guarded([&] {
    need(dec, "decomposition");
    need(out, "out");
    *out = new waring_decomposition{waring::canonical_form(dec->value)};
  });
}

int waring_decomposition_size(const waring_decomposition* dec) { return dec ? dec->value.size() : -1; }
int waring_decomposition_degree(const waring_decomposition* dec) { return dec ? dec->value.degree() : -1; }

waring_status waring_decomposition_distance(const waring_decomposition* a, const waring_decomposition* b,
                                            double* out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = waring::decomposition_distance(a->value, b->value);
  });
}

waring_status waring_decomposition_residual(const waring_form* f, const waring_decomposition* dec, double* out) {
  return guarded([&] {
    need(f, "form");
    need(dec, "decomposition");
    need(out, "out");
    *out = waring::relative_residual(f->value, dec->value);
  });
}

void waring_decomposition_free(waring_decomposition* dec) { delete dec; }

// ---- apolarity ----------------------------------------------------------------

waring_status waring_catalecticant_json(const waring_form* f, int t, const waring_tolerances* tol, char** out_json) {
  return guarded([&] {
    need(f, "form");
    const auto m = waring::catalecticant(f->value, t);
    json j = waring::io::to_json(m);
    j["rank"] = waring::linalg::numerical_rank(m.entries, tolerances(tol).rank);
    emit(j, out_json);
  });
}

waring_status waring_apolar_space_json(const waring_form* f, int t, const waring_tolerances* tol, char** out_json) {
  return guarded([&] {
    need(f, "form");
    emit(waring::io::to_json(waring::apolar_space(f->value, t, tolerances(tol))), out_json);
  });
}

waring_status waring_verify_polyhedron(const waring_form* f, const waring_decomposition* dec,
                                       const waring_tolerances* tol, int* verdict, char** out_json) {
  return guarded([&] {
    need(f, "form");
    need(dec, "decomposition");
    std::vector<waring::LinearForm> forms;
    for (const auto& t : dec->value.terms()) forms.push_back(t.form);
    const waring::Tolerances tl = tolerances(tol);
    const auto cert = waring::is_polar_polyhedron(f->value, forms, tl);
    if (verdict) *verdict = cert.verdict ? 1 : 0;
    if (out_json) {
      json j = waring::io::to_json(cert);
      j["residual"] = waring::relative_residual(f->value, dec->value);
      emit(j, out_json);
    }
  });
}

// ---- decomposition algorithms ------------------------------------------------

waring_status waring_sylvester(const waring_form* f, int h, const double* u, size_t num_u,
                               const waring_tolerances* tol, waring_sample** out) {
  return guarded([&] {
    need(f, "form");
    need(out, "out");
    *out = make_sample(waring::sylvester_parametrize(f->value, h, complex_vector(u, num_u), tolerances(tol)));
  });
}

namespace {

waring_sample* pencil_sample(const waring::HomogeneousForm& g, waring::PencilResult p) {
  json extra = waring::io::to_json(p);
  extra.erase("decomposition");
  extra.erase("residual");
  return make_sample({"pencil", g.coeffs(), std::move(p.decomposition), p.residual}, std::move(extra));
}

}  // namespace

waring_status waring_pencil(const waring_form* f, const waring_form* g, const waring_tolerances* tol,
                            waring_sample** out) {
  return guarded([&] {
    need(f, "form");
    need(g, "pencil form");
    need(out, "out");
    *out = pencil_sample(g->value, waring::quadric_pencil_decompose(f->value, g->value, tolerances(tol)));
  });
}

waring_status waring_quadric_sample(const waring_form* f, int h, const waring_decomposition* extra,
                                    const waring_form* g, const waring_tolerances* tol, waring_sample** out) {
  return guarded([&] {
    need(f, "form");
    need(extra, "extra terms");
    need(g, "pencil form");
    need(out, "out");
    *out = make_sample(waring::quadric_sample_vsp(f->value, h, extra->value.terms(), g->value, tolerances(tol)));
  });
}

waring_status waring_conic4(const waring_form* f, const double* plane, size_t num_plane, const waring_tolerances* tol,
                            waring_sample** out) {
  return guarded([&] {
    need(f, "form");
    need(out, "out");
    waring::require(num_plane == 12, "a conic plane is two functionals of 6 complex coordinates");
    const waring::CVector p = complex_vector(plane, num_plane);
    *out = make_sample(waring::conic_vsp4_sample(f->value, {p.head(6), p.tail(6)}, tolerances(tol)));
  });
}

waring_status waring_plane_cubic4(const waring_form* f, const double* u, size_t num_u, const waring_tolerances* tol,
                                  waring_sample** out) {
  return guarded([&] {
    need(f, "form");
    need(out, "out");
    *out = make_sample(waring::plane_cubic_vsp4(f->value, complex_vector(u, num_u), tolerances(tol)));
  });
}

waring_status waring_plane_cubic_parameter(const waring_form* f, const waring_decomposition* dec, double* out,
                                           size_t capacity) {
  return guarded([&] {
    need(f, "form");
    need(dec, "decomposition");
    need(out, "out");
    waring::require(capacity >= 6, "output buffer needs 6 doubles");
    const waring::CVector u = waring::plane_cubic_parameter(f->value, dec->value);
    for (int i = 0; i < 3; ++i) {
      out[2 * i] = u(i).real();
      out[2 * i + 1] = u(i).imag();
    }
  });
}

waring_status waring_sample_seeded(const waring_form* f, const char* method, int h, uint64_t seed,
                                   const waring_tolerances* tol, waring_sample** out) {
  return guarded([&] {
    need(f, "form");
    need(method, "method");
    need(out, "out");
    const std::string m(method);
    const waring::Tolerances tl = tolerances(tol);
    if (m == "sylvester") {
      *out = make_sample(waring::sample_sylvester(f->value, h, seed, tl));
    } else if (m == "pencil") {
      // Reproduce the pencil form drawn by sample_pencil for the JSON parameter.
      waring::PencilResult p = waring::sample_pencil(f->value, seed, tl);
      json extra = waring::io::to_json(p);
      extra.erase("decomposition");
      extra.erase("residual");
      *out = make_sample({"pencil", p.eigenvalues, std::move(p.decomposition), p.residual}, std::move(extra));
    } else if (m == "quadric") {
      *out = make_sample(waring::sample_quadric(f->value, h, seed, tl));
    } else if (m == "conic") {
      *out = make_sample(waring::sample_conic(f->value, seed, tl));
    } else if (m == "dk") {
      *out = make_sample(waring::sample_plane_cubic(f->value, seed, tl));
    } else {
      waring::fail(ErrorKind::InvalidArgument, "unknown method '" + m + "'");
    }
  });
}

waring_status waring_sample_to_json(const waring_sample* s, char** out_json) {
  return guarded([&] {
    need(s, "sample");
    json j = waring::io::to_json(s->value);
    for (auto it = s->extra.begin(); it != s->extra.end(); ++it) j[it.key()] = it.value();
    emit(j, out_json);
  });
}

waring_status waring_sample_decomposition(const waring_sample* s, waring_decomposition** out) {
  return guarded([&] {
    need(s, "sample");
    need(out, "out");
    *out = new waring_decomposition{s->value.decomposition};
  });
}

double waring_sample_residual(const waring_sample* s) { return s ? s->value.residual : -1.0; }

void waring_sample_free(waring_sample* s) { delete s; }

// ---- chains and dimensions ------------------------------------------------------

waring_status waring_chain_step(const waring_form* f, const waring_decomposition* dec, int keep_index, uint64_t seed,
                                const waring_tolerances* tol, waring_decomposition** out) {
  return guarded([&] {
    need(f, "form");
    need(dec, "decomposition");
    need(out, "out");
    waring::ChainParams p;
    p.seed = seed;
    *out = new waring_decomposition{waring::chain_step(f->value, dec->value, keep_index, p, tolerances(tol))};
  });
}

waring_status waring_chain_connect(const waring_form* f, const waring_decomposition* a, const waring_decomposition* b,
                                   uint64_t seed, const waring_tolerances* tol, char** out_json) {
  return guarded([&] {
    need(f, "form");
    need(a, "a");
    need(b, "b");
    emit(waring::io::to_json(waring::chain_connect(f->value, a->value, b->value, seed, tolerances(tol))), out_json);
  });
}

waring_status waring_chain_verify(const waring_form* f, const char* cert_json, const waring_tolerances* tol, int* ok,
                                  char** out_json) {
  return guarded([&] {
    need(f, "form");
    need(cert_json, "certificate");
    const waring::Tolerances tl = tolerances(tol);
    const auto cert = waring::io::chain_from_json(waring::io::parse(cert_json), tl);
    const auto check = waring::verify_chain(f->value, cert, tl);
    if (ok) *ok = check.ok ? 1 : 0;
    if (out_json) {
      json j = {{"ok", check.ok},
                {"length", cert.sequence.size()},
                {"max_residual", check.max_residual},
                {"max_link_gap", check.max_link_gap}};
      if (!check.ok) j["problem"] = check.problem;
      emit(j, out_json);
    }
  });
}

waring_status waring_tangent_dimension(const waring_form* f, const waring_decomposition* dec,
                                       const waring_tolerances* tol, int* out) {
  return guarded([&] {
    need(f, "form");
    need(dec, "decomposition");
    need(out, "out");
    *out = waring::tangent_dimension(f->value, dec->value, tolerances(tol));
  });
}

int waring_vsp_dim_formula(int n, int d, int h) { return h * (n + 1) - waring::num_monomials(n, d); }

int waring_expected_secant_dim(int n, int d, int h) {
  if (h < 1 || n < 0 || d < 0) return -1;
  return waring::expected_secant_dim(n, d, h);
}

waring_status waring_secant_report_json(int n, int d, int h, uint64_t seed, const waring_tolerances* tol,
                                        char** out_json) {
  return guarded([&] { emit(waring::io::to_json(waring::terracini_dim(n, d, h, seed, tolerances(tol))), out_json); });
}

}  // extern "C"
