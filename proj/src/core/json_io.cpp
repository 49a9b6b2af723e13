#include "waring/json_io.hpp"

#include <cmath>

namespace waring::io {

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(const CVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

json to_json(const HomogeneousForm& f) { return {{"n", f.n()}, {"d", f.degree()}, {"coeffs", to_json(f.coeffs())}}; }

json to_json(const Decomposition& dec) {
  json terms = json::array();
  for (const auto& t : dec.terms()) terms.push_back({{"lambda", to_json(t.weight)}, {"L", to_json(t.form.coords())}});
  return {{"d", dec.degree()}, {"terms", terms}};
}

json to_json(const VspSample& s) {
  return {{"method", s.method},
          {"parameter", to_json(s.parameter)},
          {"decomposition", to_json(s.decomposition)},
          {"residual", s.residual}};
}

json to_json(const PencilResult& p) {
  json verts = json::array();
  for (const auto& v : p.vertices) verts.push_back(to_json(v.coords()));
  return {{"eigenvalues", to_json(p.eigenvalues)},
          {"vertices", verts},
          {"decomposition", to_json(p.decomposition)},
          {"residual", p.residual}};
}

json to_json(const ChainCertificate& c) {
  json seq = json::array();
  for (const auto& d : c.sequence) seq.push_back(to_json(d));
  json links = json::array();
  for (const auto& [i, j] : c.links) links.push_back(json::array({i, j}));
  return {{"sequence", seq}, {"links", links}};
}

json to_json(const SecantReport& r) {
  return {{"n", r.n},
          {"d", r.d},
          {"h", r.h},
          {"seed", r.seed},
          {"expected_dim", r.expected_dim},
          {"computed_dim", r.computed_dim},
          {"defective", r.defective},
          {"vsp_dim_formula", r.vsp_dim_formula}};
}

json to_json(const PolyhedronCertificate& c) {
  json j = {{"verdict", c.verdict},
            {"inclusion_defect", c.inclusion_defect},
            {"minimality_margin", std::isfinite(c.minimality_margin) ? json(c.minimality_margin) : json(nullptr)}};
  j["minimality_witness"] = c.minimality_witness ? json(*c.minimality_witness) : json(nullptr);
  return j;
}

json to_json(const CatalecticantMatrix& m) {
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& r : m.rows) rows.push_back(r.label("x"));
  for (const auto& c : m.cols) cols.push_back(c.label("xi"));
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i)
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) entries.push_back(to_json(m.entries(i, j)));
  return {{"n", m.n},
          {"t", m.t},
          {"d", m.d},
          {"shape", json::array({m.entries.rows(), m.entries.cols()})},
          {"row_labels", rows},
          {"col_labels", cols},
          {"matrix", entries}};
}

json to_json(const ApolarBasis& b) {
  json basis = json::array();
  for (int k = 0; k < b.dim(); ++k) basis.push_back(to_json(CVector(b.basis.col(k))));
  json labels = json::array();
  for (const auto& e : monomial_basis(b.n, b.t)) labels.push_back(e.label("xi"));
  return {{"n", b.n}, {"t", b.t}, {"dim", b.dim()}, {"labels", labels}, {"basis", basis}};
}

json to_json(const Tolerances& t) {
  return {{"rank", t.rank},         {"residual", t.residual}, {"inclusion", t.inclusion},
          {"distinct", t.distinct}, {"pivot", t.pivot},       {"weight", t.weight}};
}

// ---------------------------------------------------------------------------

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(ErrorKind::InvalidArgument, std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::InvalidArgument, std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(ErrorKind::InvalidArgument, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(ErrorKind::InvalidArgument, "a complex number is encoded as [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector vector_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidArgument, "expected an array of [re, im] pairs");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

HomogeneousForm form_from_json(const json& j) {
  const int n = int_field(j, "n");
  const int d = int_field(j, "d");
  if (n < 0 || d < 0) fail(ErrorKind::InvalidArgument, "form needs n >= 0 and d >= 0");
  return {n + 1, d, vector_from_json(field(j, "coeffs"))};
}

Decomposition decomposition_from_json(const json& j, const Tolerances& tol) {
  const int d = int_field(j, "d");
  const json& ts = field(j, "terms");
  if (!ts.is_array()) fail(ErrorKind::InvalidArgument, "field 'terms' must be an array");
  std::vector<Term> terms;
  for (const auto& t : ts) terms.push_back({complex_from_json(field(t, "lambda")), LinearForm(vector_from_json(field(t, "L")))});
  return Decomposition(d, std::move(terms), tol);
}

ChainCertificate chain_from_json(const json& j, const Tolerances& tol) {
  ChainCertificate c;
  for (const auto& d : field(j, "sequence")) c.sequence.push_back(decomposition_from_json(d, tol));
  for (const auto& l : field(j, "links")) {
    if (!l.is_array() || l.size() != 2) fail(ErrorKind::InvalidArgument, "a link is a pair of indices");
    c.links.emplace_back(l[0].get<int>(), l[1].get<int>());
  }
  return c;
}

ConicPlane conic_plane_from_json(const json& j) {
  if (j.is_array() && j.size() == 2) return {vector_from_json(j[0]), vector_from_json(j[1])};
  return {vector_from_json(field(j, "h1")), vector_from_json(field(j, "h2"))};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidArgument, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace waring::io
