#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "waring/waring.h"

using nlohmann::json;

namespace {

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  waring_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("version and tolerances") {
  CHECK(std::strlen(waring_version()) > 0);
  const waring_tolerances t = waring_default_tolerances();
  CHECK(t.rank == 1e-10);
  CHECK(t.residual == 1e-8);
  char* s = nullptr;
  REQUIRE(waring_tolerances_json(nullptr, &s) == WARING_OK);
  CHECK(take(s)["pivot"] == 1e-12);
  CHECK(waring_derive_seed(1, 2) == waring_derive_seed(1, 2));
  CHECK(waring_derive_seed(1, 2) != waring_derive_seed(1, 3));
}

TEST_CASE("forms through the C API") {
  const double coeffs[] = {1, 0, 0, 0, 0, 0, 1, 0};  // x0^3 + x1^3
  waring_form* f = nullptr;
  REQUIRE(waring_form_create(1, 3, coeffs, 4, &f) == WARING_OK);
  CHECK(waring_form_n(f) == 1);
  CHECK(waring_form_degree(f) == 3);
  CHECK(waring_form_num_coeffs(f) == 4);
  double back[8];
  REQUIRE(waring_form_coeffs(f, back, 8) == WARING_OK);
  CHECK(std::memcmp(back, coeffs, sizeof coeffs) == 0);
  CHECK(waring_form_coeffs(f, back, 4) == WARING_ERR_INVALID_ARGUMENT);

  char* s = nullptr;
  REQUIRE(waring_catalecticant_json(f, 2, nullptr, &s) == WARING_OK);
  const json cat = take(s);
  CHECK(cat["rank"] == 2);
  CHECK(cat["shape"] == json::array({2, 3}));
  CHECK(cat["matrix"][0] == json::array({6.0, 0.0}));

  REQUIRE(waring_apolar_space_json(f, 2, nullptr, &s) == WARING_OK);
  CHECK(take(s)["dim"] == 1);

  waring_form* g = nullptr;
  CHECK(waring_form_create(1, 3, coeffs, 3, &g) == WARING_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(waring_last_error()) > 0);
  CHECK(g == nullptr);
  CHECK(waring_form_from_json("{\"n\":1,", &g) == WARING_ERR_INVALID_ARGUMENT);
  CHECK(std::string(waring_last_error()).find("byte") != std::string::npos);
  CHECK(waring_form_n(nullptr) == -1);
  CHECK(waring_form_to_json(nullptr, &s) == WARING_ERR_INVALID_ARGUMENT);
  waring_form_free(f);
  waring_form_free(nullptr);
}

TEST_CASE("decompose, verify and dimension") {
  waring_form* f = nullptr;
  REQUIRE(waring_form_random(2, 3, 7, &f) == WARING_OK);
  const double u[] = {1, 0, 2, 0, 3, 0};
  waring_sample* s = nullptr;
  REQUIRE(waring_plane_cubic4(f, u, 3, nullptr, &s) == WARING_OK);
  CHECK(waring_sample_residual(s) <= 1e-8);
  char* text = nullptr;
  REQUIRE(waring_sample_to_json(s, &text) == WARING_OK);
  const json sj = take(text);
  CHECK(sj["method"] == "dk");
  CHECK(sj["decomposition"]["terms"].size() == 4);

  waring_decomposition* dec = nullptr;
  REQUIRE(waring_sample_decomposition(s, &dec) == WARING_OK);
  CHECK(waring_decomposition_size(dec) == 4);
  int verdict = 0;
  REQUIRE(waring_verify_polyhedron(f, dec, nullptr, &verdict, &text) == WARING_OK);
  CHECK(verdict == 1);
  CHECK(take(text)["verdict"] == true);
  int dim = -1;
  REQUIRE(waring_tangent_dimension(f, dec, nullptr, &dim) == WARING_OK);
  CHECK(dim == 2);
  CHECK(waring_vsp_dim_formula(2, 3, 4) == 2);

  double param[6];
  REQUIRE(waring_plane_cubic_parameter(f, dec, param, 6) == WARING_OK);
  waring_sample* again = nullptr;
  REQUIRE(waring_plane_cubic4(f, param, 3, nullptr, &again) == WARING_OK);
  waring_decomposition* dec2 = nullptr;
  REQUIRE(waring_sample_decomposition(again, &dec2) == WARING_OK);
  double dist = 1.0;
  REQUIRE(waring_decomposition_distance(dec, dec2, &dist) == WARING_OK);
  CHECK(dist < 1e-6);

  REQUIRE(waring_decomposition_to_json(dec, &text) == WARING_OK);
  const std::string encoded = json(take(text)).dump();
  waring_decomposition* parsed = nullptr;
  REQUIRE(waring_decomposition_from_json(encoded.c_str(), nullptr, &parsed) == WARING_OK);
  REQUIRE(waring_decomposition_distance(dec, parsed, &dist) == WARING_OK);
  CHECK(dist == 0.0);

  waring_decomposition_free(parsed);
  waring_decomposition_free(dec2);
  waring_sample_free(again);
  waring_decomposition_free(dec);
  waring_sample_free(s);
  waring_form_free(f);
}

TEST_CASE("status codes follow the error kind") {
  const double xy[] = {0, 0, 1, 0, 0, 0};  // x0 x1
  waring_form* f = nullptr;
  REQUIRE(waring_form_create(1, 2, xy, 3, &f) == WARING_OK);
  waring_sample* s = nullptr;
  const double bad[] = {1, 0, 0, 0};
  CHECK(waring_sylvester(f, 2, bad, 2, nullptr, &s) == WARING_ERR_REJECTED);
  CHECK(waring_sylvester(f, 3, bad, 2, nullptr, &s) == WARING_ERR_PRECONDITION);
  CHECK(waring_sample_seeded(f, "nope", 2, 1, nullptr, &s) == WARING_ERR_INVALID_ARGUMENT);
  const double good[] = {1, 0, 1, 0};
  REQUIRE(waring_sylvester(f, 2, good, 2, nullptr, &s) == WARING_OK);
  waring_sample_free(s);
  waring_form_free(f);
}

TEST_CASE("seeded samplers and chains") {
  waring_form* q = nullptr;
  REQUIRE(waring_form_random(2, 2, 3, &q) == WARING_OK);
  for (const char* m : {"pencil", "quadric", "conic"}) {
    waring_sample* s = nullptr;
    REQUIRE(waring_sample_seeded(q, m, 3, 5, nullptr, &s) == WARING_OK);
    CHECK(waring_sample_residual(s) <= 1e-8);
    waring_sample_free(s);
  }
  waring_sample *sa = nullptr, *sb = nullptr;
  REQUIRE(waring_sample_seeded(q, "quadric", 6, 1, nullptr, &sa) == WARING_OK);
  REQUIRE(waring_sample_seeded(q, "quadric", 6, 2, nullptr, &sb) == WARING_OK);
  waring_decomposition *a = nullptr, *b = nullptr;
  REQUIRE(waring_sample_decomposition(sa, &a) == WARING_OK);
  REQUIRE(waring_sample_decomposition(sb, &b) == WARING_OK);
  char* cert = nullptr;
  REQUIRE(waring_chain_connect(q, a, b, 9, nullptr, &cert) == WARING_OK);
  const std::string cert_text = cert;
  waring_string_free(cert);
  int ok = 0;
  char* report = nullptr;
  REQUIRE(waring_chain_verify(q, cert_text.c_str(), nullptr, &ok, &report) == WARING_OK);
  CHECK(ok == 1);
  CHECK(take(report)["length"] == 3);

  waring_decomposition* step = nullptr;
  REQUIRE(waring_chain_step(q, a, 0, 4, nullptr, &step) == WARING_OK);
  CHECK(waring_decomposition_size(step) == 6);
  CHECK(waring_chain_step(q, a, 6, 4, nullptr, &step) == WARING_ERR_INVALID_ARGUMENT);
  waring_decomposition_free(step);
  waring_decomposition_free(a);
  waring_decomposition_free(b);
  waring_sample_free(sa);
  waring_sample_free(sb);
  waring_form_free(q);
}

TEST_CASE("secant reports") {
  char* s = nullptr;
  REQUIRE(waring_secant_report_json(2, 2, 2, 1, nullptr, &s) == WARING_OK);
  const json r = take(s);
  CHECK(r["defective"] == true);
  CHECK(r["computed_dim"] == 4);
  CHECK(waring_expected_secant_dim(2, 5, 7) == 20);
}

TEST_CASE("errors are reported per thread") {
  std::string other;
  std::thread t([&] {
    waring_form* g = nullptr;
    waring_form_create(1, 3, nullptr, 0, &g);
    other = waring_last_error();
  });
  t.join();
  waring_form* f = nullptr;
  REQUIRE(waring_form_random(1, 2, 1, &f) == WARING_OK);
  CHECK(std::string(waring_last_error()).empty());
  CHECK_FALSE(other.empty());
  waring_form_free(f);
}
