#include "doctest.h"
#include "helpers.hpp"
#include "waring/json_io.hpp"
#include "waring/random.hpp"

using namespace waring;
using namespace testing;
using waring::io::json;

TEST_CASE("form encoding round trips") {
  const HomogeneousForm f = random_form(2, 3, 1);
  const json j = io::to_json(f);
  CHECK(j["n"] == 2);
  CHECK(j["d"] == 3);
  CHECK(j["coeffs"].size() == 10);
  CHECK(io::form_from_json(io::parse(j.dump())).coeffs() == f.coeffs());
}

TEST_CASE("form parsing accepts plain numbers and reports problems") {
  const HomogeneousForm f = io::form_from_json(io::parse(R"({"n":1,"d":2,"coeffs":[1,[0,2],3]})"));
  CHECK(f.coeffs()(1) == Complex(0.0, 2.0));
  CHECK_THROWS_AS(io::form_from_json(io::parse(R"({"n":1,"d":2,"coeffs":[1,2]})")), Error);
  CHECK_THROWS_AS(io::form_from_json(io::parse(R"({"n":1,"coeffs":[1,2,3]})")), Error);
  CHECK_THROWS_AS(io::form_from_json(io::parse(R"({"n":1,"d":2,"coeffs":[1,"a",3]})")), Error);
  try {
    io::parse(R"({"n": 1, "d": })");
    FAIL("parse should throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}

TEST_CASE("decomposition encoding round trips and validates") {
  const Decomposition dec = random_decomposition(2, 3, 4, 2);
  const Decomposition back = io::decomposition_from_json(io::parse(io::to_json(dec).dump()));
  CHECK(decomposition_distance(dec, back) == 0.0);
  CHECK_THROWS_AS(io::decomposition_from_json(io::parse(R"({"d":2,"terms":[{"lambda":0,"L":[1,0]}]})")), Error);
  CHECK_THROWS_AS(io::decomposition_from_json(io::parse(R"({"d":2,"terms":[{"L":[1,0]}]})")), Error);
}

TEST_CASE("chain and conic plane encodings") {
  ChainCertificate c;
  c.sequence = {random_decomposition(2, 2, 5, 1), random_decomposition(2, 2, 5, 2)};
  c.links = {{1, 3}};
  const ChainCertificate back = io::chain_from_json(io::parse(io::to_json(c).dump()));
  REQUIRE(back.sequence.size() == 2);
  CHECK(back.links == c.links);

  const ConicPlane p = io::conic_plane_from_json(
      io::parse(R"({"h1":[1,0,0,0,0,0],"h2":[0,1,0,0,0,0]})"));
  CHECK(p.h1.size() == 6);
  CHECK(p.h2(1) == Complex(1.0));
  const ConicPlane q = io::conic_plane_from_json(io::parse(R"([[1,0,0,0,0,0],[0,1,0,0,0,0]])"));
  CHECK(q.h2(1) == Complex(1.0));
  CHECK_THROWS_AS(io::conic_plane_from_json(io::parse(R"([[1,0,0]])")), Error);
}

TEST_CASE("report encodings") {
  const json t = io::to_json(kDefaultTolerances);
  CHECK(t["rank"] == 1e-10);
  CHECK(t["pivot"] == 1e-12);
  SecantReport r;
  r.n = 2;
  r.d = 2;
  r.h = 2;
  r.defective = true;
  CHECK(io::to_json(r)["defective"] == true);
  PolyhedronCertificate c;
  c.minimality_witness = 2;
  CHECK(io::to_json(c)["minimality_witness"] == 2);
  CHECK(io::to_json(PolyhedronCertificate{})["minimality_witness"].is_null());
}
