#include <doctest.h>

#include "assoc2/fixtures.hpp"
#include "assoc2/io.hpp"
#include "assoc2/random.hpp"

using namespace assoc2;
using io::Json;

namespace {

// Serialize, print, parse the text, read back.
template <class T, class Read>
T round_trip(const T& v, Read read) {
  Json doc = io::to_json(v);
  return read(Json::parse(doc.dump()), "mem");
}

bool same(const Extension2& a, const Extension2& b) {
  return a.total == b.total && a.base == b.base && a.sub0 == b.sub0 && a.sub1 == b.sub1 &&
         a.proj0 == b.proj0 && a.proj1 == b.proj1 && a.sigma0 == b.sigma0 && a.sigma1 == b.sigma1;
}

bool same(const XModExtension& a, const XModExtension& b) {
  return a.total == b.total && a.base == b.base && a.sub_p == b.sub_p && a.sub_h == b.sub_h &&
         a.proj_p == b.proj_p && a.proj_h == b.proj_h && a.sigma_p == b.sigma_p &&
         a.sigma_h == b.sigma_h;
}

Json algebra_doc(const std::string& tensors) {
  return Json::parse(R"({"format_version": "1", "kind": "algebra2", "dims": {"n0": 1, "n1": 1},
                         "tensors": )" + tensors + "}");
}

}  // namespace

TEST_CASE("2-algebra values survive serialization") {
  Rng rng(21);
  for (int k = 0; k < 10; ++k) {
    TwoTermAlgebra g = random_algebra(rng);
    CHECK(round_trip(g, io::read_algebra) == g);
    Representation2 r = adjoint_representation(g);
    CHECK(round_trip(r, io::read_representation) == r);
    Cochain2 c = random_cocycle(g, r, rng);
    CHECK(round_trip(c, io::read_cochain2) == c);
    Cochain1 l = unflatten_cochain1(r, random_tensor({cochain1_dim(r)}, rng).data());
    CHECK(round_trip(l, io::read_cochain1) == l);
    Homomorphism2 h = random_isomorphism(g, rng);
    CHECK(round_trip(h, io::read_homomorphism) == h);
    NijenhuisCandidate n{random_tensor({g.n0, g.n0}, rng), random_tensor({g.n1, g.n1}, rng),
                         random_tensor({g.n0, g.n0, g.n1}, rng)};
    NijenhuisCandidate nb = round_trip(n, io::read_nijenhuis);
    CHECK((nb.N0 == n.N0 && nb.N1 == n.N1 && nb.N2 == n.N2));
    HomotopyDerivation d{n.N0, n.N1, n.N2};
    HomotopyDerivation db = round_trip(d, io::read_derivation);
    CHECK((db.D0 == d.D0 && db.D1 == d.D1 && db.D2 == d.D2));
    Extension2 e = build_extension(g, r, c);
    CHECK(same(round_trip(e, io::read_extension), e));
    CHECK(round_trip(g.complex(), io::read_complex) == g.complex());
  }
}

TEST_CASE("crossed-module values survive serialization") {
  Rng rng(22);
  for (int k = 0; k < 10; ++k) {
    CrossedModule x = random_crossed_module(rng);
    CHECK(round_trip(x, io::read_crossed_module) == x);
    XModRepresentation r = xmod_adjoint(x);
    CHECK(round_trip(r, io::read_xmod_representation) == r);
    XCochain2 c = random_xcocycle(x, r, rng);
    CHECK(round_trip(c, io::read_xcochain2) == c);
    XCochain1 n{random_tensor({x.p.dim, x.p.dim}, rng), random_tensor({x.h.dim, x.h.dim}, rng)};
    CHECK(round_trip(n, io::read_xcochain1) == n);
    XModExtension e = xmod_build_extension(x, r, c);
    CHECK(same(round_trip(e, io::read_xmod_extension), e));
  }
}

TEST_CASE("serialization is sparse and ordered") {
  Json doc = io::to_json(fix_u());
  CHECK(doc["tensors"]["d"].empty());
  CHECK(doc["tensors"]["l2_00"].size() == 1);
  CHECK(doc["tensors"]["l2_00"][0]["value"] == "1");
  TwoTermAlgebra g(2, 1);
  g.l2_00.at({1, 0, 1}) = Rational(-3, 4);
  g.l2_00.at({0, 1, 0}) = 5;
  Json t = io::to_json(g)["tensors"]["l2_00"];
  REQUIRE(t.size() == 2);
  CHECK(t[0]["indices"] == Json::array({0, 1, 0}));
  CHECK(t[1]["value"] == "-3/4");
  CHECK(io::to_json(g).dump() == io::to_json(round_trip(g, io::read_algebra)).dump());
}

TEST_CASE("omitted entries and tensors read as zero") {
  TwoTermAlgebra g = io::read_algebra(algebra_doc(R"({"l2_00": [{"indices": [0,0,0], "value": "2/4"}]})"), "t");
  CHECK(g.l2_00.at({0, 0, 0}) == Rational(1, 2));
  CHECK(g.d.is_zero());
  CHECK(g.l3.is_zero());
}

TEST_CASE("malformed files are rejected with a location") {
  auto rejects = [](const Json& doc, const std::string& needle) {
    try {
      io::read_algebra(doc, "f.json");
    } catch (const InputError& e) {
      std::string m = e.what();
      CHECK_MESSAGE(m.find(needle) != std::string::npos, m);
      CHECK(m.rfind("f.json", 0) == 0);
      return;
    }
    FAIL("accepted: " << doc.dump());
  };
  rejects(algebra_doc(R"({"l2_00": [{"indices": [0,0,1], "value": "1"}]})"), "out of range");
  rejects(algebra_doc(R"({"l2_00": [{"indices": [0,0], "value": "1"}]})"), "expected 3 indices");
  rejects(algebra_doc(R"({"l2_00": [{"indices": [0,0,0], "value": "1"},
                                    {"indices": [0,0,0], "value": "1"}]})"),
          "duplicate");
  rejects(algebra_doc(R"({"l2_00": [{"indices": [0,0,0], "value": "x"}]})"), "value");
  rejects(algebra_doc(R"({"l2_00": [{"indices": [0,0,0], "value": 1}]})"), "value");
  rejects(algebra_doc(R"({"l2_00": [{"indices": [-1,0,0], "value": "1"}]})"), "non-negative");
  rejects(algebra_doc(R"({"l2_00": [{"indices": [0,0,0], "value": "1", "extra": 0}]})"), "extra");
  rejects(algebra_doc(R"({"mul": []})"), "unknown tensor");
  Json doc = algebra_doc("{}");
  doc["kind"] = "crossed_module";
  rejects(doc, "kind");
  doc = algebra_doc("{}");
  doc["format_version"] = "2";
  rejects(doc, "format_version");
  doc = algebra_doc("{}");
  doc["dims"].erase("n1");
  rejects(doc, "n1");
  doc = algebra_doc("{}");
  doc["colour"] = "red";
  rejects(doc, "colour");
}

TEST_CASE("extension index sets are validated") {
  Extension2 e = build_extension(fix_u(), adjoint_representation(fix_u()),
                                 zero_cochain2(adjoint_representation(fix_u())));
  Json doc = io::to_json(e);
  doc["sub0"] = Json::array({1, 1});
  CHECK_THROWS_AS(io::read_extension(doc, "e"), InputError);
  doc["sub0"] = Json::array({2});
  CHECK_THROWS_AS(io::read_extension(doc, "e"), InputError);
  doc["sub0"] = Json::array({1});
  doc["base"]["dims"]["n0"] = 2;
  CHECK_THROWS_AS(io::read_extension(doc, "e"), InputError);
}
