#include "doctest.h"

#include <fstream>

#include "covertower/enumerate.hpp"
#include "covertower/registry.hpp"
#include "io.hpp"

using namespace covertower;

namespace {

const Surface S2(2);

CoverSpec single_swap(int generator) {
  std::vector<Perm> perms(4, Perm{0, 1});
  perms[static_cast<std::size_t>(generator - 1)] = Perm{1, 0};
  return CoverSpec(S2, perms);
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidDocument;
}

}  // namespace

TEST_CASE("cover documents round-trip and use 1-based sheets") {
  for (const auto& c : enumerate_covers_up_to(S2, 3)) {
    const auto doc = io::document("cover", io::cover_json(c));
    CHECK(doc.at("schema") == "covertower/1");
    CHECK(io::parse_cover(io::Json::parse(doc.dump())) == c);
  }
  const auto j = io::cover_json(single_swap(1));
  CHECK(j.at("perms") == io::Json::parse("[[2,1],[1,2],[1,2],[1,2]]"));
  // Loose labelling is canonicalized on the way in.
  auto loose = io::Json::parse(R"({"type":"cover","genus":2,"perms":[[1,3,2],[1,2,3],[2,1,3],[1,2,3]]})");
  CHECK(io::parse_cover(loose).degree() == 3);
  CHECK(code_of([] { io::parse_cover(io::Json::parse(R"({"genus":2,"perms":[[1,1],[1,2],[1,2],[1,2]]})")); }) ==
        ErrorCode::BadDegree);
  CHECK(code_of([] { io::parse_cover(io::Json::parse(R"({"genus":2})")); }) == ErrorCode::InvalidDocument);
  CHECK(code_of([] { io::parse_cover(io::Json::parse(R"({"type":"cycle","genus":2,"perms":[]})")); }) ==
        ErrorCode::InvalidDocument);
  CHECK(code_of([] { io::parse_cover(io::Json::parse(R"({"schema":"covertower/9","genus":2,"perms":[[1],[1],[1],[1]]})")); }) ==
        ErrorCode::InvalidDocument);
}

TEST_CASE("rationals") {
  CHECK(io::rational_string(Rational(3, 6)) == "1/2");
  CHECK(io::rational_string(Rational(-4)) == "-4/1");
  CHECK(io::parse_rational(io::Json("7/14")) == Rational(1, 2));
  CHECK(io::parse_rational(io::Json(5)) == 5);
  CHECK(io::parse_rational(io::Json("-3")) == -3);
  CHECK(code_of([] { io::parse_rational(io::Json("1/0")); }) == ErrorCode::InvalidDocument);
  CHECK(code_of([] { io::parse_rational(io::Json("x/2")); }) == ErrorCode::InvalidDocument);
  CHECK(code_of([] { io::parse_rational(io::Json(0.5)); }) == ErrorCode::InvalidDocument);
}

TEST_CASE("cycle, class and element documents") {
  const auto k = CoverRegistry::global().complex(single_swap(1));
  for (const auto& z : homology_basis(k)) {
    const auto back = io::parse_cycle(io::Json::parse(io::cycle_json(z).dump()));
    CHECK(back == z);
    CHECK(limit_equal(io::parse_element(io::element_json(LimitElement(z))), LimitElement(z)));
  }
  const auto u = HomologyClass({1, -2, 0, 3});
  Surface s(3);
  CHECK(io::parse_class(io::class_json(S2, u), &s) == u);
  CHECK(s == S2);
  CHECK(limit_equal(io::parse_element(io::class_json(S2, u)), LimitElement::from_class(S2, u)));
  CHECK(code_of([] { io::parse_class(io::Json::parse(R"({"genus":2,"coords":[1,0]})")); }) ==
        ErrorCode::InvalidDocument);
  // A chain that is not closed.
  auto open = io::Json::parse(io::cycle_json(transfer(u, k)).dump());
  open["edges"] = io::Json::parse("[[1,1,1]]");
  CHECK(code_of([&] { io::parse_cycle(open); }) == ErrorCode::NotACycle);
  open["edges"] = io::Json::parse("[[1,3,1]]");
  CHECK(code_of([&] { io::parse_cycle(open); }) == ErrorCode::InvalidDocument);
}

TEST_CASE("track documents") {
  const auto t = three_branch_track(S2);
  const auto w = to_weights({2, 1, 1});
  const auto j = io::track_json(t, &w);
  CHECK(io::parse_track(j) == t);
  CHECK(io::parse_weights(j) == w);
  CHECK_FALSE(io::parse_weights(io::track_json(t)).has_value());
  const auto shipped = io::read_document(COVERTOWER_DATA_DIR "/three_branch_track.json");
  CHECK(io::parse_track(shipped) == t);
  CHECK(io::parse_weights(shipped) == w);
  const auto e = io::parse_element(shipped);
  CHECK(e.kind() == PayloadKind::Track);
  CHECK(limit_equal(io::parse_element(io::element_json(e)), e));

  const auto lifted = lift_track(t, single_swap(1)).track;
  CHECK(io::parse_track(io::track_json(lifted)) == lifted);
  auto bad = j;
  bad["weights"] = io::Json::parse(R"(["1/1","1/1","1/1"])");
  CHECK(code_of([&] { io::parse_element(bad); }) == ErrorCode::SwitchViolation);
  bad = j;
  bad["switches"][0]["a"][0][1] = "middle";
  CHECK(code_of([&] { io::parse_track(bad); }) == ErrorCode::InvalidDocument);
}

TEST_CASE("vaut documents") {
  const auto auts = genus2_automorphisms();
  const auto v = restrict_automorphism(auts[5], single_swap(1));
  const auto j = io::vaut_json(v);
  CHECK(j.at("base_genus") == 2);
  const auto back = io::parse_vaut(io::Json::parse(j.dump()));
  CHECK(back.left == v.left);
  CHECK(back.right == v.right);
  CHECK(back.forward == v.forward);
  CHECK(back.backward == v.backward);
  auto bad = j;
  bad["identification"]["forward"][0] = io::Json::parse("[2]");
  CHECK(code_of([&] { io::parse_vaut(bad); }) == ErrorCode::InvalidIdentification);
  bad = j;
  bad["identification"]["forward"][0] = io::Json::parse("[9]");
  CHECK(code_of([&] { io::parse_vaut(bad); }) == ErrorCode::InvalidDocument);
}

TEST_CASE("shipped automorphism list matches the built-in one") {
  const auto shipped = io::parse_automorphisms(io::read_document(COVERTOWER_DATA_DIR "/genus2_auts.json"));
  const auto builtin = genus2_automorphisms();
  REQUIRE(shipped.size() == builtin.size());
  for (std::size_t i = 0; i < builtin.size(); ++i) {
    CHECK(shipped[i].name == builtin[i].name);
    CHECK(shipped[i].images == builtin[i].images);
    CHECK(shipped[i].inverse_images == builtin[i].inverse_images);
  }
  auto doc = io::automorphisms_json(S2, builtin);
  doc["automorphisms"][0]["images"][1] = io::Json::parse("[1]");
  CHECK(code_of([&] { io::parse_automorphisms(doc); }) == ErrorCode::InvalidAutomorphism);
}

TEST_CASE("rendering") {
  const auto doc = io::document("cover", io::cover_json(single_swap(2)));
  const auto text = io::render(doc);
  CHECK(text.rfind("{\n  \"schema\": \"covertower/1\",\n  \"type\": \"cover\",", 0) == 0);
  CHECK(text.find("\"perms\": [[1,2],[2,1],[1,2],[1,2]]") != std::string::npos);
  CHECK(io::Json::parse(text) == doc);
  CHECK(code_of([] { io::read_document("/nonexistent/file.json"); }) == ErrorCode::InvalidDocument);
}
