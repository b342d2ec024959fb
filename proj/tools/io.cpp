#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "covertower/registry.hpp"

namespace covertower::io {

namespace {

Error invalid(const std::string& what) { return Error(ErrorCode::InvalidDocument, what); }

void expect_type(const Json& j, const char* type) {
  if (!j.is_object()) throw invalid(std::string("expected a ") + type + " object");
  if (j.contains("schema") && j.at("schema") != kSchema) {
    throw invalid("unsupported schema " + j.at("schema").dump());
  }
  if (j.contains("type") && j.at("type") != type) {
    throw invalid(std::string("expected type ") + type + ", got " + j.at("type").dump());
  }
}

int sheet_from(const Json& j, int degree) {
  const int s = j.get<int>();
  if (s < 1 || s > degree) throw invalid("sheet " + std::to_string(s) + " out of range");
  return s - 1;
}

Surface surface_from(const Json& j) {
  try {
    return Surface(j.get<int>());
  } catch (const Error& e) {
    throw invalid(e.what());
  }
}

Json half_json(const HalfBranch& h) {
  return Json::array({h.branch + 1, h.at_end ? "end" : "start"});
}

HalfBranch parse_half(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw invalid("half-branch must be [branch, end]");
  const auto end = j.at(1).get<std::string>();
  if (end != "start" && end != "end") throw invalid("half-branch end must be start or end");
  return HalfBranch{j.at(0).get<int>() - 1, end == "end"};
}

}  // namespace

Json document(const std::string& type, const Json& body) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = type;
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Json nested(const std::string& type, const Json& body) {
  Json j;
  j["type"] = type;
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw invalid(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("schema") || j.at("schema") != kSchema) {
    throw invalid(path + ": missing or unsupported schema (want " + kSchema + ")");
  }
  return j;
}

namespace {

bool flat(const Json& j) {
  if (j.is_object()) return false;
  if (!j.is_array()) return true;
  return std::all_of(j.begin(), j.end(), [](const Json& x) { return flat(x); });
}

// Objects one key per line; arrays holding no objects stay on one line.
void render_into(const Json& j, int depth, std::string& out) {
  if (flat(j)) {
    out += j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    render_into(*it, depth + 1, out);
  }
  out += "\n" + std::string(static_cast<std::size_t>(2 * depth), ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string render(const Json& j) {
  std::string out;
  render_into(j, 0, out);
  return out + "\n";
}

Json cover_json(const CoverSpec& c) {
  Json perms = Json::array();
  for (const auto& p : c.perms()) {
    Json row = Json::array();
    for (int x : p) row.push_back(x + 1);
    perms.push_back(std::move(row));
  }
  return nested("cover", {{"genus", c.base().genus()}, {"degree", c.degree()}, {"perms", perms}});
}

CoverSpec parse_cover(const Json& j) {
  return guarded([&] {
    expect_type(j, "cover");
    const auto base = surface_from(j.at("genus"));
    std::vector<Perm> perms;
    for (const auto& row : j.at("perms")) {
      Perm p;
      for (const auto& x : row) p.push_back(x.get<int>() - 1);
      perms.push_back(std::move(p));
    }
    if (j.contains("degree") && !perms.empty() &&
        j.at("degree").get<std::size_t>() != perms.front().size()) {
      throw invalid("degree field disagrees with the permutations");
    }
    return CoverSpec::from_loose(base, std::move(perms)).first;
  });
}

Json word_json(const GroupWord& w) { return Json(w.letters()); }

GroupWord parse_word(const Json& j, const Surface& s) {
  return guarded([&] {
    if (!j.is_array()) throw invalid("word must be an array of generator numbers");
    try {
      return reduce_word(s, GroupWord(j.get<std::vector<int>>()));
    } catch (const Error& e) {
      throw invalid(e.what());
    }
  });
}

std::string rational_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const Json& j) {
  return guarded([&]() -> Rational {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) throw invalid("rational must be an integer or a \"p/q\" string");
    const auto s = j.get<std::string>();
    try {
      const auto slash = s.find('/');
      if (slash == std::string::npos) return Rational(BigInt(s));
      const BigInt den(s.substr(slash + 1));
      if (den == 0) throw invalid("zero denominator in " + s);
      return Rational(BigInt(s.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
      throw invalid("malformed rational " + s);
    }
  });
}

Json class_json(const Surface& s, const HomologyClass& u) {
  return nested("class", {{"genus", s.genus()}, {"coords", u.coords}});
}

HomologyClass parse_class(const Json& j, Surface* surface) {
  return guarded([&] {
    expect_type(j, "class");
    const auto s = surface_from(j.at("genus"));
    HomologyClass u(j.at("coords").get<std::vector<std::int64_t>>());
    if (static_cast<int>(u.size()) != s.homology_rank()) {
      throw invalid("class needs " + std::to_string(s.homology_rank()) + " coordinates");
    }
    if (surface != nullptr) *surface = s;
    return u;
  });
}

Json cycle_json(const CoverCycle& z) {
  const auto& c = z.cover();
  Json edges = Json::array();
  for (int e = 0; e < c.num_edges(); ++e) {
    const auto x = z.coeffs()[static_cast<std::size_t>(e)];
    if (x != 0) edges.push_back(Json::array({c.edge_generator(e), c.edge_sheet(e) + 1, x}));
  }
  return nested("cycle", {{"cover", cover_json(c)}, {"edges", edges}});
}

CoverCycle parse_cycle(const Json& j) {
  return guarded([&] {
    expect_type(j, "cycle");
    const auto c = parse_cover(j.at("cover"));
    std::vector<std::int64_t> chain(static_cast<std::size_t>(c.num_edges()), 0);
    for (const auto& e : j.at("edges")) {
      const int k = e.at(0).get<int>();
      if (!c.base().contains(k) || k < 0) throw invalid("generator out of range");
      chain[static_cast<std::size_t>(c.edge_id(k, sheet_from(e.at(1), c.degree())))] +=
          e.at(2).get<std::int64_t>();
    }
    return CoverCycle(CoverRegistry::global().complex(c), std::move(chain));
  });
}

Json track_json(const TrainTrack& t, const Weights* w) {
  Json switches = Json::array();
  for (const auto& sw : t.switches()) {
    Json a = Json::array(), b = Json::array();
    for (const auto& h : sw.side_a) a.push_back(half_json(h));
    for (const auto& h : sw.side_b) b.push_back(half_json(h));
    switches.push_back({{"sheet", sw.sheet + 1}, {"a", a}, {"b", b}});
  }
  Json branches = Json::array();
  for (const auto& br : t.branches()) {
    Json jb{{"word", word_json(br.word)}};
    if (br.loop_sheet >= 0) jb["loop_sheet"] = br.loop_sheet + 1;
    branches.push_back(std::move(jb));
  }
  Json body{{"cover", cover_json(t.cover())}, {"switches", switches}, {"branches", branches}};
  if (w != nullptr) {
    Json ws = Json::array();
    for (const auto& x : *w) ws.push_back(rational_string(x));
    body["weights"] = ws;
  }
  return nested("track", body);
}

TrainTrack parse_track(const Json& j) {
  return guarded([&] {
    expect_type(j, "track");
    const auto c = parse_cover(j.at("cover"));
    std::vector<Switch> switches;
    for (const auto& js : j.at("switches")) {
      Switch sw;
      sw.sheet = sheet_from(js.at("sheet"), c.degree());
      for (const auto& h : js.at("a")) sw.side_a.push_back(parse_half(h));
      for (const auto& h : js.at("b")) sw.side_b.push_back(parse_half(h));
      switches.push_back(std::move(sw));
    }
    std::vector<Branch> branches;
    for (const auto& jb : j.at("branches")) {
      Branch br{parse_word(jb.at("word"), c.base()), -1};
      if (jb.contains("loop_sheet")) br.loop_sheet = sheet_from(jb.at("loop_sheet"), c.degree());
      branches.push_back(std::move(br));
    }
    return TrainTrack(c, std::move(switches), std::move(branches));
  });
}

std::optional<Weights> parse_weights(const Json& track_doc) {
  return guarded([&]() -> std::optional<Weights> {
    if (!track_doc.contains("weights")) return std::nullopt;
    Weights w;
    for (const auto& x : track_doc.at("weights")) w.push_back(parse_rational(x));
    return w;
  });
}

Json element_json(const LimitElement& e) {
  if (e.kind() == PayloadKind::Homology) {
    return nested("element", {{"kind", "homology"}, {"cycle", cycle_json(e.cycle())}});
  }
  const auto& wt = e.track();
  return nested("element", {{"kind", "track"}, {"track", track_json(wt.track, &wt.weights)}});
}

LimitElement parse_element(const Json& j) {
  return guarded([&]() -> LimitElement {
    if (!j.is_object()) throw invalid("element must be an object");
    const auto type = j.value("type", std::string("element"));
    if (type == "class") {
      Surface s(2);
      const auto u = parse_class(j, &s);
      return LimitElement::from_class(s, u);
    }
    if (type == "cycle") return LimitElement(parse_cycle(j));
    if (type == "track") {
      auto w = parse_weights(j);
      if (!w) throw invalid("track element needs weights");
      return LimitElement(parse_track(j), std::move(*w));
    }
    expect_type(j, "element");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "homology") return LimitElement(parse_cycle(j.at("cycle")));
    if (kind == "track") return parse_element(j.at("track"));
    throw invalid("unknown element kind " + kind);
  });
}

Json vaut_json(const TwoArrowVaut& v) {
  Json fwd = Json::array(), bwd = Json::array();
  for (const auto& w : v.forward) fwd.push_back(word_json(w));
  for (const auto& w : v.backward) bwd.push_back(word_json(w));
  return nested("vaut", {{"base_genus", v.base().genus()},
                         {"left", cover_json(v.left)},
                         {"right", cover_json(v.right)},
                         {"identification", {{"forward", fwd}, {"backward", bwd}}}});
}

TwoArrowVaut parse_vaut(const Json& j) {
  return guarded([&] {
    expect_type(j, "vaut");
    auto left = parse_cover(j.at("left"));
    auto right = parse_cover(j.at("right"));
    if (j.contains("base_genus") && j.at("base_genus").get<int>() != left.base().genus()) {
      throw invalid("base_genus disagrees with the covers");
    }
    std::vector<GroupWord> fwd, bwd;
    for (const auto& w : j.at("identification").at("forward")) fwd.push_back(parse_word(w, left.base()));
    for (const auto& w : j.at("identification").at("backward")) bwd.push_back(parse_word(w, left.base()));
    return make_vaut(std::move(left), std::move(right), std::move(fwd), std::move(bwd));
  });
}

Json automorphisms_json(const Surface& s, const std::vector<SurfaceAutomorphism>& auts) {
  Json list = Json::array();
  for (const auto& a : auts) {
    Json images = Json::array(), inv = Json::array();
    for (const auto& w : a.images) images.push_back(word_json(w));
    for (const auto& w : a.inverse_images) inv.push_back(word_json(w));
    Json ja{{"name", a.name}, {"images", images}};
    if (a.has_inverse()) ja["inverse_images"] = inv;
    list.push_back(std::move(ja));
  }
  return nested("automorphisms", {{"genus", s.genus()}, {"automorphisms", list}});
}

std::vector<SurfaceAutomorphism> parse_automorphisms(const Json& j) {
  return guarded([&] {
    expect_type(j, "automorphisms");
    const auto s = surface_from(j.at("genus"));
    std::vector<SurfaceAutomorphism> out;
    for (const auto& ja : j.at("automorphisms")) {
      SurfaceAutomorphism a{ja.value("name", std::string("aut") + std::to_string(out.size() + 1)),
                            s, {}, {}};
      for (const auto& w : ja.at("images")) a.images.push_back(parse_word(w, s));
      if (ja.contains("inverse_images")) {
        for (const auto& w : ja.at("inverse_images")) a.inverse_images.push_back(parse_word(w, s));
      }
      if (static_cast<int>(a.images.size()) != s.num_generators()) {
        throw Error(ErrorCode::InvalidAutomorphism, a.name + " needs one image per generator");
      }
      if (auto err = check_automorphism(a)) throw *err;
      out.push_back(std::move(a));
    }
    return out;
  });
}

}  // namespace covertower::io
