#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "covertower/characteristic.hpp"
#include "covertower/enumerate.hpp"
#include "covertower/orbit.hpp"
#include "covertower/registry.hpp"
#include "io.hpp"
#include "suites.hpp"

using namespace covertower;
using io::Json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kBudget = 3 };

struct Run {
  std::ostringstream out;
  int code = kOk;
};

CoverSpec load_cover(const std::string& path) { return io::parse_cover(io::read_document(path)); }

std::vector<SurfaceAutomorphism> load_auts(const std::string& path, const Surface& s) {
  if (path.empty()) return default_automorphisms(s);
  auto auts = io::parse_automorphisms(io::read_document(path));
  if (!auts.empty() && auts.front().surface != s) {
    throw Error(ErrorCode::InvalidAutomorphism, "automorphisms act on another genus");
  }
  return auts;
}

// A class given inline as "1,0,0,0" or as a document path.
Json class_argument(const std::string& arg, const Surface& s) {
  if (std::filesystem::exists(arg)) return io::read_document(arg);
  HomologyClass u;
  std::stringstream ss(arg);
  for (std::string cell; std::getline(ss, cell, ',');) {
    try {
      std::size_t used = 0;
      u.coords.push_back(std::stoll(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidDocument, "class must be a document or comma-separated integers");
    }
  }
  return io::class_json(s, u);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite covers of closed surfaces, their homology, train tracks and virtual automorphisms"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the result here instead of stdout");
  Run run;
  std::string a, b, c;
  int genus = 2, degree = 1, jobs = 1;
  std::uint64_t budget = default_degree_budget();

  auto* enumerate = app.add_subcommand("enumerate", "All pointed covers of one degree, one document per line");
  enumerate->add_option("--genus", genus)->required()->check(CLI::Range(2, 64));
  enumerate->add_option("--degree", degree)->required()->check(CLI::Range(1, 64));
  enumerate->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  enumerate->callback([&] {
    EnumerateOptions opts;
    opts.jobs = jobs;
    for (const auto& cov : enumerate_covers(Surface(genus), degree, opts)) {
      run.out << io::document("cover", io::cover_json(cov)).dump() << '\n';
    }
  });

  auto* genus_cmd = app.add_subcommand("genus", "Genus of a cover's total space");
  genus_cmd->add_option("--cover", a)->required();
  genus_cmd->callback([&] { run.out << load_cover(a).genus() << '\n'; });

  auto* fp = app.add_subcommand("fiber-product", "Pointed component of the fiber product of two covers");
  fp->add_option("A", a)->required();
  fp->add_option("B", b)->required();
  fp->callback([&] {
    run.out << io::render(io::document("cover", io::cover_json(fiber_product(load_cover(a), load_cover(b)))));
  });

  auto* lift_cycle_cmd = app.add_subcommand("lift-cycle", "Transfer a class, or lift a cycle, to a cover");
  lift_cycle_cmd->add_option("--cover", a)->required();
  lift_cycle_cmd->add_option("--class", b)->required();
  lift_cycle_cmd->callback([&] {
    const auto cov = load_cover(a);
    const auto doc = class_argument(b, cov.base());
    const auto e = io::parse_element(doc);
    run.out << io::render(io::document("cycle", io::cycle_json(lift_element(e, cov).cycle())));
  });

  auto* pairing = app.add_subcommand("pairing", "Normalized intersection pairing of two limit elements");
  pairing->add_option("--e1", a)->required();
  pairing->add_option("--e2", b)->required();
  pairing->callback([&] {
    const auto e1 = io::parse_element(io::read_document(a));
    const auto e2 = io::parse_element(io::read_document(b));
    run.out << io::rational_string(normalized_pairing(e1, e2)) << '\n';
  });

  auto* lift_track_cmd = app.add_subcommand("lift-track", "Full preimage of a track and its 0/1 lift matrix");
  lift_track_cmd->add_option("--track", a)->required();
  lift_track_cmd->add_option("--cover", b)->required();
  lift_track_cmd->callback([&] {
    const auto doc = io::read_document(a);
    const auto t = io::parse_track(doc);
    const auto w = io::parse_weights(doc);
    const auto cov = load_cover(b);
    const auto l = lift_track(t, arrow_to(cov, t.cover()));
    Json body;
    if (w) {
      if (auto err = validate_weights(t, *w)) throw *err;
      const auto lw = l.lift.apply(*w);
      body["track"] = io::track_json(l.track, &lw);
    } else {
      body["track"] = io::track_json(l.track);
    }
    body["matrix"] = l.lift.matrix;
    run.out << io::render(io::document("track_lift", body));
  });

  auto* refine = app.add_subcommand("char-refine", "Smallest refinement invariant under the automorphism list");
  refine->add_option("--cover", a)->required();
  refine->add_option("--auts", b, "Automorphism list (default: the built-in list)");
  refine->add_option("--budget", budget, "Largest degree allowed")->check(CLI::PositiveNumber);
  refine->callback([&] {
    const auto cov = load_cover(a);
    const auto k = characteristic_refinement(cov, load_auts(b, cov.base()), budget);
    run.out << io::render(io::document("cover", io::cover_json(k)));
  });

  auto* is_char = app.add_subcommand("is-char", "Check invariance under conjugation and the automorphism list");
  is_char->add_option("--cover", a)->required();
  is_char->add_option("--auts", b)->required();
  is_char->callback([&] {
    const auto cov = load_cover(a);
    const auto auts = load_auts(b, cov.base());
    if (auto w = invariance_witness(cov, auts)) {
      run.code = kFailed;
      run.out << io::render(io::document(
          "counterexample", {{"check", "is-char"},
                             {"case", {{"cover", io::cover_json(cov)}}},
                             {"moved_by", w->moved_by},
                             {"element", io::word_json(w->element)}}));
    } else {
      run.out << "true\n";
    }
  });

  auto* act = app.add_subcommand("vaut-act", "Apply a virtual automorphism to a limit element");
  act->add_option("--vaut", a)->required();
  act->add_option("--elem", b)->required();
  act->callback([&] {
    const auto v = io::parse_vaut(io::read_document(a));
    const auto e = io::parse_element(io::read_document(b));
    run.out << io::render(io::document("element", io::element_json(vaut_act(v, e))));
  });

  std::string aut_name;
  auto* make = app.add_subcommand("make-vaut", "Vaut document from an automorphism or two markings");
  auto* aut_opt = make->add_option("--aut", aut_name, "Name in the built-in list");
  make->add_option("--genus", genus);
  make->add_option("--cover", a, "Restrict the automorphism to this cover");
  auto* left_opt = make->add_option("--left", b)->excludes(aut_opt);
  make->add_option("--right", c)->needs(left_opt);
  make->callback([&] {
    TwoArrowVaut v = identity_vaut(Surface(genus));
    if (!aut_name.empty()) {
      const auto base = a.empty() ? CoverSpec::trivial(Surface(genus)) : load_cover(a);
      const auto auts = default_automorphisms(base.base());
      auto it = std::find_if(auts.begin(), auts.end(), [&](const auto& x) { return x.name == aut_name; });
      if (it == auts.end()) throw Error(ErrorCode::InvalidDocument, "no automorphism named " + aut_name);
      v = restrict_automorphism(*it, base);
    } else if (!b.empty()) {
      if (c.empty()) throw Error(ErrorCode::InvalidDocument, "--left needs --right");
      v = vaut_from_markings(standard_marking(load_cover(b)), standard_marking(load_cover(c)));
    }
    run.out << io::render(io::document("vaut", io::vaut_json(v)));
  });

  auto* caut = app.add_subcommand("caut", "Look for a representative over a characteristic cover");
  caut->add_option("--vaut", a)->required();
  caut->add_option("--auts", b);
  caut->add_option("--budget", budget)->check(CLI::PositiveNumber);
  caut->callback([&] {
    const auto v = io::parse_vaut(io::read_document(a));
    const auto cert = certify_caut(v, load_auts(b, v.base()), budget);
    Json body{{"certified", cert.certified}, {"reason", cert.reason}};
    if (cert.characteristic) body["characteristic"] = io::cover_json(*cert.characteristic);
    run.out << io::render(io::document("caut_certificate", body));
  });

  auto* auts_cmd = app.add_subcommand("auts", "Print the built-in automorphism list");
  auts_cmd->add_option("--genus", genus)->check(CLI::Range(2, 64));
  auts_cmd->callback([&] {
    const Surface s(genus);
    run.out << io::render(io::document("automorphisms", io::automorphisms_json(s, default_automorphisms(s))));
  });

  std::string suite, replay, counter_path;
  int max_degree = 2;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  auto* suite_opt = verify->add_option("--suite", suite)->check(CLI::IsMember(suites::names()));
  verify->add_option("--genus", genus)->check(CLI::Range(2, 64));
  verify->add_option("--max-degree", max_degree)->check(CLI::Range(1, 8));
  verify->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  verify->add_option("--counterexample", counter_path, "Also write a failing case here");
  verify->add_option("--replay", replay, "Re-run the case in a counterexample document")->excludes(suite_opt);
  verify->callback([&] {
    if (!replay.empty()) {
      const auto r = suites::replay(io::read_document(replay));
      if (r.failure) {
        run.code = kFailed;
        run.out << "reproduced\t" << *r.failure << '\n';
      } else {
        run.out << "passes\n";
      }
      return;
    }
    if (suite.empty()) throw Error(ErrorCode::InvalidDocument, "--suite or --replay required");
    const auto r = suites::run(suite, genus, max_degree, jobs);
    run.out << r.table;
    if (!r.ok) {
      run.code = kFailed;
      const auto doc = io::render(*r.counterexample);
      std::cerr << doc;
      if (!counter_path.empty()) std::ofstream(counter_path) << doc;
    }
  });

  std::uint64_t steps = 0, targets = 0, seed = 0;
  auto* orbit = app.add_subcommand("orbit", "Covering radius of a transvection orbit in projective homology");
  orbit->add_option("--steps", steps)->required();
  orbit->add_option("--targets", targets)->required();
  orbit->add_option("--seed", seed)->required();
  orbit->add_option("--genus", genus)->check(CLI::Range(2, 64));
  orbit->callback([&] { run.out << format_report(orbit_density_experiment(Surface(genus), steps, targets, seed)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  } catch (const Error& e) {
    std::cerr << "covertower: " << e.what() << '\n';
    return e.code() == ErrorCode::SearchBudgetExceeded ? kBudget : kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "covertower: " << e.what() << '\n';
    return kInvalid;
  }

  if (output.empty()) {
    std::cout << run.out.str();
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!(f << run.out.str())) {
      std::cerr << "covertower: cannot write " << output << '\n';
      return kInvalid;
    }
  }
  return run.code;
}
