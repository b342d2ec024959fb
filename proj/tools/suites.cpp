#include "suites.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "covertower/characteristic.hpp"
#include "covertower/enumerate.hpp"
#include "covertower/registry.hpp"

namespace covertower::suites {

namespace {

using Check = std::function<CaseResult(const CoverSpec&)>;

std::string join(std::initializer_list<std::string> cells) {
  std::string out;
  for (const auto& c : cells) {
    if (!out.empty()) out += '\t';
    out += c;
  }
  return out;
}

std::string str(std::int64_t x) { return std::to_string(x); }
std::string str(const Rational& q) { return io::rational_string(q); }

std::vector<LimitElement> basis_elements(const Surface& s) {
  std::vector<LimitElement> out;
  for (int i = 0; i < s.homology_rank(); ++i) {
    out.push_back(LimitElement::from_class(s, HomologyClass::basis(s, i)));
  }
  return out;
}

std::vector<SurfaceAutomorphism> preserving_automorphisms(const Surface& s) {
  std::vector<SurfaceAutomorphism> out;
  for (auto& a : default_automorphisms(s)) {
    if (orientation_sign(a) > 0) out.push_back(std::move(a));
  }
  return out;
}

CaseResult riemann_hurwitz(const CoverSpec& c) {
  CaseResult r;
  const auto k = CoverRegistry::global().complex(c);
  const int chi = k->euler_characteristic();
  const int from_chi = (2 - chi) / 2;
  const int rank = static_cast<int>(homology_basis(k).size());
  if (c.genus() != from_chi || chi != c.degree() * c.base().euler_characteristic() ||
      rank != 2 * c.genus() || !torsion_coefficients(k).empty()) {
    r.failure = "genus " + std::to_string(c.genus()) + " but chi " + std::to_string(chi) +
                " and H1 rank " + std::to_string(rank);
  }
  return r;
}

CaseResult transfer_scaling(const CoverSpec& c) {
  CaseResult r;
  const auto k = CoverRegistry::global().complex(c);
  const auto& s = c.base();
  const std::int64_t d = c.degree();
  for (int i = 0; i < s.homology_rank(); ++i) {
    const auto u = HomologyClass::basis(s, i);
    const auto tu = transfer(u, k);
    if (pushforward(tu) != d * u) {
      r.failure = "pushforward(transfer(e" + std::to_string(i + 1) + ")) != d e";
      return r;
    }
    for (int j = 0; j < s.homology_rank(); ++j) {
      const auto v = HomologyClass::basis(s, j);
      if (pairing_on_cover(tu, transfer(v, k)) != d * intersection_form(u, v)) {
        r.failure = "pairing of transfers of e" + std::to_string(i + 1) + ", e" +
                    std::to_string(j + 1) + " is not d <u,v>";
        return r;
      }
    }
  }
  return r;
}

CaseResult pairing_invariance(const CoverSpec& c) {
  CaseResult r;
  const auto& s = c.base();
  const auto es = basis_elements(s);
  std::vector<LimitElement> lifted;
  for (const auto& e : es) lifted.push_back(lift_element(e, c));
  std::vector<TwoArrowVaut> vauts;
  for (const auto& a : preserving_automorphisms(s)) vauts.push_back(restrict_automorphism(a, c));
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      const auto base = normalized_pairing(es[i], es[j]);
      if (normalized_pairing(lifted[i], lifted[j]) != base) {
        r.failure = "lifting changes the pairing of e" + std::to_string(i + 1) + ", e" +
                    std::to_string(j + 1);
        return r;
      }
      for (const auto& v : vauts) {
        if (!pairing_preserved(v, lifted[i], lifted[j])) {
          r.failure = "restricted automorphism changes the pairing of e" +
                      std::to_string(i + 1) + ", e" + std::to_string(j + 1);
          return r;
        }
      }
    }
  }
  return r;
}

CaseResult vaut_laws(const CoverSpec& c) {
  CaseResult r;
  const auto& s = c.base();
  const auto es = basis_elements(s);
  const auto id = identity_vaut(s);
  const auto auts = preserving_automorphisms(s);
  std::vector<TwoArrowVaut> vauts;
  for (const auto& a : auts) vauts.push_back(restrict_automorphism(a, c));
  // A two-arrow vaut that need not come from an automorphism.
  const auto other = pull_back(c, auts.front());
  vauts.push_back(vaut_from_markings(standard_marking(c), standard_marking(other)));
  auto fail = [&](const std::string& law, std::size_t v, std::size_t e) {
    r.failure = law + " fails for vaut " + std::to_string(v + 1) + " on e" + std::to_string(e + 1);
    return r;
  };
  for (std::size_t vi = 0; vi < vauts.size(); ++vi) {
    const auto& v = vauts[vi];
    const auto& v2 = vauts[(vi + 1) % vauts.size()];
    const auto inv = vaut_inverse(v);
    const auto with_id = vaut_compose(v, id);
    const auto both = vaut_compose(v, v2);
    for (std::size_t ei = 0; ei < es.size(); ++ei) {
      const auto& e = es[ei];
      const auto img = vaut_act(v, e);
      if (!limit_equal(img, vaut_act(v, lift_element(e, c)))) return fail("representative independence", vi, ei);
      if (!limit_equal(vaut_act(inv, img), e)) return fail("inverse", vi, ei);
      if (!limit_equal(vaut_act(with_id, e), img)) return fail("identity", vi, ei);
      if (!limit_equal(vaut_act(both, e), vaut_act(v, vaut_act(v2, e)))) return fail("composition", vi, ei);
    }
  }
  return r;
}

CaseResult theorem3(const CoverSpec& c) {
  CaseResult r;
  const auto& s = c.base();
  const auto es = basis_elements(s);
  const auto k = CoverRegistry::global().complex(c);
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto base = normalized_pairing(es[i], es[j]);
      const auto li = lift_element(es[i], c);
      const auto lj = lift_element(es[j], c);
      const auto raw = pairing_on_cover(li.cycle(), lj.cycle());
      const auto norm = normalized_pairing(li, lj);
      r.rows.push_back(join({str(c.degree()), str(c.genus()), "e" + str(static_cast<std::int64_t>(i + 1)),
                             "e" + str(static_cast<std::int64_t>(j + 1)), str(base), str(raw),
                             str(static_cast<std::int64_t>(c.genus() - 1)), str(norm)}));
      if (norm != base) {
        r.failure = "normalized pairing on the cover differs from the base value";
        return r;
      }
    }
  }
  return r;
}

struct Suite {
  Check check;
  std::string header;
  bool per_case_rows;
};

const std::map<std::string, Suite>& table() {
  static const std::map<std::string, Suite> t{
      {"riemann-hurwitz", {riemann_hurwitz, "degree\tcovers\tgenus\tchecked", false}},
      {"transfer-scaling", {transfer_scaling, "degree\tcovers\tgenus\tchecked", false}},
      {"pairing-invariance", {pairing_invariance, "degree\tcovers\tgenus\tchecked", false}},
      {"vaut-laws", {vaut_laws, "degree\tcovers\tgenus\tchecked", false}},
      {"theorem3",
       {theorem3, "degree\tgenus\tu\tv\tbase\tpairing\tgenus-1\tnormalized", true}},
  };
  return t;
}

const Suite& find(const std::string& name) {
  const auto& t = table();
  auto it = t.find(name);
  if (it == t.end()) throw Error(ErrorCode::InvalidDocument, "unknown suite " + name);
  return it->second;
}

io::Json case_document(const std::string& suite, const CoverSpec& c, const std::string& why) {
  return io::document("counterexample", {{"suite", suite},
                                         {"case", {{"cover", io::cover_json(c)}}},
                                         {"failure", why}});
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : table()) out.push_back(k);
    return out;
  }();
  return n;
}

SuiteResult run(const std::string& suite, int genus, int max_degree, int jobs) {
  const auto& spec = find(suite);
  const Surface s(genus);
  EnumerateOptions opts;
  opts.jobs = jobs;
  const auto covers = enumerate_covers_up_to(s, max_degree, opts);

  std::vector<CaseResult> results(covers.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < covers.size();) {
      try {
        results[i] = spec.check(covers[i]);
      } catch (const Error& e) {
        results[i].failure = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SuiteResult out;
  out.cases = covers.size();
  std::ostringstream table;
  table << "# suite\t" << suite << "\n# genus\t" << genus << "\n# max_degree\t" << max_degree
        << '\n' << spec.header << '\n';
  std::map<int, std::pair<std::size_t, std::size_t>> per_degree;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    auto& [count, passed] = per_degree[covers[i].degree()];
    ++count;
    if (!results[i].failure) ++passed;
    for (const auto& row : results[i].rows) {
      if (spec.per_case_rows) table << row << '\n';
    }
    if (results[i].failure && out.ok) {
      out.ok = false;
      out.counterexample = case_document(suite, covers[i], *results[i].failure);
    }
  }
  if (!spec.per_case_rows) {
    for (const auto& [d, cp] : per_degree) {
      table << d << '\t' << cp.first << '\t' << d * (genus - 1) + 1 << '\t' << cp.second << '\n';
    }
  }
  table << "# result\t" << (out.ok ? "verified" : "FAILED") << '\n';
  out.table = table.str();
  return out;
}

CaseResult replay(const io::Json& counterexample) {
  return io::guarded([&] {
    const auto& spec = find(counterexample.at("suite").get<std::string>());
    const auto c = io::parse_cover(counterexample.at("case").at("cover"));
    try {
      return spec.check(c);
    } catch (const Error& e) {
      CaseResult r;
      r.failure = e.what();
      return r;
    }
  });
}

}  // namespace covertower::suites
