#include "covertower/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <numbers>
#include <random>
#include <sstream>
#include <unordered_set>

namespace covertower {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Representative of the line: first nonzero coordinate positive.
std::vector<std::int64_t> line_key(std::vector<std::int64_t> v) {
  auto it = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
  if (it != v.end() && *it < 0) {
    for (auto& x : v) x = -x;
  }
  return v;
}

std::vector<double> unit(const std::vector<std::int64_t>& v) {
  std::vector<double> out(v.begin(), v.end());
  double n = 0;
  for (double x : out) n += x * x;
  n = std::sqrt(n);
  for (double& x : out) x /= n;
  return out;
}

}  // namespace

// Box-Muller on the raw 64-bit stream so targets do not depend on the
// standard library's distribution implementations.
std::vector<std::vector<double>> sphere_targets(std::size_t dim, std::uint64_t m,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  std::vector<std::vector<double>> out;
  for (std::uint64_t i = 0; i < m; ++i) {
    std::vector<double> v;
    while (v.size() < dim) {
      const double r = std::sqrt(-2.0 * std::log(uniform()));
      const double t = 2.0 * std::numbers::pi * uniform();
      v.push_back(r * std::cos(t));
      if (v.size() < dim) v.push_back(r * std::sin(t));
    }
    double n = 0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    for (double& x : v) x /= n;
    out.push_back(std::move(v));
  }
  return out;
}

HomologyClass transvect(const HomologyClass& x, const HomologyClass& c, int sign) {
  return x + (sign * intersection_form(x, c)) * c;
}

std::vector<HomologyClass> standard_transvections(const Surface& s) {
  std::vector<HomologyClass> out;
  for (int i = 0; i < s.genus(); ++i) {
    out.push_back(HomologyClass::basis(s, 2 * i));
    out.push_back(HomologyClass::basis(s, 2 * i + 1));
    if (i + 1 < s.genus()) {
      out.push_back(HomologyClass::basis(s, 2 * i + 1) - HomologyClass::basis(s, 2 * i + 3));
    }
  }
  return out;
}

std::string transvection_hash(const std::vector<HomologyClass>& cs) {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& c : cs) {
    for (auto x : c.coords) {
      const auto u = static_cast<std::uint64_t>(x);
      for (int b = 0; b < 8; ++b) {
        h ^= (u >> (8 * b)) & 0xff;
        h *= 1099511628211ull;
      }
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double projective_angle(const std::vector<double>& u, const std::vector<double>& v) {
  double dot = 0, nu = 0, nv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  return std::acos(std::min(1.0, std::abs(dot) / std::sqrt(nu * nv)));
}

OrbitReport orbit_density_experiment(const Surface& base, std::uint64_t steps,
                                     std::uint64_t targets, std::uint64_t seed) {
  const auto cs = standard_transvections(base);
  OrbitReport report{base.genus(), seed, targets, transvection_hash(cs), {}};
  const auto pts = sphere_targets(static_cast<std::size_t>(base.homology_rank()), targets, seed);
  // Best |cos| per target; the covering radius is acos of the worst one.
  std::vector<double> best(pts.size(), 0.0);
  auto absorb = [&](const std::vector<std::int64_t>& v) {
    const auto u = unit(v);
    for (std::size_t t = 0; t < pts.size(); ++t) {
      double dot = 0;
      for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * pts[t][i];
      best[t] = std::max(best[t], std::abs(dot));
    }
  };
  auto radius = [&] {
    if (best.empty()) return 0.0;
    return std::acos(std::min(1.0, *std::min_element(best.begin(), best.end())));
  };

  std::unordered_set<std::vector<std::int64_t>, VecHash> seen;
  std::deque<std::vector<std::int64_t>> queue;
  const auto start = HomologyClass::basis(base, 0).coords;
  seen.insert(start);
  queue.push_back(start);
  absorb(start);
  report.rows.push_back({0, 1, radius()});

  std::uint64_t next_row = 1;
  std::uint64_t step = 0;
  std::size_t move = 0;
  while (step < steps && !queue.empty()) {
    const auto c = cs[move / 2];
    const int sign = move % 2 == 0 ? 1 : -1;
    auto img = line_key(transvect(HomologyClass(queue.front()), c, sign).coords);
    if (seen.insert(img).second) {
      absorb(img);
      queue.push_back(std::move(img));
    }
    if (++move == 2 * cs.size()) {
      move = 0;
      queue.pop_front();
    }
    ++step;
    if (step == next_row || step == steps) {
      report.rows.push_back({step, seen.size(), radius()});
      while (next_row <= step) next_row *= 2;
    }
  }
  return report;
}

std::string format_report(const OrbitReport& r) {
  std::ostringstream out;
  out << "# genus\t" << r.genus << "\n# seed\t" << r.seed << "\n# targets\t" << r.targets
      << "\n# transvections\t" << r.transvections << "\nsteps\torbit_size\tcovering_radius\n";
  char buf[32];
  for (const auto& row : r.rows) {
    std::snprintf(buf, sizeof buf, "%.6f", row.radius);
    out << row.steps << '\t' << row.orbit_size << '\t' << buf << '\n';
  }
  return out.str();
}

}  // namespace covertower
