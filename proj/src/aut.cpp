#include "origami/aut.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace origami {

namespace {

std::string conflict_text(SquareId x, SquareId want, SquareId have) {
  std::ostringstream os;
  os << "square " << x << " would need image " << want << " but already maps to "
     << have;
  return os.str();
}

std::string injectivity_text(SquareId y, SquareId a, SquareId b) {
  std::ostringstream os;
  os << "squares " << a << " and " << b << " would both map to " << y;
  return os.str();
}

}  // namespace

AutVerdict extend_translation(const Origami& o, SquareId base, SquareId image,
                              std::optional<std::int64_t> radius) {
  if (!radius && !o.is_finite())
    throw Error("unbounded extension on a countable origami");

  std::unordered_map<SquareId, SquareId> fwd, rev;
  fwd[base] = image;
  rev[image] = base;
  std::deque<std::pair<SquareId, std::int64_t>> queue{{base, 0}};

  const auto step = [&](SquareId x, int dir) {
    switch (dir) {
      case 0: return o.sigma(x);
      case 1: return o.sigma_inv(x);
      case 2: return o.tau(x);
      default: return o.tau_inv(x);
    }
  };

  while (!queue.empty()) {
    const auto [x, d] = queue.front();
    queue.pop_front();
    if (radius && d == *radius) continue;
    const SquareId y = fwd[x];
    for (int dir = 0; dir < 4; ++dir) {
      const SquareId x2 = step(x, dir);
      const SquareId y2 = step(y, dir);
      const auto it = fwd.find(x2);
      if (it != fwd.end()) {
        if (it->second != y2)
          return Refutation{d + 1, conflict_text(x2, y2, it->second)};
        continue;
      }
      const auto rit = rev.find(y2);
      if (rit != rev.end())
        return Refutation{d + 1, injectivity_text(y2, rit->second, x2)};
      fwd[x2] = y2;
      rev[y2] = x2;
      queue.emplace_back(x2, d + 1);
    }
  }

  TranslationMap m;
  m.base = base;
  m.image = image;
  m.table.insert(fwd.begin(), fwd.end());
  if (radius) return CertifiedMap{std::move(m), *radius};
  return TotalMap{std::move(m)};
}

std::vector<FinitePerm> automorphism_group(const Origami& o) {
  const SquareId n = o.size();
  std::vector<FinitePerm> out;
  for (SquareId image = 1; image <= n; ++image) {
    AutVerdict v = extend_translation(o, 1, image, std::nullopt);
    if (auto* total = std::get_if<TotalMap>(&v)) {
      // Connectivity makes the table total; package it as a permutation.
      std::vector<SquareId> im(static_cast<std::size_t>(n));
      for (const auto& [x, y] : total->map.table) im[x - 1] = y;
      out.emplace_back(FinitePerm(std::move(im)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_translation(const Origami& o, const LazyBijection& rule,
                        const std::vector<SquareId>& squares,
                        std::string* conflict) {
  for (SquareId x : squares) {
    const SquareId y = rule.apply(x);
    if (rule.apply(o.sigma(x)) != o.sigma(y)) {
      if (conflict) {
        std::ostringstream os;
        os << "sigma does not commute with the map at square " << x;
        *conflict = os.str();
      }
      return false;
    }
    if (rule.apply(o.tau(x)) != o.tau(y)) {
      if (conflict) {
        std::ostringstream os;
        os << "tau does not commute with the map at square " << x;
        *conflict = os.str();
      }
      return false;
    }
  }
  return true;
}

std::vector<SeedVerdict> bounded_aut_search(const Origami& o, SquareId base,
                                            std::int64_t radius,
                                            std::vector<SquareId> seeds,
                                            std::int64_t degree_budget) {
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  std::optional<std::int64_t> base_degree;
  if (auto s = singularity_at(o, base, degree_budget);
      std::holds_alternative<Singularity>(s))
    base_degree = std::get<Singularity>(s).degree;

  std::vector<SeedVerdict> out;
  for (SquareId seed : seeds) {
    if (base_degree) {
      if (auto s = singularity_at(o, seed, degree_budget);
          std::holds_alternative<Singularity>(s)) {
        const std::int64_t deg = std::get<Singularity>(s).degree;
        if (deg != *base_degree) {
          std::ostringstream os;
          os << "corner degree " << deg << " at seed " << seed
             << " differs from degree " << *base_degree << " at base " << base;
          out.push_back({seed, Refutation{0, os.str()}});
          continue;
        }
      }
    }
    out.push_back({seed, extend_translation(o, base, seed, radius)});
  }
  return out;
}

}  // namespace origami
