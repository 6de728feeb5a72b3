#include "joinmeet/classify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <tuple>
#include <string>

#include "joinmeet/error.hpp"

namespace joinmeet {

SimpleCheck is_simple(const Lattice& l) {
  SimpleCheck out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    bool apex = true;
    for (std::size_t b = 0; b < l.size() && apex; ++b) apex = l.comparable(a, b);
    if (apex) out.apexes.push_back(a);
  }
  out.simple = std::all_of(out.apexes.begin(), out.apexes.end(),
                           [&](std::size_t a) { return a == l.bottom() || a == l.top(); });
  return out;
}

bool is_planar(const Lattice& l) {
  if (!is_distributive(l)) throw NotDistributive();
  auto ji = join_irreducible_elements(l);
  for (std::size_t i = 0; i < ji.size(); ++i)
    for (std::size_t j = i + 1; j < ji.size(); ++j) {
      if (l.comparable(ji[i], ji[j])) continue;
      for (std::size_t k = j + 1; k < ji.size(); ++k)
        if (!l.comparable(ji[i], ji[k]) && !l.comparable(ji[j], ji[k])) return false;
    }
  return true;
}

namespace {

bool thin_shape(const Lattice& l, const RankProfile& rp) {
  if (rp.d < 2) return false;
  for (std::size_t i = 1; i < rp.d; ++i)
    if (rp.rho[i] != 2) return false;
  return is_simple(l).simple;
}

// Closure of `seed` under join and meet, abandoned once it exceeds `limit`.
std::vector<std::size_t> close_under_ops(const Lattice& l, std::vector<std::size_t> seed,
                                         std::size_t limit) {
  std::vector<char> in(l.size(), 0);
  for (auto a : seed) in[a] = 1;
  for (std::size_t done = 0; done < seed.size(); ++done) {
    for (std::size_t k = 0; k <= done; ++k) {
      for (auto c : {l.join(seed[done], seed[k]), l.meet(seed[done], seed[k])}) {
        if (in[c]) continue;
        in[c] = 1;
        seed.push_back(c);
        if (seed.size() > limit) return seed;
      }
    }
  }
  std::sort(seed.begin(), seed.end());
  return seed;
}

}  // namespace

bool is_thin(const Lattice& l) {
  if (!is_distributive(l)) throw NotDistributive();
  return thin_shape(l, rank_profile(l));
}

std::optional<D54Embedding> find_d54_sublattice(const Lattice& l) {
  const std::size_t n = l.size();
  if (n < 8) return std::nullopt;
  const Lattice grid = grid_lattice(2, 4);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<std::size_t> off;
    for (std::size_t v = 0; v < n; ++v)
      if (!l.comparable(u, v)) off.push_back(v);
    for (auto v1 : off)
      for (auto v2 : off) {
        if (!l.poset().less(v1, v2)) continue;
        for (auto v3 : off) {
          if (!l.poset().less(v2, v3)) continue;
          auto cl = close_under_ops(l, {u, v1, v2, v3}, 8);
          if (cl.size() != 8) continue;
          auto iso = lattice_isomorphic(grid, sublattice(l, cl));
          if (!iso) continue;
          D54Embedding e;
          for (std::size_t g = 0; g < 8; ++g) e.grid[g] = cl[(*iso)[g]];
          return e;
        }
      }
  }
  return std::nullopt;
}

std::vector<GridInterval> find_grid_intervals(const Lattice& l, std::size_t r, std::size_t s) {
  if (!is_distributive(l)) throw NotDistributive();
  const auto rp = rank_profile(l);
  const std::size_t want = (r + 1) * (s + 1);
  const Lattice grid = grid_lattice(r + 1, s + 1);
  std::vector<GridInterval> out;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (!l.leq(a, b) || rp.rank_of[b] - rp.rank_of[a] != r + s) continue;
      std::size_t count = 0;
      for (std::size_t c = 0; c < l.size(); ++c)
        if (l.leq(a, c) && l.leq(c, b)) ++count;
      if (count != want) continue;
      if (lattice_isomorphic(grid, interval(l, a, b))) out.push_back({a, b, r, s});
    }
  std::sort(out.begin(), out.end(), [](const GridInterval& x, const GridInterval& y) {
    return std::tie(x.bottom, x.top) < std::tie(y.bottom, y.top);
  });
  return out;
}

ClassificationReport classify(const Lattice& l) {
  ClassificationReport rep;
  rep.distributive = is_distributive(l);
  auto sc = is_simple(l);
  rep.simple = sc.simple;
  rep.apexes = std::move(sc.apexes);
  auto rp = rank_profile(l);
  rep.rank = rp.d;
  rep.rho = rp.rho;
  rep.theta = rp.theta;
  for (std::size_t i = 1; i + 2 <= rp.d; ++i)
    if (rp.rho[i] == 3 && rp.rho[i + 1] == 3) rep.consecutive_theta3 = true;
  rep.has_d54_sublattice = find_d54_sublattice(l).has_value();
  if (rep.distributive) {
    rep.planar = is_planar(l);
    rep.thin = thin_shape(l, rp);
    for (auto [r, s] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}}) {
      auto found = find_grid_intervals(l, r, s);
      rep.grid_intervals.insert(rep.grid_intervals.end(), found.begin(), found.end());
    }
  }
  return rep;
}

Lattice snake_lattice(std::span<const bool> x_below_next_y) {
  const std::size_t n = x_below_next_y.size() + 1;
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back("x" + std::to_string(i));
    labels.push_back("y" + std::to_string(i));
  }
  labels.push_back("1");
  auto x = [](std::size_t i) { return 2 * i - 1; };
  auto y = [](std::size_t i) { return 2 * i; };
  const std::size_t top = 2 * n + 1;
  std::vector<Cover> covers{{0, x(1)}, {0, y(1)}, {x(n), top}, {y(n), top}};
  for (std::size_t i = 2; i <= n; ++i) {
    covers.emplace_back(x(i - 1), x(i));
    covers.emplace_back(y(i - 1), y(i));
    if (x_below_next_y[i - 2])
      covers.emplace_back(x(i - 1), y(i));
    else
      covers.emplace_back(y(i - 1), x(i));
  }
  return as_lattice(Poset::from_cover_indices(std::move(labels), covers));
}

std::vector<Lattice> enumerate_thin_lattices(std::size_t rank) {
  if (rank < 2) throw InputError("thin lattices have rank at least 2");
  const std::size_t steps = rank - 2;
  if (steps >= 20) throw SizeLimitExceeded("thin lattice enumeration above rank 21");
  std::vector<Lattice> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << steps); ++mask) {
    auto choice = std::make_unique<bool[]>(steps + 1);
    for (std::size_t k = 0; k < steps; ++k) choice[k] = (mask >> k) & 1;
    out.push_back(snake_lattice(std::span<const bool>(choice.get(), steps)));
  }
  return out;
}

namespace {

// Nondecreasing sequences of length len with values in [0, hi].
void monotone_sequences(std::size_t len, std::size_t hi, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur(len, 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = len;
    while (k > 0 && cur[k - 1] == hi) --k;
    if (k == 0) return;
    const auto v = cur[k - 1] + 1;
    for (std::size_t t = k - 1; t < len; ++t) cur[t] = v;
  }
}

}  // namespace

std::vector<Lattice> enumerate_planar_lattices(std::size_t max_poset_size) {
  std::vector<Lattice> out;
  // Bucket by a cheap invariant before pairwise isomorphism tests.
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::vector<std::size_t>> buckets;
  for (std::size_t m = 1; m <= max_poset_size; ++m)
    for (std::size_t b = 0; 2 * b <= m; ++b) {
      const std::size_t a = m - b;
      std::vector<std::vector<std::size_t>> ups, dns;
      monotone_sequences(a, b, ups);
      if (b)
        monotone_sequences(b, a, dns);
      else
        dns.push_back({});
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < a; ++i) labels.push_back("c" + std::to_string(i + 1));
      for (std::size_t j = 0; j < b; ++j) labels.push_back("d" + std::to_string(j + 1));
      for (const auto& up : ups)
        for (const auto& dn : dns) {
          // c_i < d_j iff j >= up[i]; d_j < c_i iff i >= dn[j].
          std::vector<Cover> covers;
          for (std::size_t i = 0; i + 1 < a; ++i) covers.emplace_back(i, i + 1);
          for (std::size_t j = 0; j + 1 < b; ++j) covers.emplace_back(a + j, a + j + 1);
          for (std::size_t i = 0; i < a; ++i)
            if (up[i] < b) covers.emplace_back(i, a + up[i]);
          for (std::size_t j = 0; j < b; ++j)
            if (dn[j] < a) covers.emplace_back(a + j, dn[j]);
          Poset p;
          try {
            p = Poset::from_cover_indices(labels, covers);
          } catch (const CycleDetected&) {
            continue;
          }
          Lattice l = ideals_lattice(p);
          auto key = std::make_pair(l.poset().covers().size(), rank_profile(l).rho);
          auto& bucket = buckets[key];
          bool seen = false;
          for (auto idx : bucket)
            if (lattice_isomorphic(out[idx], l)) {
              seen = true;
              break;
            }
          if (seen) continue;
          bucket.push_back(out.size());
          out.push_back(std::move(l));
        }
    }
  return out;
}

}  // namespace joinmeet
