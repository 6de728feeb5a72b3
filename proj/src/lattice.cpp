#include "joinmeet/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "joinmeet/error.hpp"

namespace joinmeet {

NotALattice::NotALattice(std::string a, std::string b, Reason reason)
    : InputError([&] {
        const char* why = "";
        switch (reason) {
          case Reason::no_upper_bound: why = "no upper bound"; break;
          case Reason::no_lower_bound: why = "no lower bound"; break;
          case Reason::non_unique_lub: why = "no unique least upper bound"; break;
          case Reason::non_unique_glb: why = "no unique greatest lower bound"; break;
        }
        return "not a lattice: " + a + " and " + b + " have " + why;
      }()),
      a_(std::move(a)),
      b_(std::move(b)),
      reason_(reason) {}

namespace {

// Least element of {c : pred(c)} under leq, if it exists.
template <class Pred, class Leq>
std::optional<std::size_t> least(std::size_t n, Pred pred, Leq le, bool& any) {
  std::optional<std::size_t> cand;
  any = false;
  for (std::size_t c = 0; c < n; ++c) {
    if (!pred(c)) continue;
    any = true;
    if (!cand || le(c, *cand)) cand = c;
  }
  if (!cand) return std::nullopt;
  for (std::size_t c = 0; c < n; ++c)
    if (pred(c) && !le(*cand, c)) return std::nullopt;
  return cand;
}

}  // namespace

Lattice as_lattice(Poset p) {
  const std::size_t n = p.size();
  if (n == 0) throw InputError("empty poset is not a lattice");
  std::vector<std::uint32_t> join(n * n), meet(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      bool any = false;
      auto lub = least(
          n, [&](std::size_t c) { return p.leq(a, c) && p.leq(b, c); },
          [&](std::size_t x, std::size_t y) { return p.leq(x, y); }, any);
      if (!lub)
        throw NotALattice(p.label(a), p.label(b),
                          any ? NotALattice::Reason::non_unique_lub
                              : NotALattice::Reason::no_upper_bound);
      auto glb = least(
          n, [&](std::size_t c) { return p.leq(c, a) && p.leq(c, b); },
          [&](std::size_t x, std::size_t y) { return p.leq(y, x); }, any);
      if (!glb)
        throw NotALattice(p.label(a), p.label(b),
                          any ? NotALattice::Reason::non_unique_glb
                              : NotALattice::Reason::no_lower_bound);
      join[a * n + b] = join[b * n + a] = static_cast<std::uint32_t>(*lub);
      meet[a * n + b] = meet[b * n + a] = static_cast<std::uint32_t>(*glb);
    }
  Lattice l;
  l.poset_ = std::move(p);
  l.join_ = std::move(join);
  l.meet_ = std::move(meet);
  std::size_t bot = 0, top = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bot = l.meet(bot, a);
    top = l.join(top, a);
  }
  l.bottom_ = bot;
  l.top_ = top;
  return l;
}

Lattice lattice_from_tables(Poset p, std::vector<std::uint32_t> join,
                            std::vector<std::uint32_t> meet) {
  const std::size_t n = p.size();
  if (n == 0 || join.size() != n * n || meet.size() != n * n)
    throw InputError("lattice tables have wrong size");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto j = join[a * n + b], m = meet[a * n + b];
      if (!p.leq(a, j) || !p.leq(b, j) || !p.leq(m, a) || !p.leq(m, b))
        throw InvariantViolation("lattice table inconsistent with order at " + p.label(a) + "," +
                                 p.label(b));
    }
  Lattice l;
  l.poset_ = std::move(p);
  l.join_ = std::move(join);
  l.meet_ = std::move(meet);
  std::size_t bot = 0, top = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bot = l.meet(bot, a);
    top = l.join(top, a);
  }
  l.bottom_ = bot;
  l.top_ = top;
  return l;
}

bool is_distributive(const Lattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
        if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), l.join(a, c))) return false;
      }
  return true;
}

std::vector<std::size_t> join_irreducible_elements(const Lattice& l) {
  const std::size_t n = l.size();
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == l.bottom()) continue;
    bool irreducible = true;
    for (std::size_t b = 0; b < n && irreducible; ++b)
      for (std::size_t c = b; c < n && irreducible; ++c)
        if (l.join(b, c) == a && b != a && c != a) irreducible = false;
    const bool single_cover = l.poset().lower_covers(a).size() == 1;
    if (irreducible != single_cover)
      throw InvariantViolation("join-irreducible characterizations disagree at " + l.label(a));
    if (irreducible) out.push_back(a);
  }
  return out;
}

Poset join_irreducibles(const Lattice& l) {
  auto ji = join_irreducible_elements(l);
  return l.poset().induced(ji);
}

Lattice ideals_lattice(const Poset& p, std::size_t ideal_cap) {
  const std::size_t n = p.size();
  const std::size_t words = std::max<std::size_t>(1, (n + 63) / 64);
  using Bits = std::vector<std::uint64_t>;
  auto has = [](const Bits& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1; };

  std::map<Bits, std::size_t> index;
  std::vector<Bits> ideals;
  std::vector<Cover> covers;
  ideals.emplace_back(words, 0);
  index.emplace(ideals.back(), 0);
  // Breadth-first: an ideal I is covered by I ∪ {q} for each q minimal in
  // the complement of I.
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    for (std::size_t q = 0; q < n; ++q) {
      const Bits& cur = ideals[k];
      if (has(cur, q)) continue;
      bool addable = true;
      for (auto r : p.lower_covers(q))
        if (!has(cur, r)) addable = false;
      if (!addable) continue;
      Bits next = cur;
      next[q / 64] |= std::uint64_t{1} << (q % 64);
      auto [it, inserted] = index.emplace(next, ideals.size());
      if (inserted) {
        if (ideals.size() >= ideal_cap)
          throw SizeLimitExceeded("ideals_lattice: more than " + std::to_string(ideal_cap) +
                                  " order ideals");
        ideals.push_back(std::move(next));
      }
      covers.emplace_back(k, it->second);
    }
  }
  const std::size_t m = ideals.size();
  if (m > 8192) throw SizeLimitExceeded("ideals_lattice: join/meet tables too large");

  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& s : ideals) {
    std::string lab = "{";
    bool first = true;
    for (std::size_t q = 0; q < n; ++q) {
      if (!has(s, q)) continue;
      if (!first) lab += ",";
      lab += p.label(q);
      first = false;
    }
    labels.push_back(lab + "}");
  }
  Poset order = Poset::from_cover_indices(std::move(labels), covers);
  std::vector<std::uint32_t> join(m * m), meet(m * m);
  Bits tmp(words);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      for (std::size_t w = 0; w < words; ++w) tmp[w] = ideals[a][w] | ideals[b][w];
      join[a * m + b] = join[b * m + a] = static_cast<std::uint32_t>(index.at(tmp));
      for (std::size_t w = 0; w < words; ++w) tmp[w] = ideals[a][w] & ideals[b][w];
      meet[a * m + b] = meet[b * m + a] = static_cast<std::uint32_t>(index.at(tmp));
    }
  Lattice l = lattice_from_tables(std::move(order), std::move(join), std::move(meet));
  if (l.poset().rank() != n)
    throw InvariantViolation("J(P) does not have rank |P|");
  return l;
}

Lattice divisor_lattice(std::uint64_t n) {
  if (n == 0) throw InputError("divisor_lattice requires n >= 1");
  if (n > (std::uint64_t{1} << 40)) throw SizeLimitExceeded("divisor_lattice: n too large");
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());
  const std::size_t m = divs.size();
  std::map<std::uint64_t, std::size_t> at;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    at[divs[i]] = i;
    labels.push_back(std::to_string(divs[i]));
  }
  std::vector<std::uint8_t> rel(m * m, 0);
  std::vector<std::uint32_t> join(m * m), meet(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      rel[i * m + j] = divs[j] % divs[i] == 0;
      const auto g = std::gcd(divs[i], divs[j]);
      meet[i * m + j] = static_cast<std::uint32_t>(at.at(g));
      join[i * m + j] = static_cast<std::uint32_t>(at.at(divs[i] / g * divs[j]));
    }
  return lattice_from_tables(Poset::from_relation(std::move(labels), std::move(rel)),
                             std::move(join), std::move(meet));
}

Lattice boolean_lattice(std::size_t k) {
  if (k > 12) throw SizeLimitExceeded("boolean_lattice: rank too large");
  const std::size_t m = std::size_t{1} << k;
  std::vector<std::size_t> masks(m);
  std::iota(masks.begin(), masks.end(), 0);
  std::stable_sort(masks.begin(), masks.end(), [](std::size_t a, std::size_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<std::size_t> pos(m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    pos[masks[i]] = i;
    std::string lab = "{";
    bool first = true;
    for (std::size_t q = 0; q < k; ++q)
      if ((masks[i] >> q) & 1) {
        if (!first) lab += ",";
        lab += std::to_string(q + 1);
        first = false;
      }
    labels.push_back(lab + "}");
  }
  std::vector<std::uint8_t> rel(m * m);
  std::vector<std::uint32_t> join(m * m), meet(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      rel[i * m + j] = (masks[i] & ~masks[j]) == 0;
      join[i * m + j] = static_cast<std::uint32_t>(pos[masks[i] | masks[j]]);
      meet[i * m + j] = static_cast<std::uint32_t>(pos[masks[i] & masks[j]]);
    }
  return lattice_from_tables(Poset::from_relation(std::move(labels), std::move(rel)),
                             std::move(join), std::move(meet));
}

Lattice chain_lattice(std::size_t length) {
  const std::size_t m = length + 1;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> rel(m * m);
  std::vector<std::uint32_t> join(m * m), meet(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) {
      rel[i * m + j] = i <= j;
      join[i * m + j] = static_cast<std::uint32_t>(std::max(i, j));
      meet[i * m + j] = static_cast<std::uint32_t>(std::min(i, j));
    }
  }
  return lattice_from_tables(Poset::from_relation(std::move(labels), std::move(rel)),
                             std::move(join), std::move(meet));
}

Lattice grid_lattice(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InputError("grid_lattice requires positive dimensions");
  const std::size_t m = rows * cols;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> rel(m * m);
  std::vector<std::uint32_t> join(m * m), meet(m * m);
  for (std::size_t i = 0; i < m; ++i)
    labels.push_back("(" + std::to_string(i / cols) + "," + std::to_string(i % cols) + ")");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const auto ra = a / cols, ca = a % cols, rb = b / cols, cb = b % cols;
      rel[a * m + b] = ra <= rb && ca <= cb;
      join[a * m + b] = static_cast<std::uint32_t>(std::max(ra, rb) * cols + std::max(ca, cb));
      meet[a * m + b] = static_cast<std::uint32_t>(std::min(ra, rb) * cols + std::min(ca, cb));
    }
  return lattice_from_tables(Poset::from_relation(std::move(labels), std::move(rel)),
                             std::move(join), std::move(meet));
}

Lattice sublattice(const Lattice& l, std::span<const std::size_t> elements) {
  const std::size_t m = elements.size();
  std::vector<std::size_t> local(l.size(), m);
  for (std::size_t i = 0; i < m; ++i) local[elements[i]] = i;
  std::vector<std::uint32_t> join(m * m), meet(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto jn = local[l.join(elements[i], elements[j])];
      const auto mt = local[l.meet(elements[i], elements[j])];
      if (jn == m || mt == m) throw InputError("subset is not closed under join and meet");
      join[i * m + j] = static_cast<std::uint32_t>(jn);
      meet[i * m + j] = static_cast<std::uint32_t>(mt);
    }
  return lattice_from_tables(l.poset().induced(elements), std::move(join), std::move(meet));
}

Lattice interval(const Lattice& l, std::size_t a, std::size_t b) {
  if (!l.leq(a, b)) throw InputError("interval bounds are not ordered");
  std::vector<std::size_t> elems;
  for (std::size_t c = 0; c < l.size(); ++c)
    if (l.leq(a, c) && l.leq(c, b)) elems.push_back(c);
  return sublattice(l, elems);
}

RankProfile rank_profile(const Lattice& l) {
  RankProfile rp;
  rp.rank_of.assign(l.size(), 0);
  for (auto a : l.poset().linear_extension())
    for (auto c : l.poset().lower_covers(a)) rp.rank_of[a] = std::max(rp.rank_of[a], rp.rank_of[c] + 1);
  rp.d = rp.rank_of[l.top()];
  rp.rho.assign(rp.d + 1, 0);
  for (auto r : rp.rank_of) ++rp.rho[r];
  if (rp.d >= 2) rp.theta = *std::max_element(rp.rho.begin() + 1, rp.rho.end() - 1);
  return rp;
}

std::optional<std::vector<std::size_t>> lattice_isomorphic(const Lattice& l1, const Lattice& l2) {
  if (l1.size() != l2.size()) return std::nullopt;
  if (!is_distributive(l1) || !is_distributive(l2)) {
    if (is_distributive(l1) != is_distributive(l2)) return std::nullopt;
    return poset_isomorphism(l1.poset(), l2.poset());
  }
  // Distributive: compare the posets of join-irreducibles, then extend via
  // a = join of the join-irreducibles below a.
  auto j1 = join_irreducible_elements(l1);
  auto j2 = join_irreducible_elements(l2);
  auto pmap = poset_isomorphism(l1.poset().induced(j1), l2.poset().induced(j2));
  if (!pmap) return std::nullopt;
  std::vector<std::size_t> map(l1.size());
  std::vector<char> hit(l2.size(), 0);
  for (std::size_t a = 0; a < l1.size(); ++a) {
    std::size_t img = l2.bottom();
    for (std::size_t k = 0; k < j1.size(); ++k)
      if (l1.leq(j1[k], a)) img = l2.join(img, j2[(*pmap)[k]]);
    map[a] = img;
    if (hit[img]) throw InvariantViolation("Birkhoff extension is not injective");
    hit[img] = 1;
  }
  for (std::size_t a = 0; a < l1.size(); ++a)
    for (std::size_t b = 0; b < l1.size(); ++b)
      if (l1.leq(a, b) != l2.leq(map[a], map[b]))
        throw InvariantViolation("Birkhoff extension does not preserve order");
  return map;
}

}  // namespace joinmeet
