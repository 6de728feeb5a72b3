#include "joinmeet/groebner.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <tuple>
#include <unordered_map>

#include "joinmeet/error.hpp"

namespace joinmeet {

namespace {

using MonoId = std::uint32_t;

// Interned monomials with precomputed order keys, so the inner loops compare
// flat integer arrays instead of re-deriving the order.
class MonoTable {
 public:
  MonoTable(const MonomialOrder& order, std::size_t nvars, std::span<const std::int64_t> grading)
      : order_(order), nvars_(nvars), grading_(grading.begin(), grading.end()) {}

  MonoId intern(const Monomial& m) {
    auto it = index_.find(m);
    if (it != index_.end()) return it->second;
    const auto id = static_cast<MonoId>(monos_.size());
    scratch_.clear();
    order_.append_key(m, nvars_, scratch_);
    if (key_len_ == 0 && !scratch_.empty()) key_len_ = scratch_.size();
    keys_.insert(keys_.end(), scratch_.begin(), scratch_.end());
    std::uint64_t mask = 0;
    for (auto [v, e] : m.entries()) mask |= std::uint64_t{1} << (v % 64);
    masks_.push_back(mask);
    wdeg_.push_back(weighted_degree(m));
    monos_.push_back(m);
    index_.emplace(m, id);
    return id;
  }

  int cmp(MonoId a, MonoId b) const {
    if (a == b) return 0;
    const auto* ka = keys_.data() + a * key_len_;
    const auto* kb = keys_.data() + b * key_len_;
    for (std::size_t i = 0; i < key_len_; ++i)
      if (ka[i] != kb[i]) return ka[i] < kb[i] ? -1 : 1;
    return 0;
  }

  const Monomial& mono(MonoId id) const { return monos_[id]; }
  std::int64_t wdeg(MonoId id) const { return wdeg_[id]; }
  std::uint64_t mask(MonoId id) const { return masks_[id]; }

  std::int64_t weighted_degree(const Monomial& m) const {
    std::int64_t s = 0;
    for (auto [v, e] : m.entries())
      s += static_cast<std::int64_t>(e) * (grading_.empty() ? 1 : (v < grading_.size() ? grading_[v] : 1));
    return s;
  }

 private:
  const MonomialOrder& order_;
  std::size_t nvars_;
  std::vector<std::int64_t> grading_;
  std::size_t key_len_ = 0;
  std::vector<std::int64_t> keys_, scratch_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::int64_t> wdeg_;
  std::deque<Monomial> monos_;  // stable references across intern()
  std::unordered_map<Monomial, MonoId, MonomialHash> index_;
};

// Terms sorted by decreasing monomial.
struct IPoly {
  std::vector<MonoId> mons;
  std::vector<Rational> coefs;
  std::int64_t sugar = 0;
  bool empty() const { return mons.empty(); }
};

class Engine {
 public:
  Engine(const MonomialOrder& order, std::size_t nvars, const GroebnerOptions& opts)
      : table_(order, nvars, opts.grading) {}

  IPoly import(const Polynomial& f) {
    IPoly p;
    std::vector<std::pair<MonoId, Rational>> tmp;
    for (const auto& t : f.terms()) tmp.emplace_back(table_.intern(t.m), t.c);
    std::sort(tmp.begin(), tmp.end(),
              [&](const auto& a, const auto& b) { return table_.cmp(a.first, b.first) > 0; });
    for (auto& [m, c] : tmp) {
      p.mons.push_back(m);
      p.coefs.push_back(std::move(c));
      p.sugar = std::max(p.sugar, table_.wdeg(m));
    }
    return p;
  }

  Polynomial export_poly(const IPoly& p, const RingHandle& ring) const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < p.mons.size(); ++i) terms.push_back({table_.mono(p.mons[i]), p.coefs[i]});
    return Polynomial::from_terms(ring, std::move(terms));
  }

  void make_monic(IPoly& p) const {
    if (p.empty() || p.coefs[0] == 1) return;
    const Rational inv = 1 / p.coefs[0];
    for (auto& c : p.coefs) c *= inv;
  }

  // a - c * q * b, skipping the (cancelling) leading terms of both.
  IPoly sub_shifted(const IPoly& a, std::size_t a_from, const Rational& c, const Monomial& q,
                    const IPoly& b) {
    IPoly out;
    out.sugar = std::max(a.sugar, b.sugar + table_.weighted_degree(q));
    std::vector<MonoId> shifted;
    shifted.reserve(b.mons.size());
    for (std::size_t k = 1; k < b.mons.size(); ++k) shifted.push_back(table_.intern(table_.mono(b.mons[k]) * q));
    std::size_t i = a_from, j = 0;
    out.mons.reserve(a.mons.size() - a_from + shifted.size());
    out.coefs.reserve(out.mons.capacity());
    while (i < a.mons.size() || j < shifted.size()) {
      int cm = i == a.mons.size() ? -1 : (j == shifted.size() ? 1 : table_.cmp(a.mons[i], shifted[j]));
      if (cm > 0) {
        out.mons.push_back(a.mons[i]);
        out.coefs.push_back(a.coefs[i]);
        ++i;
      } else if (cm < 0) {
        out.mons.push_back(shifted[j]);
        out.coefs.push_back(-c * b.coefs[j + 1]);
        ++j;
      } else {
        Rational v = a.coefs[i] - c * b.coefs[j + 1];
        if (sgn(v) != 0) {
          out.mons.push_back(a.mons[i]);
          out.coefs.push_back(std::move(v));
        }
        ++i, ++j;
      }
    }
    return out;
  }

  const IPoly* find_reducer(MonoId m, std::span<const std::size_t> active, const std::vector<IPoly>& polys,
                            std::size_t skip = SIZE_MAX) const {
    const auto mm = table_.mask(m);
    const auto& mono = table_.mono(m);
    for (auto k : active) {
      if (k == skip) continue;
      const auto lm = polys[k].mons[0];
      if (table_.mask(lm) & ~mm) continue;
      if (divides(table_.mono(lm), mono)) return &polys[k];
    }
    return nullptr;
  }

  // Full reduction against polys[active] (except `skip`).
  IPoly reduce(IPoly h, std::span<const std::size_t> active, const std::vector<IPoly>& polys,
               bool monic = true, std::size_t skip = SIZE_MAX) {
    IPoly result;
    result.sugar = h.sugar;
    std::size_t start = 0;
    while (start < h.mons.size()) {
      const IPoly* g = find_reducer(h.mons[start], active, polys, skip);
      if (!g) {
        result.mons.push_back(h.mons[start]);
        result.coefs.push_back(h.coefs[start]);
        ++start;
        continue;
      }
      const Monomial q = table_.mono(h.mons[start]) / table_.mono(g->mons[0]);
      const Rational c = h.coefs[start] / g->coefs[0];
      h = sub_shifted(h, start + 1, c, q, *g);
      start = 0;
      result.sugar = std::max(result.sugar, h.sugar);
    }
    if (monic) make_monic(result);
    return result;
  }

  IPoly spoly(const IPoly& f, const IPoly& g) {
    const Monomial& lf = table_.mono(f.mons[0]);
    const Monomial& lg = table_.mono(g.mons[0]);
    const Monomial l = lcm(lf, lg);
    const Monomial qf = l / lf, qg = l / lg;
    IPoly ff;
    ff.sugar = f.sugar + table_.weighted_degree(qf);
    for (std::size_t k = 0; k < f.mons.size(); ++k) {
      ff.mons.push_back(table_.intern(table_.mono(f.mons[k]) * qf));
      ff.coefs.push_back(f.coefs[k] / f.coefs[0]);
    }
    return sub_shifted(ff, 1, 1 / g.coefs[0], qg, g);
  }

  MonoTable& table() { return table_; }

 private:
  MonoTable table_;
};

struct Pair {
  std::size_t i, j;
  MonoId lcm;
  std::int64_t sugar;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const GroebnerOptions& opts) {
  GroebnerBasis out;
  out.order = order;
  out.degree_cap = opts.degree_cap;
  RingHandle ring;
  for (const auto& g : gens) {
    if (!ring) ring = g.ring();
    if (g.ring() != ring) throw RingMismatch();
  }
  if (!ring) return out;
  Engine eng(order, ring->size(), opts);
  auto& tab = eng.table();

  std::vector<IPoly> polys;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto update = [&](std::size_t h) {
    const MonoId lh = polys[h].mons[0];
    const Monomial& mh = tab.mono(lh);
    // New pairs (h, g), pruned by the chain and product criteria.
    std::vector<Pair> cand;
    for (auto g : active) {
      const MonoId l = tab.intern(lcm(mh, tab.mono(polys[g].mons[0])));
      const auto& lg = tab.mono(polys[g].mons[0]);
      const std::int64_t sug = std::max(polys[h].sugar + tab.wdeg(l) - tab.wdeg(lh),
                                        polys[g].sugar + tab.wdeg(l) - tab.weighted_degree(lg));
      cand.push_back({g, h, l, sug});
    }
    std::vector<char> coprime_flag(cand.size());
    for (std::size_t a = 0; a < cand.size(); ++a)
      coprime_flag[a] = coprime(mh, tab.mono(polys[cand[a].i].mons[0]));
    std::vector<char> keep(cand.size(), 1);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (coprime_flag[a]) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (!divides(tab.mono(cand[b].lcm), tab.mono(cand[a].lcm))) continue;
        // Strict divisibility, or equal lcm with the earlier candidate kept.
        if (cand[b].lcm != cand[a].lcm || b < a) {
          keep[a] = 0;
          break;
        }
      }
    }
    // Among kept pairs with equal lcm, one coprime pair kills the group.
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      bool dead = coprime_flag[a];
      for (std::size_t b = 0; b < cand.size() && !dead; ++b)
        if (b != a && cand[b].lcm == cand[a].lcm && coprime_flag[b]) dead = true;
      if (!dead) fresh.push_back(cand[a]);
    }
    // Old pairs made redundant by h.
    std::vector<Pair> kept_old;
    for (const auto& p : pairs) {
      const Monomial& l = tab.mono(p.lcm);
      if (divides(mh, l)) {
        const MonoId li = tab.intern(lcm(tab.mono(polys[p.i].mons[0]), mh));
        const MonoId lj = tab.intern(lcm(tab.mono(polys[p.j].mons[0]), mh));
        if (li != p.lcm && lj != p.lcm) continue;
      }
      kept_old.push_back(p);
    }
    pairs = std::move(kept_old);
    pairs.insert(pairs.end(), fresh.begin(), fresh.end());
    std::vector<std::size_t> next;
    for (auto g : active)
      if (!divides(mh, tab.mono(polys[g].mons[0]))) next.push_back(g);
    next.push_back(h);
    active = std::move(next);
  };

  // Seed with the inputs, each reduced against those before it.
  std::vector<IPoly> seeds;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    seeds.push_back(eng.import(g));
  }
  std::sort(seeds.begin(), seeds.end(), [&](const IPoly& a, const IPoly& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    return tab.cmp(a.mons[0], b.mons[0]) < 0;
  });
  for (auto& s : seeds) {
    IPoly r = eng.reduce(std::move(s), active, polys);
    if (r.empty()) continue;
    polys.push_back(std::move(r));
    update(polys.size() - 1);
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (int c = tab.cmp(a.lcm, b.lcm)) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    const Pair p = *best;
    *best = pairs.back();
    pairs.pop_back();
    if (opts.degree_cap && tab.wdeg(p.lcm) > static_cast<std::int64_t>(*opts.degree_cap)) {
      out.truncated = true;
      continue;
    }
    if (++out.pairs_reduced > opts.max_pairs)
      throw BudgetExceeded("Groebner basis computation exceeded " + std::to_string(opts.max_pairs) +
                           " S-pairs");
    IPoly s = eng.spoly(polys[p.i], polys[p.j]);
    IPoly r = eng.reduce(std::move(s), active, polys);
    if (r.empty()) continue;
    polys.push_back(std::move(r));
    update(polys.size() - 1);
  }

  // Inter-reduce the surviving generators.
  std::vector<std::size_t> basis = active;
  std::sort(basis.begin(), basis.end(),
            [&](std::size_t a, std::size_t b) { return tab.cmp(polys[a].mons[0], polys[b].mons[0]) < 0; });
  for (auto k : basis) {
    IPoly tail;
    tail.mons.assign(polys[k].mons.begin() + 1, polys[k].mons.end());
    tail.coefs.assign(polys[k].coefs.begin() + 1, polys[k].coefs.end());
    IPoly rt = eng.reduce(std::move(tail), basis, polys, false, k);
    IPoly g;
    g.mons.push_back(polys[k].mons[0]);
    g.coefs.push_back(polys[k].coefs[0]);
    g.mons.insert(g.mons.end(), rt.mons.begin(), rt.mons.end());
    g.coefs.insert(g.coefs.end(), rt.coefs.begin(), rt.coefs.end());
    eng.make_monic(g);
    out.generators.push_back(eng.export_poly(g, ring));
  }
  return out;
}

bool buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrder& order) {
  if (basis.empty()) return true;
  const RingHandle ring = basis.front().ring();
  GroebnerOptions opts;
  Engine eng(order, ring->size(), opts);
  std::vector<IPoly> polys;
  std::vector<std::size_t> all;
  for (const auto& g : basis) {
    if (g.ring() != ring) throw RingMismatch();
    if (g.is_zero()) continue;
    polys.push_back(eng.import(g));
    all.push_back(polys.size() - 1);
  }
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (coprime(eng.table().mono(polys[i].mons[0]), eng.table().mono(polys[j].mons[0]))) continue;
      if (!eng.reduce(eng.spoly(polys[i], polys[j]), all, polys).empty()) return false;
    }
  return true;
}

bool is_reduced(std::span<const Polynomial> basis, const MonomialOrder& order) {
  std::vector<Monomial> leads;
  for (const auto& g : basis) {
    const auto& lt = g.leading_term(order);
    if (lt.c != 1) return false;
    leads.push_back(lt.m);
  }
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& t : basis[k].terms())
      for (std::size_t o = 0; o < basis.size(); ++o)
        if (o != k && divides(leads[o], t.m)) return false;
  return true;
}

GroebnerBasis eliminate(std::span<const Polynomial> gens, std::span<const Var> keep,
                        const EliminationOptions& opts) {
  if (gens.empty()) {
    GroebnerBasis empty;
    empty.order = opts.keep_order;
    return empty;
  }
  const RingHandle ring = gens.front().ring();
  std::vector<std::uint32_t> block_of(ring->size(), 0);
  for (auto v : keep) {
    if (v >= ring->size()) throw InputError("kept variable out of range");
    block_of[v] = 1;
  }
  const auto order = MonomialOrder::block(block_of, {MonomialOrder::degrevlex(), opts.keep_order});
  GroebnerBasis full = buchberger(gens, order, opts.gb);
  GroebnerBasis out;
  out.order = opts.keep_order;
  out.truncated = full.truncated;
  out.degree_cap = full.degree_cap;
  out.pairs_reduced = full.pairs_reduced;
  for (auto& g : full.generators) {
    bool inside = true;
    for (const auto& t : g.terms())
      for (auto [v, e] : t.m.entries())
        if (!block_of[v]) inside = false;
    if (inside) out.generators.push_back(std::move(g));
  }
  std::sort(out.generators.begin(), out.generators.end(), [&](const Polynomial& a, const Polynomial& b) {
    return opts.keep_order.less(a.leading_term(opts.keep_order).m, b.leading_term(opts.keep_order).m);
  });
  return out;
}

namespace {

std::int64_t var_weight(std::span<const std::int64_t> grading, Var v) {
  return grading.empty() ? 1 : (v < grading.size() ? grading[v] : 1);
}

void enumerate_degree(std::span<const Var> vars, std::span<const std::int64_t> grading, std::size_t k,
                      std::int64_t left, std::vector<Monomial::Entry>& cur,
                      const std::function<void(const Monomial&)>& visit) {
  if (left == 0) {
    visit(Monomial::from_entries(cur));
    return;
  }
  if (k == vars.size()) return;
  const auto w = var_weight(grading, vars[k]);
  if (w <= 0) throw InputError("grading weights must be positive");
  for (std::uint32_t e = 0; static_cast<std::int64_t>(e) * w <= left; ++e) {
    if (e) cur.emplace_back(vars[k], e);
    enumerate_degree(vars, grading, k + 1, left - static_cast<std::int64_t>(e) * w, cur, visit);
    if (e) cur.pop_back();
  }
}

std::int64_t weighted_degree(const Polynomial& p, std::span<const std::int64_t> grading) {
  std::int64_t best = 0;
  for (const auto& t : p.terms()) {
    std::int64_t s = 0;
    for (auto [v, e] : t.m.entries()) s += static_cast<std::int64_t>(e) * var_weight(grading, v);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

std::size_t count_initial_monomials(std::span<const Monomial> leads, std::span<const Var> vars,
                                    std::span<const std::int64_t> grading, std::uint32_t d) {
  std::size_t count = 0;
  std::vector<Monomial::Entry> cur;
  enumerate_degree(vars, grading, 0, d, cur, [&](const Monomial& m) {
    for (const auto& l : leads)
      if (divides(l, m)) {
        ++count;
        return;
      }
  });
  return count;
}

std::map<std::uint32_t, std::size_t> minimal_generator_degrees(const GroebnerBasis& gb,
                                                               std::span<const Var> vars,
                                                               std::span<const std::int64_t> grading,
                                                               std::uint32_t max_degree) {
  std::map<std::uint32_t, std::size_t> out;
  std::vector<Monomial> leads;
  for (const auto& g : gb.generators) {
    if (!g.is_homogeneous(grading.empty() ? std::vector<std::int64_t>(g.ring()->size(), 1)
                                          : std::vector<std::int64_t>(grading.begin(), grading.end())))
      throw InputError("minimal generator degrees need a homogeneous basis");
    leads.push_back(g.leading_term(gb.order).m);
  }
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    const std::size_t dim_ideal = count_initial_monomials(leads, vars, grading, d);
    std::vector<Polynomial> lower;
    for (const auto& g : gb.generators)
      if (weighted_degree(g, grading) < d) lower.push_back(g);
    std::size_t dim_lower = 0;
    if (!lower.empty()) {
      GroebnerOptions opts;
      opts.degree_cap = d;
      opts.grading.assign(grading.begin(), grading.end());
      auto partial = buchberger(lower, gb.order, opts);
      std::vector<Monomial> pl;
      for (const auto& g : partial.generators) pl.push_back(g.leading_term(gb.order).m);
      dim_lower = count_initial_monomials(pl, vars, grading, d);
    }
    if (dim_lower > dim_ideal) throw InvariantViolation("ideal generated in lower degrees is too large");
    out[d] = dim_ideal - dim_lower;
  }
  return out;
}

}  // namespace joinmeet
