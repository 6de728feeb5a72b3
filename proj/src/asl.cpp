#include "joinmeet/asl.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "joinmeet/classify.hpp"
#include "joinmeet/error.hpp"

namespace joinmeet {

std::vector<StandardMonomial> standard_monomials(const Poset& p, std::uint32_t d) {
  std::vector<StandardMonomial> out;
  StandardMonomial cur;
  auto rec = [&](auto&& self, std::uint32_t left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!cur.chain.empty() && !p.leq(cur.chain.back(), b)) continue;
      cur.chain.push_back(b);
      self(self, left - 1);
      cur.chain.pop_back();
    }
  };
  rec(rec, d);
  return out;
}

AslStructure::AslStructure(const PresentationMap& m, const Poset& p, std::vector<std::size_t> injection)
    : map(&m), poset(&p), generator_of(std::move(injection)) {
  if (generator_of.size() != p.size() || p.size() != m.size())
    throw InputError("ASL structure: poset size differs from the number of generators");
  std::vector<char> hit(m.size(), 0);
  for (auto g : generator_of) {
    if (g >= m.size() || hit[g]) throw InputError("ASL structure: injection is not a bijection");
    hit[g] = 1;
  }
}

AslStructure::AslStructure(const PresentationMap& m, const Poset& p)
    : AslStructure(m, p, [&] {
        std::vector<std::size_t> id(p.size());
        for (std::size_t a = 0; a < id.size(); ++a) id[a] = a;
        return id;
      }()) {}

Monomial AslStructure::y_monomial(const StandardMonomial& s) const {
  Monomial u;
  for (auto a : s.chain) u = u * Monomial::var(static_cast<Var>(generator_of[a]));
  return u;
}

namespace {

// Integer coordinates of polynomials over shared monomial columns.
class Columns {
 public:
  /// p = vec / scale.
  SparseVec<mpz_class> vec(const Polynomial& p, mpz_class& scale) {
    scale = 1;
    for (const auto& t : p.terms()) scale = lcm(scale, t.c.get_den());
    SparseVec<mpz_class> v;
    for (const auto& t : p.terms()) {
      auto [it, fresh] = ids_.emplace(t.m, static_cast<std::uint32_t>(ids_.size()));
      (void)fresh;
      mpq_class s = t.c * scale;
      v.emplace_back(it->second, s.get_num());
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

 private:
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> ids_;
};

Polynomial image(const AslStructure& a, const StandardMonomial& s) {
  return a.map->apply(Polynomial::monomial(a.map->source(), a.y_monomial(s)));
}

// Coefficients r with target = sum r_k candidates[k], using only pivots in
// insertion order (free coefficients zero).
std::optional<std::vector<Rational>> solve(const std::vector<Polynomial>& candidates, const Polynomial& target) {
  Columns cols;
  Echelon<IntegerField> ech;
  std::vector<mpz_class> scales(candidates.size());
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    auto v = cols.vec(candidates[k], scales[k]);
    SparseVec<mpz_class> track{{static_cast<std::uint32_t>(k), mpz_class(1)}};
    if (!ech.reduce(v, &track)) ech.add(std::move(v), std::move(track));
  }
  mpz_class sb;
  auto b = cols.vec(target, sb);
  const auto extra = static_cast<std::uint32_t>(candidates.size());
  SparseVec<mpz_class> track{{extra, mpz_class(1)}};
  if (!ech.reduce(b, &track)) return std::nullopt;
  // lambda*sb*target + sum c_k*s_k*candidate_k = 0.
  mpz_class lambda = 0;
  for (const auto& [k, c] : track)
    if (k == extra) lambda = c;
  std::vector<Rational> r(candidates.size(), 0);
  for (const auto& [k, c] : track) {
    if (k == extra) continue;
    r[k] = Rational(-c * scales[k], lambda * sb);
    r[k].canonicalize();
  }
  return r;
}

}  // namespace

std::vector<Asl1Degree> asl1_check(const AslStructure& a, std::uint32_t max_deg) {
  KernelOptions ko;
  ko.minimal_generators = false;
  GradedKernel engine(*a.map, ko);
  std::vector<Asl1Degree> out;
  for (std::uint32_t d = 1; d <= max_deg; ++d) {
    Asl1Degree r;
    r.degree = d;
    const auto std_d = standard_monomials(*a.poset, d);
    r.standard = std_d.size();
    r.hilbert = engine.degree(d).hilbert;
    Columns cols;
    Echelon<IntegerField> ech;
    std::size_t rank = 0;
    for (const auto& s : std_d) {
      mpz_class sc;
      if (ech.insert(cols.vec(image(a, s), sc))) ++rank;
    }
    r.independent = rank == r.standard;
    r.ok = r.independent && r.standard == r.hilbert;
    out.push_back(r);
  }
  return out;
}

MonomialOrder revlex_from_poset(const AslStructure& a) {
  const auto ext = a.poset->linear_extension();
  const std::size_t n = ext.size();
  std::vector<std::uint32_t> rank(n);
  for (std::size_t pos = 0; pos < n; ++pos) rank[a.generator_of[ext[pos]]] = static_cast<std::uint32_t>(n - 1 - pos);
  return MonomialOrder::degrevlex().with_ranking(std::move(rank));
}

StraighteningRelation straighten(const AslStructure& a, std::size_t alpha, std::size_t beta) {
  const Poset& p = *a.poset;
  if (p.comparable(alpha, beta))
    throw InputError("straighten: " + p.label(alpha) + " and " + p.label(beta) + " are comparable");
  StraighteningRelation rel;
  rel.alpha = alpha;
  rel.beta = beta;
  const auto product = image(a, {{std::min(alpha, beta), std::max(alpha, beta)}});
  const auto all = standard_monomials(p, 2);
  std::vector<StandardMonomial> shaped;
  for (const auto& s : all)
    if (p.leq(s.chain[0], alpha) && p.leq(s.chain[0], beta)) shaped.push_back(s);

  auto images_of = [&](const std::vector<StandardMonomial>& ss) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(image(a, s));
    return out;
  };
  const auto all_images = images_of(all);
  {
    Columns cols;
    Echelon<IntegerField> ech;
    std::size_t rank = 0;
    for (const auto& q : all_images) {
      mpz_class sc;
      if (ech.insert(cols.vec(q, sc))) ++rank;
    }
    rel.unique = rank == all.size();
  }
  const std::vector<StandardMonomial>* used = &shaped;
  auto sol = solve(images_of(shaped), product);
  rel.asl2_ok = sol.has_value();
  if (!sol) {
    used = &all;
    sol = solve(all_images, product);
  }
  if (!sol)
    throw NoExpression("no standard-monomial expression for " + p.label(alpha) + " * " + p.label(beta));

  const auto& ring = a.map->source();
  rel.relation = Polynomial::monomial(ring, a.y_monomial({{alpha, beta}}));
  for (std::size_t k = 0; k < used->size(); ++k) {
    if (sgn((*sol)[k]) == 0) continue;
    rel.terms.emplace_back((*sol)[k], (*used)[k]);
    rel.relation -= Polynomial::monomial(ring, a.y_monomial((*used)[k]), (*sol)[k]);
  }
  if (!a.map->apply(rel.relation).is_zero())
    throw InvariantViolation("straightening relation does not vanish for " + p.label(alpha) + ", " + p.label(beta));
  const auto order = revlex_from_poset(a);
  rel.revlex_lead_ok = rel.relation.leading_term(order).m == a.y_monomial({{alpha, beta}}) &&
                       rel.relation.leading_term(order).c == 1;
  return rel;
}

AslReport asl_check(const AslStructure& a, std::uint32_t max_deg, const std::optional<MonomialOrder>& initial_order) {
  AslReport rep;
  rep.max_degree = max_deg;
  rep.asl1 = asl1_check(a, max_deg);
  rep.asl1_ok = std::all_of(rep.asl1.begin(), rep.asl1.end(), [](const Asl1Degree& r) { return r.ok; });
  const Poset& p = *a.poset;
  rep.weakly = true;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      if (p.comparable(x, y)) continue;
      try {
        rep.relations.push_back(straighten(a, x, y));
        rep.weakly = rep.weakly && rep.relations.back().asl2_ok;
      } catch (const NoExpression&) {
        rep.no_expression.emplace_back(x, y);
        rep.weakly = false;
      }
    }
  bool unique = std::all_of(rep.relations.begin(), rep.relations.end(),
                            [](const StraighteningRelation& r) { return r.unique; });
  rep.asl = rep.asl1_ok && rep.weakly && unique;
  if (initial_order) {
    std::vector<Polynomial> leads;
    std::set<Monomial> seen;
    bool distinct = true;
    for (const auto& f : a.map->images()) {
      const auto m = f.leading_term(*initial_order).m;
      distinct = distinct && seen.insert(m).second;
      leads.push_back(Polynomial::monomial(a.map->target(), m));
    }
    if (!distinct) {
      rep.initial_asl = false;
    } else {
      PresentationMap mi(a.map->target(), a.map->tags(), std::move(leads));
      AslStructure ai(mi, p, a.generator_of);
      rep.initial_asl = asl_check(ai, max_deg).asl;
    }
    rep.transfer_consistent = !(*rep.initial_asl && rep.weakly) || rep.asl;
  }
  return rep;
}

namespace {

// Labels x_1..x_n, y_1..y_n given x_1 = x1, y_1 = y1.
void label_chains(const Lattice& l, const std::vector<std::vector<std::size_t>>& level, std::size_t x1,
                  std::size_t y1, std::vector<std::size_t>& x, std::vector<std::size_t>& y) {
  x = {x1};
  y = {y1};
  for (std::size_t i = 2; i + 1 < level.size(); ++i) {
    const std::size_t c = level[i][0], d = level[i][1];
    const std::size_t px = x.back(), py = y.back();
    const bool xc = l.leq(px, c), xd = l.leq(px, d), yc = l.leq(py, c), yd = l.leq(py, d);
    if (xc && xd && yc != yd) {
      y.push_back(yc ? c : d);
      x.push_back(yc ? d : c);
    } else if (yc && yd && xc != xd) {
      x.push_back(xc ? c : d);
      y.push_back(xc ? d : c);
    } else {
      throw InvariantViolation("thin lattice chains cannot be labelled at rank " + std::to_string(i));
    }
  }
}

}  // namespace

QLattice q_lattice(const Lattice& l, bool swap) {
  if (!is_thin(l)) throw NotThin();
  const auto rp = rank_profile(l);
  std::vector<std::vector<std::size_t>> level(rp.d + 1);
  for (std::size_t a = 0; a < l.size(); ++a) level[rp.rank_of[a]].push_back(a);
  const auto ji = join_irreducible_elements(l);
  auto ji_count = [&](const std::vector<std::size_t>& chain) {
    return std::count_if(chain.begin(), chain.end(),
                         [&](std::size_t a) { return std::find(ji.begin(), ji.end(), a) != ji.end(); });
  };
  QLattice q;
  std::vector<std::size_t> xa, ya, xb, yb;
  label_chains(l, level, level[1][0], level[1][1], xa, ya);
  label_chains(l, level, level[1][1], level[1][0], xb, yb);
  bool first = ji_count(xa) >= ji_count(xb);
  if (swap) first = !first;
  q.x = first ? xa : xb;
  q.y = first ? ya : yb;

  const auto sys = join_meet_system(l);
  const std::uint32_t n = static_cast<std::uint32_t>(q.x.size());
  std::vector<std::string> labels;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = 1; j <= n; ++j) {
      const std::size_t a = q.x[i - 1], b = q.y[j - 1];
      if (l.comparable(a, b)) continue;
      const auto key = std::make_pair(std::min(a, b), std::max(a, b));
      const auto it = std::find(sys.pairs.begin(), sys.pairs.end(), key);
      if (it == sys.pairs.end()) throw InvariantViolation("missing binomial for an incomparable pair");
      q.pairs.emplace_back(i, j);
      q.generator.push_back(static_cast<std::size_t>(it - sys.pairs.begin()));
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  const std::size_t k = q.pairs.size();
  std::vector<std::uint8_t> leq(k * k, 0);
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t)
      leq[s * k + t] = q.pairs[s].first <= q.pairs[t].first && q.pairs[s].second <= q.pairs[t].second;
  q.poset = Poset::from_relation(std::move(labels), std::move(leq));
  return q;
}

bool is_chain(const QLattice& q) { return q.poset.is_chain(); }

AslStructure thin_asl_structure(const PresentationMap& m, const QLattice& q) {
  return AslStructure(m, q.poset, q.generator);
}

PluckerIdentityReport plucker_identity_check(std::uint32_t n) {
  if (n < 2) throw InputError("plucker identity needs n >= 2");
  std::uint64_t top = 2;
  for (std::uint32_t k = 1; k < n; ++k) top *= 3;
  const auto l = divisor_lattice(top);
  const auto ring = lattice_ring(l);
  auto pow3 = [](std::uint32_t e) {
    std::uint64_t v = 1;
    for (std::uint32_t k = 0; k < e; ++k) v *= 3;
    return v;
  };
  // x_a = 3^a (a = 0..n-1), y_b = 2*3^(b-1) (b = 1..n).
  auto xe = [&](std::uint32_t a) { return l.index_of(std::to_string(pow3(a))); };
  auto ye = [&](std::uint32_t b) { return l.index_of(std::to_string(2 * pow3(b - 1))); };
  auto X = [&](std::uint32_t a) { return Polynomial::variable(ring, static_cast<Var>(xe(a))); };
  auto Y = [&](std::uint32_t b) { return Polynomial::variable(ring, static_cast<Var>(ye(b))); };
  // f_{a,b} as a lattice binomial, checked against y_b x_a - y_{a+1} x_{b-1}.
  auto f = [&](std::uint32_t a, std::uint32_t b) {
    auto g = join_meet_binomial(l, ring, xe(a), ye(b));
    if (g != Y(b) * X(a) - Y(a + 1) * X(b - 1))
      throw InvariantViolation("f_{" + std::to_string(a) + "," + std::to_string(b) + "} has an unexpected shape");
    return g;
  };
  PluckerIdentityReport rep;
  for (std::uint32_t i = 1; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      for (std::uint32_t k = j; k < n; ++k)
        for (std::uint32_t el = k + 1; el < n; ++el) {
          ++rep.tuples;
          const auto lhs = f(el, i) * f(k, j);
          if (lhs == f(k, i) * f(el, j) - f(j - 1, i) * f(el, k + 1)) ++rep.holding;
          const auto literal = (Y(i) * X(k) - Y(k) * X(i - 1)) * (Y(j) * X(el) - Y(el) * X(j - 1)) -
                               (Y(i) * X(j - 1) - Y(j) * X(i - 1)) * (Y(k + 1) * X(el) - Y(el + 1) * X(k));
          if (lhs == literal) ++rep.literal_holding;
        }
  return rep;
}

}  // namespace joinmeet
