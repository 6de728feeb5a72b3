#include "joinmeet/grassmannian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "joinmeet/error.hpp"

namespace joinmeet {

std::string PluckerSymbol::label(std::uint32_t n) const {
  std::string out = "[";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k && n >= 10) out += ",";
    out += std::to_string(indices[k]);
  }
  return out + "]";
}

namespace {

std::vector<PluckerSymbol> all_symbols(std::uint32_t d, std::uint32_t n) {
  std::vector<PluckerSymbol> out;
  PluckerSymbol cur;
  auto rec = [&](auto&& self, std::uint32_t from) -> void {
    if (cur.indices.size() == d) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t i = from; i + (d - cur.indices.size()) <= n + 1; ++i) {
      cur.indices.push_back(i);
      self(self, i + 1);
      cur.indices.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

bool below(const PluckerSymbol& a, const PluckerSymbol& b) {
  for (std::size_t k = 0; k < a.indices.size(); ++k)
    if (a.indices[k] > b.indices[k]) return false;
  return true;
}

Var var_of(std::uint32_t n, std::uint32_t row, std::uint32_t col) {
  return static_cast<Var>((row - 1) * n + (col - 1));
}

Monomial psi_monomial(const PluckerSymbol& s, std::uint32_t n) {
  Monomial m;
  for (std::uint32_t j = 1; j <= s.indices.size(); ++j) m = m * Monomial::var(var_of(n, j, s.indices[j - 1]));
  return m;
}

Monomial phi_monomial(const PluckerSymbol& s, std::uint32_t n) {
  Monomial m;
  for (std::uint32_t j = 1; j <= s.indices.size(); ++j)
    for (std::uint32_t k = j; k <= s.indices[j - 1]; ++k) m = m * Monomial::var(var_of(n, j, k));
  return m;
}

// Distinct products of r generators, r = 1..max_degree.
std::vector<std::size_t> product_counts(const std::vector<Monomial>& gens, std::uint32_t max_degree) {
  std::vector<std::size_t> out;
  std::unordered_set<Monomial, MonomialHash> level{Monomial()};
  for (std::uint32_t r = 1; r <= max_degree; ++r) {
    std::unordered_set<Monomial, MonomialHash> next;
    for (const auto& u : level)
      for (const auto& g : gens) next.insert(u * g);
    out.push_back(next.size());
    level = std::move(next);
  }
  return out;
}

// Presentation tag: the label without brackets, so variables read y[14].
std::string bare(const PluckerSymbol& s, std::uint32_t n) {
  const auto l = s.label(n);
  return l.substr(1, l.size() - 2);
}

}  // namespace

GrassLattice grass_lattice(std::uint32_t d, std::uint32_t n) {
  if (d < 2 || d > n) throw InputError("L(d, n) needs 2 <= d <= n");
  GrassLattice g;
  g.d = d;
  g.n = n;
  g.symbols = all_symbols(d, n);
  const std::size_t k = g.symbols.size();
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(g.symbols[a].label(n));
    for (std::size_t b = 0; b < k; ++b) leq[a * k + b] = below(g.symbols[a], g.symbols[b]);
  }
  g.lattice = as_lattice(Poset::from_relation(std::move(labels), std::move(leq)));
  if (!is_distributive(g.lattice)) throw InvariantViolation("L(d, n) is not distributive");
  // Joins and meets are componentwise max and min.
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      PluckerSymbol hi, lo;
      for (std::uint32_t j = 0; j < d; ++j) {
        hi.indices.push_back(std::max(g.symbols[a].indices[j], g.symbols[b].indices[j]));
        lo.indices.push_back(std::min(g.symbols[a].indices[j], g.symbols[b].indices[j]));
      }
      if (g.symbols[g.lattice.join(a, b)] != hi || g.symbols[g.lattice.meet(a, b)] != lo)
        throw InvariantViolation("L(d, n) join or meet is not componentwise");
    }
  return g;
}

std::vector<PluckerSymbol> appendix_join_irreducibles(std::uint32_t d, std::uint32_t n) {
  std::vector<PluckerSymbol> out;
  for (std::uint32_t a = 2; a + d <= n + 1; ++a) {
    PluckerSymbol s;
    for (std::uint32_t k = 0; k < d; ++k) s.indices.push_back(a + k);
    out.push_back(s);
  }
  for (std::uint32_t a = 1; a < d; ++a)
    for (std::uint32_t b = 2; b + d <= n + 1; ++b) {
      PluckerSymbol s;
      for (std::uint32_t k = 1; k <= a; ++k) s.indices.push_back(k);
      for (std::uint32_t k = a + b; k <= b + d - 1; ++k) s.indices.push_back(k);
      out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PluckerSymbol> lattice_join_irreducibles(const GrassLattice& g) {
  std::vector<PluckerSymbol> out;
  for (auto a : join_irreducible_elements(g.lattice)) out.push_back(g.symbols[a]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> chain_decomposition(const GrassLattice& g) {
  std::map<PluckerSymbol, std::size_t> index;
  for (std::size_t a = 0; a < g.symbols.size(); ++a) index.emplace(g.symbols[a], a);
  const auto ji = join_irreducible_elements(g.lattice);
  const std::set<std::size_t> ji_set(ji.begin(), ji.end());
  std::set<std::size_t> used;
  std::vector<std::vector<std::size_t>> chains(g.d);
  for (std::uint32_t j = 1; j <= g.d; ++j)
    for (std::uint32_t k = j + 1; k + g.d <= g.n + j; ++k) {
      PluckerSymbol s;
      for (std::uint32_t t = 1; t < j; ++t) s.indices.push_back(t);
      for (std::uint32_t t = k; s.indices.size() < g.d; ++t) s.indices.push_back(t);
      const auto a = index.at(s);
      if (!ji_set.count(a) || !used.insert(a).second)
        throw InvariantViolation("chain element " + s.label(g.n) + " is not a new join-irreducible");
      if (!chains[j - 1].empty() && (chains[j - 1].back() == a || !g.lattice.leq(chains[j - 1].back(), a)))
        throw InvariantViolation("chain P_" + std::to_string(j) + " is not increasing");
      chains[j - 1].push_back(a);
    }
  if (used != ji_set) throw InvariantViolation("chains do not cover the join-irreducibles");
  for (std::size_t xi = 0; xi < g.symbols.size(); ++xi)
    for (std::uint32_t j = 1; j <= g.d; ++j)
      for (std::size_t q = 0; q < chains[j - 1].size(); ++q) {
        const std::uint32_t k = j + 1 + static_cast<std::uint32_t>(q);
        if (g.lattice.leq(chains[j - 1][q], xi) != (k <= g.symbols[xi].indices[j - 1]))
          throw InvariantViolation("x_{j,k} <= xi iff k <= i_j fails");
      }
  return chains;
}

RingHandle grass_ring(std::uint32_t d, std::uint32_t n) {
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= d; ++i)
    for (std::uint32_t j = 1; j <= n; ++j) names.push_back("x[" + std::to_string(i) + "," + std::to_string(j) + "]");
  return make_ring(std::move(names));
}

Polynomial plucker_polynomial(const PluckerSymbol& s, const RingHandle& ring, std::uint32_t d, std::uint32_t n) {
  if (d > 5) throw BudgetExceeded("determinant expansion is capped at d = 5");
  if (s.indices.size() != d || ring->size() != static_cast<std::size_t>(d) * n)
    throw InputError("symbol length does not match d");
  for (std::size_t k = 0; k < d; ++k)
    if (s.indices[k] < 1 || s.indices[k] > n || (k && s.indices[k] <= s.indices[k - 1]))
      throw InputError("symbol indices must be strictly increasing in [1, n]");
  std::vector<std::uint32_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<Term> terms;
  do {
    int inversions = 0;
    for (std::uint32_t a = 0; a < d; ++a)
      for (std::uint32_t b = a + 1; b < d; ++b) inversions += perm[a] > perm[b];
    Monomial m;
    for (std::uint32_t r = 0; r < d; ++r) m = m * Monomial::var(var_of(n, r + 1, s.indices[perm[r]]));
    terms.push_back({m, Rational(inversions % 2 ? -1 : 1)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto p = Polynomial::from_terms(ring, std::move(terms));
  const auto lt = p.leading_term(MonomialOrder::lex());
  if (lt.m != psi_monomial(s, n) || lt.c != 1)
    throw InvariantViolation("diagonal is not the leading term of " + s.label(n));
  return p;
}

PresentationMap plucker_presentation(const GrassLattice& g) {
  auto ring = grass_ring(g.d, g.n);
  std::vector<std::string> tags;
  std::vector<Polynomial> imgs;
  for (const auto& s : g.symbols) {
    tags.push_back(bare(s, g.n));
    imgs.push_back(plucker_polynomial(s, ring, g.d, g.n));
  }
  return PresentationMap(ring, std::move(tags), std::move(imgs));
}

PresentationMap psi_presentation(const GrassLattice& g) {
  auto ring = grass_ring(g.d, g.n);
  std::vector<std::string> tags;
  std::vector<Polynomial> imgs;
  for (const auto& s : g.symbols) {
    tags.push_back(bare(s, g.n));
    imgs.push_back(Polynomial::monomial(ring, psi_monomial(s, g.n)));
  }
  return PresentationMap(ring, std::move(tags), std::move(imgs));
}

GrassAslReport grass_asl_check(std::uint32_t d, std::uint32_t n, std::uint32_t max_deg) {
  const auto g = grass_lattice(d, n);
  const auto m = plucker_presentation(g);
  GrassAslReport r;
  r.d = d;
  r.n = n;
  AslStructure a(m, g.lattice.poset());
  // Under row-major lex the leading terms are the psi monomials.
  r.report = asl_check(a, max_deg, MonomialOrder::lex());
  for (std::size_t x = 0; x < g.symbols.size(); ++x)
    for (std::size_t y = x + 1; y < g.symbols.size(); ++y) r.incomparable_pairs += !g.lattice.comparable(x, y);
  return r;
}

bool psi_multiplicativity(std::uint32_t d, std::uint32_t n) {
  const auto g = grass_lattice(d, n);
  for (std::size_t a = 0; a < g.symbols.size(); ++a)
    for (std::size_t b = 0; b < g.symbols.size(); ++b) {
      const auto lhs = psi_monomial(g.symbols[a], n) * psi_monomial(g.symbols[b], n);
      const auto rhs = psi_monomial(g.symbols[g.lattice.join(a, b)], n) * psi_monomial(g.symbols[g.lattice.meet(a, b)], n);
      if (lhs != rhs) return false;
    }
  return true;
}

PhiMapReport phi_map_check(std::uint32_t d, std::uint32_t n, std::uint32_t max_degree) {
  const auto g = grass_lattice(d, n);
  PhiMapReport r;
  r.size = g.symbols.size();
  std::vector<Monomial> phi, psi;
  for (const auto& s : g.symbols) {
    phi.push_back(phi_monomial(s, n));
    psi.push_back(psi_monomial(s, n));
  }
  r.phi_dims = product_counts(phi, max_degree);
  r.psi_dims = product_counts(psi, max_degree);

  // sigma(x_{j,k}) = x_{j,j} ... x_{j,k} for k >= j; its exponent matrix is
  // unitriangular on those variables, hence injective on monomials.
  auto sigma = [&](const Monomial& u) {
    Monomial out;
    for (auto [v, e] : u.entries()) {
      const std::uint32_t j = v / n + 1, k = v % n + 1;
      if (k < j) return std::optional<Monomial>();
      for (std::uint32_t t = j; t <= k; ++t)
        out = out * Monomial::var(var_of(n, j, t), e);
    }
    return std::optional<Monomial>(out);
  };
  r.substitution_ok = true;
  r.psi_divides_phi = true;
  for (std::size_t a = 0; a < r.size; ++a) {
    const auto s = sigma(psi[a]);
    r.substitution_ok = r.substitution_ok && s && *s == phi[a];
    r.psi_divides_phi = r.psi_divides_phi && divides(psi[a], phi[a]);
  }

  // Literal membership. A product of psi's has degree divisible by d.
  std::uint32_t top = 0;
  for (const auto& u : phi) top = std::max(top, u.degree());
  std::vector<std::unordered_set<Monomial, MonomialHash>> psi_products{{Monomial()}};
  for (std::uint32_t t = 1; t * d <= top; ++t) {
    std::unordered_set<Monomial, MonomialHash> next;
    for (const auto& u : psi_products.back())
      for (const auto& p : psi) next.insert(u * p);
    psi_products.push_back(std::move(next));
  }
  for (const auto& u : phi)
    if (u.degree() % d == 0 && psi_products[u.degree() / d].count(u)) ++r.phi_in_psi;
  // Every phi contains x_{1,1}, a psi at most once, so a psi in K[phi] is a single phi.
  const std::unordered_set<Monomial, MonomialHash> phi_set(phi.begin(), phi.end());
  for (const auto& u : psi) r.psi_in_phi += phi_set.count(u);
  return r;
}

}  // namespace joinmeet
