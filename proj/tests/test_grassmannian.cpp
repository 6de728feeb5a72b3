#include <doctest.h>

#include <set>

#include "joinmeet/error.hpp"
#include "joinmeet/grassmannian.hpp"

using namespace joinmeet;

namespace {

PluckerSymbol sym(std::initializer_list<std::uint32_t> i) { return PluckerSymbol{std::vector<std::uint32_t>(i)}; }

std::size_t index_of(const GrassLattice& g, const PluckerSymbol& s) {
  for (std::size_t a = 0; a < g.symbols.size(); ++a)
    if (g.symbols[a] == s) return a;
  FAIL("missing symbol");
  return 0;
}

std::set<std::pair<std::string, std::string>> incomparable(const GrassLattice& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t a = 0; a < g.symbols.size(); ++a)
    for (std::size_t b = a + 1; b < g.symbols.size(); ++b)
      if (!g.lattice.comparable(a, b)) out.emplace(g.lattice.label(a), g.lattice.label(b));
  return out;
}

}  // namespace

TEST_SUITE("grassmannian") {
  TEST_CASE("L(2,4) and L(d,d)") {
    auto g = grass_lattice(2, 4);
    CHECK(g.symbols.size() == 6);
    CHECK(incomparable(g) == std::set<std::pair<std::string, std::string>>{{"[14]", "[23]"}});
    auto one = grass_lattice(3, 3);
    CHECK(one.symbols.size() == 1);
    CHECK(lattice_join_irreducibles(one).empty());
    CHECK_THROWS_AS(grass_lattice(5, 4), InputError);
    CHECK(sym({1, 10}).label(10) == "[1,10]");
    CHECK(sym({1, 4}).label(4) == "[14]");
  }

  TEST_CASE("join-irreducibles follow the closed form") {
    for (auto [d, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 7}}) {
      CAPTURE(d);
      CAPTURE(n);
      auto g = grass_lattice(d, n);
      auto ji = lattice_join_irreducibles(g);
      CHECK(ji == appendix_join_irreducibles(d, n));
      CHECK(ji.size() == d * (n - d));
    }
  }

  TEST_CASE("join-irreducibles of L(4,7) and the chains") {
    auto g = grass_lattice(4, 7);
    std::vector<PluckerSymbol> fig{sym({4, 5, 6, 7}), sym({3, 4, 5, 6}), sym({2, 3, 4, 5}), sym({1, 5, 6, 7}),
                                   sym({1, 4, 5, 6}), sym({1, 3, 4, 5}), sym({1, 2, 6, 7}), sym({1, 2, 5, 6}),
                                   sym({1, 2, 4, 5}), sym({1, 2, 3, 7}), sym({1, 2, 3, 6}), sym({1, 2, 3, 5})};
    std::sort(fig.begin(), fig.end());
    CHECK(lattice_join_irreducibles(g) == fig);
    auto chains = chain_decomposition(g);
    REQUIRE(chains.size() == 4);
    for (const auto& c : chains) CHECK(c.size() == 3);
    // [1345] = x_{2,3}, [1256] = x_{3,5}.
    CHECK(g.symbols[chains[1][0]] == sym({1, 3, 4, 5}));
    CHECK(g.symbols[chains[2][1]] == sym({1, 2, 5, 6}));
    // Covers drawn in the figure between join-irreducibles.
    CHECK(g.lattice.leq(index_of(g, sym({1, 4, 5, 6})), index_of(g, sym({3, 4, 5, 6}))));
    CHECK(g.lattice.leq(index_of(g, sym({1, 2, 3, 6})), index_of(g, sym({1, 2, 5, 6}))));
    CHECK_FALSE(g.lattice.comparable(index_of(g, sym({2, 3, 4, 5})), index_of(g, sym({1, 4, 5, 6}))));
  }

  TEST_CASE("determinants and their diagonal leading terms") {
    auto r = grass_ring(2, 4);
    auto p = plucker_polynomial(sym({1, 2}), r, 2, 4);
    auto x = [&](int i, int j) { return Polynomial::variable(r, static_cast<Var>((i - 1) * 4 + (j - 1))); };
    CHECK(p == x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1));
    auto r3 = grass_ring(3, 6);
    for (const auto& s : grass_lattice(3, 6).symbols) {
      auto q = plucker_polynomial(s, r3, 3, 6);
      CHECK(q.terms().size() == 6);
      CHECK(q.is_homogeneous());
    }
    CHECK_THROWS_AS(plucker_polynomial(sym({2, 2}), r, 2, 4), InputError);
    CHECK_THROWS_AS(plucker_polynomial(sym({3, 1}), r, 2, 4), InputError);
    CHECK_THROWS_AS(plucker_polynomial(sym({1, 2, 3, 4, 5, 6}), grass_ring(6, 6), 6, 6), BudgetExceeded);
  }

  TEST_CASE("Gr(2,4): one Plücker relation") {
    auto rep = grass_asl_check(2, 4, 3);
    CHECK(rep.report.asl);
    CHECK(rep.report.initial_asl == true);
    CHECK(rep.report.transfer_consistent);
    CHECK(rep.incomparable_pairs == 1);
    REQUIRE(rep.report.relations.size() == 1);
    CHECK(rep.report.asl1[1].standard == 20);
    CHECK(rep.report.asl1[1].hilbert == 20);

    auto g = grass_lattice(2, 4);
    const auto& rel = rep.report.relations[0];
    auto y = [&](std::initializer_list<std::uint32_t> i) {
      return Polynomial::variable(rel.relation.ring(), static_cast<Var>(index_of(g, sym(i))));
    };
    // [14][23] = [13][24] - [12][34]
    CHECK(rel.relation.to_string(MonomialOrder::degrevlex()) == "y[14]*y[23] - y[13]*y[24] + y[12]*y[34]");
    CHECK(rel.asl2_ok);
    CHECK(rel.relation == y({1, 4}) * y({2, 3}) - y({1, 3}) * y({2, 4}) + y({1, 2}) * y({3, 4}));
  }

  TEST_CASE("Gr(2,5) in degree 2") {
    auto rep = grass_asl_check(2, 5, 2);
    CHECK(rep.report.asl);
    CHECK(rep.incomparable_pairs == 5);
    CHECK(rep.report.relations.size() == 5);
    for (const auto& r : rep.report.relations) {
      CHECK(r.asl2_ok);
      CHECK(r.revlex_lead_ok);
    }
  }

  TEST_CASE("one Plücker quadric per incomparable pair for d = 2") {
    for (std::uint32_t n = 4; n <= 6; ++n) {
      auto g = grass_lattice(2, n);
      auto rep = graded_kernel(plucker_presentation(g), 2);
      CHECK(rep.at(2)->dim_kernel == incomparable(g).size());
    }
  }

  TEST_CASE("psi is multiplicative and its toric ring is an ASL") {
    auto g = grass_lattice(2, 4);
    auto m = psi_presentation(g);
    auto a = index_of(g, sym({1, 4})), b = index_of(g, sym({2, 3}));
    CHECK(g.symbols[g.lattice.join(a, b)] == sym({2, 4}));
    CHECK(g.symbols[g.lattice.meet(a, b)] == sym({1, 3}));
    CHECK(m.images()[a] * m.images()[b] == m.images()[index_of(g, sym({2, 4}))] * m.images()[index_of(g, sym({1, 3}))]);
    for (auto [d, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {2, 5}, {3, 5}, {3, 6}})
      CHECK(psi_multiplicativity(d, n));
    auto rep = asl_check(AslStructure(m, g.lattice.poset()), 3);
    CHECK(rep.asl);
  }

  TEST_CASE("phi and psi generate isomorphic toric rings") {
    for (auto [d, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {2, 5}, {3, 5}, {3, 3}}) {
      CAPTURE(d);
      CAPTURE(n);
      auto r = phi_map_check(d, n);
      CHECK(r.ok());
      CHECK(r.phi_dims.size() == 3);
      // Only the bottom symbol has phi = psi.
      CHECK(r.psi_in_phi == 1);
    }
    // Literally, phi([13]) = x11 x22 x23 has odd degree and is no product of psi's.
    auto r = phi_map_check(2, 4);
    CHECK(r.phi_in_psi < r.size);
  }
}
