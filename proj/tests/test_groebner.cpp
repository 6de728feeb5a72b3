#include <doctest.h>

#include "joinmeet/error.hpp"
#include "joinmeet/groebner.hpp"
#include "joinmeet/join_meet.hpp"
#include "joinmeet/lattice_json.hpp"

using namespace joinmeet;

TEST_SUITE("groebner") {
  TEST_CASE("two-variable example under lex") {
    auto r = make_ring({"x", "y"});
    auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    auto o = MonomialOrder::lex();
    std::vector<Polynomial> gens{x * x - y, y * y - x};
    auto gb = buchberger(gens, o);
    // Hand computation: x = y^2 from the second generator, so y^4 - y lies in
    // the ideal and the reduced basis is {y^4 - y, x - y^2}.
    auto y4 = y * y * y * y - y;
    bool found = false;
    for (const auto& g : gb.generators) found |= g == y4;
    CHECK(found);
    CHECK(gb.generators.size() == 2);
    CHECK(buchberger_criterion(gb.generators, o));
    CHECK(is_reduced(gb.generators, o));
    CHECK_FALSE(buchberger_criterion(gens, o));
  }

  TEST_CASE("single polynomial becomes monic") {
    auto r = make_ring({"x", "y"});
    auto f = Rational(3) * Polynomial::variable(r, 0) * Polynomial::variable(r, 1) + Polynomial::constant(r, 6);
    auto gb = buchberger(std::vector<Polynomial>{f}, MonomialOrder::degrevlex());
    REQUIRE(gb.generators.size() == 1);
    CHECK(gb.generators[0] == Rational(1, 3) * f);
  }

  TEST_CASE("Hibi ideal of B3 has the squarefree initial ideal of incomparable products") {
    auto l = lattice_from_json(builtin_fixture("b3"));
    auto sys = join_meet_system(l);
    auto gb = buchberger(sys.binomials, sys.order);
    CHECK(buchberger_criterion(gb.generators, sys.order));
    std::vector<Monomial> leads;
    for (const auto& g : gb.generators) leads.push_back(g.leading_term(sys.order).m);
    std::vector<Monomial> expected;
    for (auto [i, j] : sys.pairs) expected.push_back(Monomial::var(static_cast<Var>(i)) * Monomial::var(static_cast<Var>(j)));
    std::sort(leads.begin(), leads.end());
    std::sort(expected.begin(), expected.end());
    CHECK(leads == expected);
  }

  TEST_CASE("elimination of a twisted parametrization") {
    auto r = make_ring({"x", "t", "u"});
    auto x = Polynomial::variable(r, 0), t = Polynomial::variable(r, 1), u = Polynomial::variable(r, 2);
    std::vector<Polynomial> gens{t - x * x, u - x * x * x};
    std::vector<Var> keep{1, 2};
    auto gb = eliminate(gens, keep);
    REQUIRE(gb.generators.size() == 1);
    auto expect = t * t * t - u * u;
    CHECK((gb.generators[0] == expect || gb.generators[0] == -expect));

    std::vector<Var> all{0, 1, 2};
    auto same = eliminate(gens, all);
    auto direct = buchberger(gens, MonomialOrder::degrevlex());
    CHECK(same.generators.size() == direct.generators.size());
  }

  TEST_CASE("elimination on the B3 presentation yields two quadrics") {
    auto l = lattice_from_json(builtin_fixture("b3"));
    auto sys = join_meet_system(l);
    const std::size_t nx = l.size(), ny = sys.binomials.size();
    std::vector<std::string> names = sys.ring->names;
    for (const auto& tag : sys.tags) names.push_back("y[" + tag + "]");
    auto ring = make_ring(names);
    std::vector<Polynomial> xs;
    for (std::size_t v = 0; v < nx; ++v) xs.push_back(Polynomial::variable(ring, static_cast<Var>(v)));
    std::vector<Polynomial> gens;
    std::vector<Var> keep;
    std::vector<std::int64_t> grading(nx, 1);
    for (std::size_t k = 0; k < ny; ++k) {
      const auto yv = static_cast<Var>(nx + k);
      gens.push_back(Polynomial::variable(ring, yv) - sys.binomials[k].substitute(xs, ring));
      keep.push_back(yv);
      grading.push_back(2);
    }
    EliminationOptions eo;
    eo.gb.grading = grading;
    auto gb = eliminate(gens, keep, eo);
    CHECK_FALSE(gb.truncated);
    auto degs = minimal_generator_degrees(gb, keep, {}, 3);
    CHECK(degs[1] == 0);
    CHECK(degs[2] == 2);
    CHECK(degs[3] == 0);
  }

  TEST_CASE("pair budget is enforced") {
    auto r = make_ring({"x", "y", "z"});
    auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1), z = Polynomial::variable(r, 2);
    std::vector<Polynomial> gens{x * x - y * z, y * y - x * z, z * z - x * y + x};
    GroebnerOptions o;
    o.max_pairs = 1;
    CHECK_THROWS_AS(buchberger(gens, MonomialOrder::lex(), o), BudgetExceeded);
  }

  TEST_CASE("degree cap truncates homogeneous runs") {
    auto r = make_ring({"x", "y", "z"});
    auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1), z = Polynomial::variable(r, 2);
    std::vector<Polynomial> gens{x * y - z * z, x * z - y * y};
    GroebnerOptions capped;
    capped.degree_cap = 2;
    auto small = buchberger(gens, MonomialOrder::lex(), capped);
    auto full = buchberger(gens, MonomialOrder::lex());
    CHECK(small.truncated);
    CHECK(full.generators.size() > small.generators.size());
    CHECK(buchberger_criterion(full.generators, MonomialOrder::lex()));
  }
}
