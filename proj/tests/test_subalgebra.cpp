#include <doctest.h>

#include <set>

#include "joinmeet/classify.hpp"
#include "joinmeet/error.hpp"
#include "joinmeet/lattice_json.hpp"
#include "joinmeet/subalgebra.hpp"

using namespace joinmeet;

namespace {

PresentationMap pres(const Lattice& l) { return presentation_of(join_meet_system(l)); }

std::set<Monomial> leads(const std::vector<Polynomial>& ps, const MonomialOrder& o) {
  std::set<Monomial> out;
  for (const auto& p : ps) out.insert(p.leading_term(o).m);
  return out;
}

}  // namespace

TEST_SUITE("subalgebra") {
  TEST_CASE("elimination basis of the presentation ideal") {
    auto m = pres(lattice_from_json(builtin_fixture("b3")));
    auto gb = presentation_ideal_gb(m, MonomialOrder::degrevlex());
    CHECK_FALSE(gb.truncated);
    CHECK(buchberger_criterion(gb.generators, gb.order));
    for (const auto& g : gb.generators) {
      CHECK(g.ring() == m.source());
      CHECK(m.apply(g).is_zero());
    }
    CHECK(eliminate_generator_degrees(m, 3) == std::map<std::uint32_t, std::size_t>{{1, 0}, {2, 2}, {3, 0}});
    CHECK(eliminate_generator_degrees(pres(divisor_lattice(54)), 3) == graded_kernel(pres(divisor_lattice(54)), 3).generator_degrees());
  }

  TEST_CASE("polynomial ring verdicts") {
    auto d36 = is_polynomial_ring(divisor_lattice(36));
    CHECK(d36.combinatorial);
    CHECK(d36.kernel_zero);
    CHECK(d36.leading_certificate);
    CHECK(d36.certificate_order == "weight_search");

    auto d54 = is_polynomial_ring(divisor_lattice(54));
    CHECK(d54.planar);
    CHECK(d54.has_d54_sublattice);
    CHECK_FALSE(d54.combinatorial);
    CHECK(d54.first_relation_degree == 2u);
    CHECK_FALSE(d54.leading_certificate);

    auto b3 = is_polynomial_ring(lattice_from_json(builtin_fixture("b3")));
    CHECK_FALSE(b3.planar);
    CHECK_FALSE(b3.kernel_zero);

    auto chain = is_polynomial_ring(chain_lattice(4));
    CHECK(chain.kernel_zero);
    CHECK(chain.leading_certificate);
    CHECK(is_polynomial_ring(divisor_lattice(18)).certificate_order == "rank_weight");

    PolynomialRingOptions fp;
    fp.kernel.field = FieldMode::prime_field();
    CHECK_FALSE(is_polynomial_ring(divisor_lattice(54), 3, fp).kernel_zero);
    CHECK_THROWS_AS(is_polynomial_ring(lattice_from_json(R"({"elements":["0","a","b","c","1"],
      "covers":[["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]})")), NotDistributive);
  }

  TEST_CASE("polynomial ring iff planar without D_{2*3^3}, small planar lattices") {
    std::size_t seen = 0;
    for (const auto& l : enumerate_planar_lattices(5)) {
      CHECK_NOTHROW(is_polynomial_ring(l, 4));
      ++seen;
    }
    CHECK(seen > 10);
  }

  TEST_CASE("thin lattices have quadratic presentations and Gröbner bases") {
    for (std::size_t rank = 2; rank <= 5; ++rank)
      for (const auto& l : enumerate_thin_lattices(rank)) {
        auto r = quadratic_presentation_check(l, 4);
        CHECK(r.generated_in_degree_2);
        CHECK(r.gb_order == "Q_L revlex");
        REQUIRE(r.quadratic_gb.has_value());
        CHECK(*r.quadratic_gb);
      }
  }

  TEST_CASE("D108 is not generated by quadrics") {
    QuadraticOptions o;
    o.compute_gb = false;
    auto r = quadratic_presentation_check(divisor_lattice(108), 3, o);
    CHECK_FALSE(r.generated_in_degree_2);
    CHECK(r.generator_degrees.at(3) > 0);
    CHECK_FALSE(r.quadratic_gb.has_value());
    CHECK(r.gb_order == "degrevlex");
    QuadraticOptions tiny;
    tiny.max_pairs = 5;
    auto t = quadratic_presentation_check(divisor_lattice(108), 2, tiny);
    CHECK_FALSE(t.quadratic_gb.has_value());
  }

  TEST_CASE("retracts onto intervals") {
    auto l = divisor_lattice(108);
    auto sys = join_meet_system(l);
    auto whole = retract_images(l, l.index_of("1"), l.index_of("108"), sys);
    CHECK(whole.size() == sys.pairs.size());
    for (std::size_t e = 0; e < whole.size(); ++e) CHECK(whole.tags()[e] == sys.tags[e]);

    auto sub = retract_images(l, l.index_of("2"), l.index_of("108"), sys);
    CHECK(sub.size() == 6);
    CHECK(graded_kernel(sub, 2).at(2)->dim_kernel == 1);

    auto chain = retract_images(l, l.index_of("1"), l.index_of("4"), sys);
    CHECK(chain.size() == 0);
    CHECK_THROWS_AS(retract_images(l, l.index_of("4"), l.index_of("3"), sys), InputError);
  }

  TEST_CASE("a cubic generator of an interval persists in the ambient lattice") {
    auto l = divisor_lattice(324);
    auto sys = join_meet_system(l);
    auto sub = retract_images(l, l.index_of("1"), l.index_of("108"), sys);
    CHECK(sub.size() == 18);
    KernelOptions fp;
    fp.field = FieldMode::prime_field();
    CHECK(graded_kernel(sub, 3, fp).at(3)->minimal_generators.size() > 0);
    CHECK(graded_kernel(presentation_of(sys), 3, fp).at(3)->minimal_generators.size() > 0);
  }

  TEST_CASE("toric lift on D_{2*3^3}") {
    auto l = divisor_lattice(54);
    auto sys = join_meet_system(l);
    auto m = presentation_of(sys);
    auto oa = pullback_order(m, sys.order);
    auto lift = lift_groebner(m, sys.order, oa, 4);
    CHECK(lift.complete);
    CHECK(lift.buchberger_ok);
    REQUIRE(lift.lifted.size() == lift.toric.size());
    for (const auto& t : lift.toric) CHECK(t.terms().size() == 2);
    for (const auto& h : lift.lifted) CHECK(m.apply(h).is_zero());
    auto gb = presentation_ideal_gb(m, oa);
    CHECK(leads(lift.lifted, oa) == leads(gb.generators, oa));
    CHECK(lift.lifted.size() == 1);
  }

  TEST_CASE("toric lift on B3 against elimination") {
    auto l = lattice_from_json(builtin_fixture("b3"));
    auto sys = join_meet_system(l);
    auto m = presentation_of(sys);
    // Under the squared-rank order the leading monomials x_i x_j satisfy three
    // quadratic binomials while ker(pi) has only two quadrics: nothing lifts.
    std::vector<Polynomial> in_f;
    for (const auto& f : m.images()) in_f.push_back(Polynomial::monomial(m.target(), f.leading_term(sys.order).m));
    CHECK(graded_kernel(PresentationMap(m.target(), m.tags(), in_f), 2).at(2)->dim_kernel == 3);
    CHECK_THROWS_AS(lift_groebner(m, sys.order, pullback_order(m, sys.order), 4), HypothesisUnmet);
    // A generic weight (found by a seeded search) makes the f's a SAGBI basis.
    auto os = MonomialOrder::weight({16, 44, 46, 36, 24, 19, 50, 19}, MonomialOrder::degrevlex());
    auto oa = pullback_order(m, os);
    auto lift = lift_groebner(m, os, oa, 4);
    CHECK(lift.complete);
    CHECK(lift.buchberger_ok);
    auto gb = presentation_ideal_gb(m, oa);
    CHECK(leads(lift.lifted, oa) == leads(gb.generators, oa));
    auto span = graded_kernel(m, 2);
    std::size_t quadrics = 0;
    for (const auto& h : lift.lifted) quadrics += h.degree() == 2;
    CHECK(quadrics == span.at(2)->dim_kernel);
  }

  TEST_CASE("lift edge cases") {
    auto r = make_ring({"a", "b"});
    auto a = Polynomial::variable(r, 0), b = Polynomial::variable(r, 1);
    PresentationMap one(r, {"p"}, {a * b - b * b});
    auto lift = lift_groebner(one, MonomialOrder::degrevlex(), MonomialOrder::degrevlex(), 3);
    CHECK(lift.toric.empty());
    CHECK(lift.lifted.empty());
    CHECK(lift.complete);
    PresentationMap same(r, {"p", "q"}, {a * b, a * b + b * b});
    CHECK_THROWS_AS(lift_groebner(same, MonomialOrder::lex(), MonomialOrder::degrevlex(), 2), InputError);
    CHECK_THROWS_AS(pullback_order(one, MonomialOrder::lex()), InputError);
    // a^2, b^2, ab + c^2 are algebraically independent, yet their leads satisfy p*q = s^2.
    auto r3 = make_ring({"a", "b", "c"});
    auto x = Polynomial::variable(r3, 0), y = Polynomial::variable(r3, 1), z = Polynomial::variable(r3, 2);
    PresentationMap bad(r3, {"p", "q", "s"}, {x * x, y * y, x * y + z * z});
    CHECK_THROWS_AS(lift_groebner(bad, MonomialOrder::lex(), MonomialOrder::degrevlex(), 3), HypothesisUnmet);
  }
}
