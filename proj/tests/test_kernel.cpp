#include <doctest.h>

#include <map>

#include "joinmeet/error.hpp"
#include "joinmeet/groebner.hpp"
#include "joinmeet/kernel.hpp"
#include "joinmeet/lattice_json.hpp"

using namespace joinmeet;

namespace {

PresentationMap pres(const Lattice& l) { return presentation_of(join_meet_system(l)); }

Polynomial yvar(const PresentationMap& m, const std::string& tag) {
  for (std::size_t e = 0; e < m.size(); ++e)
    if (m.tags()[e] == tag) return Polynomial::variable(m.source(), static_cast<Var>(e));
  FAIL("missing tag " << tag);
  return {};
}

// Dense oracle: rank of the coefficient matrix of all degree-d products of the images.
std::size_t dense_hilbert(const PresentationMap& m, std::uint32_t d) {
  std::vector<Polynomial> prods;
  auto rec = [&](auto&& self, std::size_t from, std::uint32_t left, Polynomial acc) -> void {
    if (left == 0) {
      prods.push_back(acc);
      return;
    }
    for (std::size_t e = from; e < m.size(); ++e) self(self, e, left - 1, acc * m.images()[e]);
  };
  rec(rec, 0, d, Polynomial::constant(m.target(), 1));
  std::map<Monomial, std::size_t> cols;
  for (const auto& p : prods)
    for (const auto& t : p.terms()) cols.emplace(t.m, cols.size());
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& p : prods) {
    std::vector<mpq_class> row(cols.size(), 0);
    for (const auto& t : p.terms()) row[cols[t.m]] = t.c;
    rows.push_back(std::move(row));
  }
  return rational_rank(std::move(rows));
}

// Minimal generator degrees read off a full elimination basis of (y_e - f_e).
std::map<std::uint32_t, std::size_t> eliminate_degrees(const PresentationMap& m, std::uint32_t cap) {
  std::vector<std::string> names = m.target()->names;
  for (const auto& n : m.source()->names) names.push_back(n);
  auto ring = make_ring(names);
  const std::size_t nx = m.target()->size();
  std::vector<Polynomial> xs;
  for (std::size_t v = 0; v < nx; ++v) xs.push_back(Polynomial::variable(ring, static_cast<Var>(v)));
  std::vector<Polynomial> gens;
  std::vector<Var> keep;
  std::vector<std::int64_t> grading(nx, 1);
  for (std::size_t e = 0; e < m.size(); ++e) {
    const auto y = static_cast<Var>(nx + e);
    gens.push_back(Polynomial::variable(ring, y) - m.images()[e].substitute(xs, ring));
    keep.push_back(y);
    grading.push_back(m.image_degree());
  }
  EliminationOptions eo;
  eo.gb.grading = grading;
  auto gb = eliminate(gens, keep, eo);
  REQUIRE_FALSE(gb.truncated);
  return minimal_generator_degrees(gb, keep, {}, cap);
}

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("B3: two quadrics, no cubic generators") {
    auto m = pres(lattice_from_json(builtin_fixture("b3")));
    auto rep = graded_kernel(m, 3);
    CHECK(rep.at(1)->dim_kernel == 0);
    CHECK(rep.at(2)->dim_kernel == 2);
    CHECK(rep.at(2)->minimal_generators.size() == 2);
    CHECK(rep.at(3)->minimal_generators.empty());
    CHECK(rep.field.name() == "Q");
    for (const auto& r : rep.degrees) {
      CHECK(r.hilbert + r.dim_kernel == r.monomials);
      CHECK(r.hilbert == dense_hilbert(m, r.degree));
    }
    CHECK(rep.at(2)->minimal_generators[0].to_string(rep.order) ==
          "y[3,6]*y[4,5] + y[2,7]*y[4,6] - y[3,5]*y[4,6] - y[2,6]*y[4,7]");

    auto y = [&](const char* t) { return yvar(m, t); };
    auto q1 = y("3,6") * y("4,5") + y("2,7") * y("4,6") - y("3,5") * y("4,6") - y("2,6") * y("4,7");
    auto q2 = y("2,7") * y("3,5") - y("2,7") * y("4,6") + y("2,6") * y("4,7") - y("2,3") * y("5,7");
    CHECK(m.apply(q1).is_zero());
    CHECK(m.apply(q2).is_zero());
    GradedKernel engine(m);
    CHECK(engine.in_kernel_span(q1));
    CHECK(engine.in_kernel_span(q2));
    CHECK_FALSE(engine.in_kernel_span(y("2,3") * y("5,7")));
    CHECK(engine.kernel_basis(2).size() == 2);
  }

  TEST_CASE("D36 is a polynomial ring through degree 4") {
    auto m = pres(divisor_lattice(36));
    auto rep = graded_kernel(m, 4);
    CHECK(rep.kernel_zero());
    CHECK(rep.degrees.size() == 4);
    // x_i x_j leads: (0,0) and (2,2) are isolated in the incomparability
    // graph, so the nine exponent vectors span only rank 7.
    CHECK_FALSE(leading_exponents_independent(m, join_meet_system(divisor_lattice(36)).order));
    // Diagonal terms lead: 4 and 9 are never a join or meet of an
    // incomparable pair, so again rank 7.
    CHECK_FALSE(leading_exponents_independent(m, diagonal_weight_order(divisor_lattice(36))));
    // A generic weight mixing both kinds of leading terms does reach rank 9;
    // this one was found by an offline random search.
    auto ring = m.target();
    auto l36 = divisor_lattice(36);
    std::vector<std::int64_t> w(9);
    const std::int64_t grid[3][3] = {{3, 45, 38}, {-9, -1, 38}, {30, -29, 2}};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        int v = 1;
        for (int k = 0; k < a; ++k) v *= 2;
        for (int k = 0; k < b; ++k) v *= 3;
        w[l36.index_of(std::to_string(v))] = grid[a][b] + 100;
      }
    CHECK(leading_exponents_independent(m, MonomialOrder::weight(w, MonomialOrder::degrevlex())));
    auto found = find_independent_leading_order(m);
    REQUIRE(found.has_value());
    CHECK(leading_exponents_independent(m, *found));
    auto b3l = lattice_from_json(builtin_fixture("b3"));
    auto b3 = join_meet_system(b3l);
    CHECK_FALSE(leading_exponents_independent(presentation_of(b3), b3.order));
    CHECK_FALSE(leading_exponents_independent(presentation_of(b3), diagonal_weight_order(b3l)));
    CHECK_FALSE(find_independent_leading_order(presentation_of(b3), 50).has_value());
  }

  TEST_CASE("D54 has its Pluecker quadric") {
    auto m = pres(divisor_lattice(54));
    CHECK(m.size() == 6);
    auto rep = graded_kernel(m, 3);
    CHECK(rep.at(2)->dim_kernel == 1);
    CHECK(rep.generator_degrees() == std::map<std::uint32_t, std::size_t>{{1, 0}, {2, 1}, {3, 0}});
  }

  TEST_CASE("D108 has a minimal cubic, verified over Q") {
    auto m = pres(divisor_lattice(108));
    CHECK(m.size() == 18);
    auto rep = graded_kernel(m, 3);
    REQUIRE(rep.at(3) != nullptr);
    CHECK_FALSE(rep.at(3)->minimal_generators.empty());
    for (const auto& g : rep.at(3)->minimal_generators) {
      CHECK(g.degree() == 3);
      CHECK(m.apply(g).is_zero());
    }
    KernelOptions fp;
    fp.field = FieldMode::prime_field();
    auto rp = graded_kernel(m, 3, fp);
    CHECK(rp.field.name() == "Fp(2147483647)");
    CHECK(rp.generator_degrees() == rep.generator_degrees());
    for (std::uint32_t d = 1; d <= 3; ++d) CHECK(rp.at(d)->dim_kernel == rep.at(d)->dim_kernel);
  }

  TEST_CASE("graded kernel agrees with elimination on small presentations") {
    std::vector<Lattice> ls{lattice_from_json(builtin_fixture("b3")), divisor_lattice(54), divisor_lattice(36),
                            lattice_from_json(builtin_fixture("fig2")), boolean_lattice(2)};
    for (const auto& l : ls) {
      auto m = pres(l);
      if (m.size() == 0 || m.size() > 12) continue;
      CAPTURE(m.size());
      CHECK(graded_kernel(m, 3).generator_degrees() == eliminate_degrees(m, 3));
    }
  }

  TEST_CASE("kernel basis is reduced with respect to its leading monomials") {
    auto m = pres(divisor_lattice(108));
    GradedKernel engine(m);
    auto basis = engine.kernel_basis(2);
    CHECK(!basis.empty());
    for (const auto& g : basis) {
      CHECK(m.apply(g).is_zero());
      CHECK(g.leading_term(engine.order()).c == 1);
      for (const auto& h : basis) {
        if (&g == &h) continue;
        for (const auto& t : g.terms()) CHECK(t.m != h.leading_term(engine.order()).m);
      }
    }
  }

  TEST_CASE("presentation maps validate their images") {
    auto r = make_ring({"a", "b"});
    auto a = Polynomial::variable(r, 0), b = Polynomial::variable(r, 1);
    CHECK_THROWS_AS(PresentationMap(r, {"p"}, {Polynomial(r)}), InputError);
    CHECK_THROWS_AS(PresentationMap(r, {"p"}, {a * a + b}), InputError);
    CHECK_THROWS_AS(PresentationMap(r, {"p", "q"}, {a, b * b}), InputError);
    CHECK_THROWS_AS(PresentationMap(r, {"p", "p"}, {a, b}), InputError);
    PresentationMap m(r, {"p", "q", "s"}, {a * a, a * b, b * b});
    auto rep = graded_kernel(m, 2);
    CHECK(rep.at(1)->dim_kernel == 0);
    CHECK(rep.at(2)->dim_kernel == 1);
    // Single image: nothing to relate.
    auto one = graded_kernel(PresentationMap(r, {"p"}, {a * b}), 4);
    CHECK(one.kernel_zero());
    // Rational coefficients and linear dependence in degree 1.
    PresentationMap lin(r, {"u", "v"}, {Rational(1, 2) * a, Rational(3) * a});
    auto lr = graded_kernel(lin, 2);
    CHECK(lr.generator_degrees() == std::map<std::uint32_t, std::size_t>{{1, 1}, {2, 0}});
  }

  TEST_CASE("field modes and budgets") {
    CHECK_FALSE(FieldMode::parse("q").is_prime());
    CHECK(FieldMode::parse("fp:101").prime == 101);
    CHECK(FieldMode::parse("fp").prime == kDefaultPrime);
    CHECK_THROWS_AS(FieldMode::parse("fp:100"), InputError);
    CHECK_THROWS_AS(FieldMode::parse("reals"), InputError);
    KernelOptions tiny;
    tiny.budget_cells = 10;
    CHECK_THROWS_AS(graded_kernel(pres(divisor_lattice(108)), 3, tiny), BudgetExceeded);
    KernelOptions stop;
    stop.stop_at_nonzero = true;
    CHECK(graded_kernel(pres(divisor_lattice(108)), 4, stop).degrees.size() == 2);
  }
}
