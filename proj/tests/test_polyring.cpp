#include <doctest.h>

#include <random>

#include "joinmeet/error.hpp"
#include "joinmeet/join_meet.hpp"
#include "joinmeet/lattice_json.hpp"
#include "oracles.hpp"

using namespace joinmeet;

namespace {

Polynomial random_poly(const RingHandle& ring, std::mt19937& rng, int terms = 4) {
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Entry> e;
    for (Var v = 0; v < ring->size(); ++v) e.emplace_back(v, rng() % 3);
    ts.push_back({Monomial::from_entries(e), Rational(static_cast<int>(rng() % 7) - 3, 1 + rng() % 4)});
  }
  return Polynomial::from_terms(ring, ts);
}

Monomial random_mono(std::mt19937& rng, Var nvars) {
  std::vector<Monomial::Entry> e;
  for (Var v = 0; v < nvars; ++v) e.emplace_back(v, rng() % 4);
  return Monomial::from_entries(e);
}

std::vector<MonomialOrder> all_orders(Var nvars) {
  std::vector<std::uint32_t> rev(nvars);
  for (Var v = 0; v < nvars; ++v) rev[v] = nvars - 1 - v;
  std::vector<std::int64_t> w(nvars);
  for (Var v = 0; v < nvars; ++v) w[v] = 1 + v % 3;
  std::vector<std::uint32_t> blocks(nvars);
  for (Var v = 0; v < nvars; ++v) blocks[v] = v < nvars / 2 ? 0 : 1;
  return {MonomialOrder::lex(),
          MonomialOrder::deglex(),
          MonomialOrder::degrevlex(),
          MonomialOrder::degrevlex().with_ranking(rev),
          MonomialOrder::weight(w, MonomialOrder::lex()),
          MonomialOrder::block(blocks, {MonomialOrder::degrevlex(), MonomialOrder::lex()})};
}

}  // namespace

TEST_SUITE("polyring") {
  TEST_CASE("basic arithmetic") {
    auto r = make_ring({"x", "y"});
    auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    auto o = MonomialOrder::lex();
    CHECK(normal_form(x * x, std::vector<Polynomial>{x}, o).is_zero());
    CHECK((x * x - y).to_string(o) == "x^2 - y");
    CHECK((Rational(3, 2) * x * y + Polynomial::constant(r, -1)).to_string(o) == "3/2*x*y - 1");
    CHECK(Polynomial(r).to_string(o) == "0");
    auto other = make_ring({"x", "y"});
    CHECK_THROWS_AS(x + Polynomial::variable(other, 0), RingMismatch);
  }

  TEST_CASE("ring axioms on random polynomials") {
    auto r = make_ring({"a", "b", "c"});
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
      auto p = random_poly(r, rng), q = random_poly(r, rng), s = random_poly(r, rng);
      CHECK((p * q) * s == p * (q * s));
      CHECK(p * (q + s) == p * q + p * s);
      CHECK(p + q == q + p);
      CHECK((p - p).is_zero());
    }
  }

  TEST_CASE("monomial orders are multiplicative well-orders") {
    std::mt19937 rng(5);
    const Var n = 5;
    for (const auto& o : all_orders(n)) {
      for (int it = 0; it < 300; ++it) {
        auto u = random_mono(rng, n), v = random_mono(rng, n), w = random_mono(rng, n);
        const int c = o.compare(u, v);
        CHECK(c == -o.compare(v, u));
        CHECK(o.compare(u * w, v * w) == c);
        CHECK(o.compare(Monomial{}, u) <= 0);
        // The integer key agrees with the comparison.
        std::vector<std::int64_t> ku, kv;
        o.append_key(u, n, ku);
        o.append_key(v, n, kv);
        CHECK((ku < kv ? -1 : (kv < ku ? 1 : 0)) == c);
      }
    }
  }

  TEST_CASE("normal form is deterministic") {
    auto l = lattice_from_json(builtin_fixture("b3"));
    auto sys = join_meet_system(l);
    auto idx = [&](const char* a, const char* b) {
      for (std::size_t k = 0; k < sys.pairs.size(); ++k)
        if (sys.tags[k] == std::string(a) + "," + b) return k;
      return sys.pairs.size();
    };
    auto f = sys.binomials[idx("2", "3")] * sys.binomials[idx("5", "7")];
    auto r1 = normal_form(f, sys.binomials, sys.order);
    auto r2 = normal_form(f, sys.binomials, sys.order);
    CHECK(r1 == r2);
    // The remainder has no term divisible by a leading monomial x_i x_j.
    for (const auto& t : r1.terms())
      for (const auto& g : sys.binomials) CHECK_FALSE(divides(g.leading_term(sys.order).m, t.m));
  }

  TEST_CASE("rank-weight order on B3") {
    auto l = lattice_from_json(builtin_fixture("b3"));
    auto o = rank_weight_order(l);
    auto ring = lattice_ring(l);
    auto x = [&](const char* s) { return Monomial::var(static_cast<Var>(l.index_of(s))); };
    CHECK(o.greater(x("2") * x("3"), x("1") * x("4")));
    std::vector<std::pair<std::string, std::string>> c{{"0", "a"}, {"0", "b"}, {"0", "c"},
                                                       {"a", "1"}, {"b", "1"}, {"c", "1"}};
    CHECK_THROWS_AS(rank_weight_order(as_lattice(Poset::from_covers({"0", "a", "b", "c", "1"}, c))),
                    NotDistributive);
    CHECK(join_meet_binomial(l, ring, l.index_of("2"), l.index_of("4")).is_zero());
  }

  TEST_CASE("B3 has the nine binomials of its incomparable pairs") {
    auto l = lattice_from_json(builtin_fixture("b3"));
    auto sys = join_meet_system(l);
    CHECK(sys.tags == std::vector<std::string>{"2,3", "2,6", "2,7", "3,5", "3,6", "4,5", "4,6", "4,7", "5,7"});
    auto o = oracle::make_order(oracle::labels(8), oracle::b3_covers());
    std::size_t naive = 0;
    for (const auto& a : o.elems)
      for (const auto& b : o.elems)
        if (a < b && !o.comparable(a, b)) ++naive;
    CHECK(sys.binomials.size() == naive);
    CHECK(sys.order_failures.empty());
  }

  TEST_CASE("D36 binomials are the 2-minors of the grid matrix") {
    auto l = divisor_lattice(36);
    auto sys = join_meet_system(l);
    REQUIRE(sys.binomials.size() == 9);
    // M[a][b] = x[2^a 3^b]; minors over rows a<a', columns b<b'.
    auto var = [&](int a, int b) {
      int v = 1;
      for (int k = 0; k < a; ++k) v *= 2;
      for (int k = 0; k < b; ++k) v *= 3;
      return Polynomial::variable(sys.ring, static_cast<Var>(l.index_of(std::to_string(v))));
    };
    std::vector<Polynomial> minors;
    for (int a = 0; a < 3; ++a)
      for (int a2 = a + 1; a2 < 3; ++a2)
        for (int b = 0; b < 3; ++b)
          for (int b2 = b + 1; b2 < 3; ++b2) minors.push_back(var(a, b) * var(a2, b2) - var(a, b2) * var(a2, b));
    for (const auto& f : sys.binomials) {
      std::size_t hits = 0;
      for (const auto& m : minors)
        if (f == m || f == -m) ++hits;
      CHECK(hits == 1);
    }
  }

  TEST_CASE("leading term is x_i x_j on every distributive fixture") {
    std::vector<Lattice> ls;
    for (auto name : {"b3", "fig2", "fig4", "fig5"}) ls.push_back(lattice_from_json(builtin_fixture(name)));
    for (auto n : {36, 54, 108, 720}) ls.push_back(divisor_lattice(n));
    for (const auto& l : ls) {
      auto sys = join_meet_system(l);
      std::size_t incomparable = 0;
      for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
          if (!l.comparable(i, j)) ++incomparable;
      CHECK(sys.binomials.size() == incomparable);
      for (std::size_t k = 0; k < sys.pairs.size(); ++k) {
        auto [i, j] = sys.pairs[k];
        CHECK(sys.binomials[k].is_homogeneous());
        CHECK(sys.binomials[k].degree() == 2);
        CHECK(sys.binomials[k].leading_term(sys.order).m ==
              Monomial::var(static_cast<Var>(i)) * Monomial::var(static_cast<Var>(j)));
      }
    }
    CHECK(join_meet_system(chain_lattice(4)).binomials.empty());
  }

  TEST_CASE("non-distributive input records order failures instead of throwing") {
    std::vector<std::pair<std::string, std::string>> c{{"0", "a"}, {"a", "b"}, {"0", "c"}, {"b", "1"}, {"c", "1"}};
    auto n5 = as_lattice(Poset::from_covers({"0", "a", "b", "c", "1"}, c));
    CHECK_THROWS_AS(join_meet_system(n5), NotDistributive);
    auto sys = join_meet_system(n5, false);
    CHECK(sys.binomials.size() == 2);
  }
}
