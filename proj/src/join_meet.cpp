#include "joinmeet/join_meet.hpp"

#include "joinmeet/error.hpp"

namespace joinmeet {

RingHandle lattice_ring(const Lattice& l) {
  std::vector<std::string> names;
  for (std::size_t a = 0; a < l.size(); ++a) names.push_back("x[" + l.label(a) + "]");
  return make_ring(std::move(names));
}

namespace {

MonomialOrder squared_rank_order(const Lattice& l, bool diagonal = false) {
  const auto rp = rank_profile(l);
  const auto c = static_cast<std::int64_t>(rp.d * rp.d + 1);
  std::vector<std::int64_t> w(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    const auto r = static_cast<std::int64_t>(rp.rank_of[a]);
    w[a] = diagonal ? 1 + r * r : c - r * r;
  }
  std::vector<std::uint32_t> rank(l.size());
  const auto ext = l.poset().linear_extension();
  for (std::size_t pos = 0; pos < ext.size(); ++pos) rank[ext[pos]] = static_cast<std::uint32_t>(pos);
  return MonomialOrder::weight(std::move(w), MonomialOrder::lex().with_ranking(std::move(rank)));
}

}  // namespace

MonomialOrder rank_weight_order(const Lattice& l) {
  if (!is_distributive(l)) throw NotDistributive();
  const auto rp = rank_profile(l);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      if (l.comparable(i, j)) continue;
      const auto ri = rp.rank_of[i], rj = rp.rank_of[j];
      const auto rjn = rp.rank_of[l.join(i, j)], rmt = rp.rank_of[l.meet(i, j)];
      if (ri + rj != rjn + rmt)
        throw InvariantViolation("rank is not modular at " + l.label(i) + ", " + l.label(j));
      if (ri * ri + rj * rj >= rjn * rjn + rmt * rmt)
        throw InvariantViolation("squared-rank inequality fails at " + l.label(i) + ", " +
                                 l.label(j));
    }
  return squared_rank_order(l);
}

MonomialOrder diagonal_weight_order(const Lattice& l) {
  if (!is_distributive(l)) throw NotDistributive();
  return squared_rank_order(l, true);
}

Polynomial join_meet_binomial(const Lattice& l, const RingHandle& ring, std::size_t i,
                              std::size_t j) {
  auto mono = [](std::size_t a, std::size_t b) {
    return Monomial::var(static_cast<Var>(a)) * Monomial::var(static_cast<Var>(b));
  };
  return Polynomial::monomial(ring, mono(i, j)) -
         Polynomial::monomial(ring, mono(l.join(i, j), l.meet(i, j)));
}

JoinMeetSystem join_meet_system(const Lattice& l, bool strict) {
  JoinMeetSystem sys;
  sys.lattice = l;
  sys.ring = lattice_ring(l);
  sys.order = strict ? rank_weight_order(l) : squared_rank_order(l);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      if (l.comparable(i, j)) continue;
      auto f = join_meet_binomial(l, sys.ring, i, j);
      const auto lead = Monomial::var(static_cast<Var>(i)) * Monomial::var(static_cast<Var>(j));
      if (f.leading_term(sys.order).m != lead) {
        if (strict) throw OrderGuaranteeFailed(l.label(i), l.label(j));
        sys.order_failures.emplace_back(i, j);
      }
      sys.pairs.emplace_back(i, j);
      sys.binomials.push_back(std::move(f));
      sys.tags.push_back(l.label(i) + "," + l.label(j));
    }
  return sys;
}

}  // namespace joinmeet
