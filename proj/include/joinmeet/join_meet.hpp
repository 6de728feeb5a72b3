#pragma once

#include <string>
#include <utility>
#include <vector>

#include "joinmeet/lattice.hpp"
#include "joinmeet/polynomial.hpp"

namespace joinmeet {

/// One variable x[label] per lattice element, in element order.
RingHandle lattice_ring(const Lattice& l);

/// Weight order with weight(x_a) = C - rank(a)^2, C = rank(L)^2 + 1, ties
/// broken lexicographically along a fixed linear extension. For distributive
/// L this makes x_i x_j the leading term of every nonzero join-meet binomial;
/// the underlying strict inequality is asserted per pair.
/// Throws NotDistributive.
MonomialOrder rank_weight_order(const Lattice& l);

/// Weight rank(a)^2 + 1 with the same tiebreak: the opposite choice, making
/// x_{i∨j} x_{i∧j} the leading term of f_ij. Throws NotDistributive.
MonomialOrder diagonal_weight_order(const Lattice& l);

/// f_ij = x_i x_j - x_{i∨j} x_{i∧j}; zero exactly for comparable pairs.
Polynomial join_meet_binomial(const Lattice& l, const RingHandle& ring, std::size_t i,
                              std::size_t j);

struct JoinMeetSystem {
  Lattice lattice;
  RingHandle ring;
  MonomialOrder order;
  /// Incomparable pairs (i, j), i < j by element index, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Polynomial> binomials;
  /// "a,b" from the element labels, used as presentation variable tags.
  std::vector<std::string> tags;
  /// Pairs whose leading term under `order` is not x_i x_j.
  std::vector<std::pair<std::size_t, std::size_t>> order_failures;
};

/// Builds all nonzero binomials. With `strict`, an order failure throws
/// OrderGuaranteeFailed; otherwise failures are recorded (non-distributive
/// input is accepted in that mode).
JoinMeetSystem join_meet_system(const Lattice& l, bool strict = true);

}  // namespace joinmeet
