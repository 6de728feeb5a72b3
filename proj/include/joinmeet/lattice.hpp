#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "joinmeet/poset.hpp"

namespace joinmeet {

/// A finite lattice: a poset plus full join and meet tables.
class Lattice {
 public:
  Lattice() = default;

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& label(std::size_t i) const { return poset_.label(i); }
  std::size_t index_of(std::string_view label) const { return poset_.index_of(label); }

  bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return poset_.comparable(a, b); }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

 private:
  friend Lattice as_lattice(Poset p);
  friend Lattice lattice_from_tables(Poset p, std::vector<std::uint32_t> join,
                                     std::vector<std::uint32_t> meet);

  Poset poset_;
  std::vector<std::uint32_t> join_, meet_;
  std::size_t bottom_ = 0, top_ = 0;
};

/// Computes join and meet tables by bound search; throws NotALattice.
Lattice as_lattice(Poset p);

/// Wraps precomputed tables (used by constructions whose operations are
/// known in closed form). The tables are cross-checked against the order.
Lattice lattice_from_tables(Poset p, std::vector<std::uint32_t> join,
                            std::vector<std::uint32_t> meet);

/// a∧(b∨c) = (a∧b)∨(a∧c) and its dual, over all triples.
bool is_distributive(const Lattice& l);

/// Indices of the join-irreducible elements, in index order.
std::vector<std::size_t> join_irreducible_elements(const Lattice& l);

/// The subposet P_L of join-irreducibles (labels are the lattice labels).
Poset join_irreducibles(const Lattice& l);

/// Largest number of order ideals ideals_lattice() will enumerate.
inline constexpr std::size_t kDefaultIdealCap = 100000;

/// The lattice J(P) of order ideals of `p` ordered by inclusion. Labels are
/// "{a,b,...}" with members listed in the order of `p`.
Lattice ideals_lattice(const Poset& p, std::size_t ideal_cap = kDefaultIdealCap);

/// Divisors of n under divisibility, labelled by decimal value.
Lattice divisor_lattice(std::uint64_t n);
/// Subsets of a k-set, labelled "{1,2,...}".
Lattice boolean_lattice(std::size_t k);
/// Chain 0 < 1 < ... < length, labelled by decimal index.
Lattice chain_lattice(std::size_t length);
/// Product of chains with `rows` x `cols` elements; label "(i,j)".
Lattice grid_lattice(std::size_t rows, std::size_t cols);

/// The interval [a, b] as a lattice with the ambient labels.
Lattice interval(const Lattice& l, std::size_t a, std::size_t b);

/// Subset closed under join and meet, as a lattice.
Lattice sublattice(const Lattice& l, std::span<const std::size_t> elements);

struct RankProfile {
  std::vector<std::size_t> rank_of;
  std::size_t d = 0;
  std::vector<std::size_t> rho;
  /// max rho[1..d-1]; only meaningful when d >= 2.
  std::optional<std::size_t> theta;
};

RankProfile rank_profile(const Lattice& l);

/// Join/meet preserving bijection l1 -> l2 as an index map.
std::optional<std::vector<std::size_t>> lattice_isomorphic(const Lattice& l1, const Lattice& l2);

}  // namespace joinmeet
