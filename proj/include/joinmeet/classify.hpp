#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "joinmeet/lattice.hpp"

namespace joinmeet {

struct SimpleCheck {
  bool simple = false;
  /// Elements comparable to every element, in index order.
  std::vector<std::size_t> apexes;
};

SimpleCheck is_simple(const Lattice& l);

/// Width of the join-irreducible poset is at most 2. Throws NotDistributive.
bool is_planar(const Lattice& l);

/// Simple with exactly two elements on every intermediate rank level.
/// Throws NotDistributive.
bool is_thin(const Lattice& l);

/// An embedding of the 2x4 grid D_{2*3^3}: grid[p * 4 + q] is the element
/// playing 2^p * 3^q.
struct D54Embedding {
  std::array<std::size_t, 8> grid{};
};

/// Searches for a subset closed under the join and meet of `l` that is
/// isomorphic to D_{2*3^3}.
std::optional<D54Embedding> find_d54_sublattice(const Lattice& l);

struct GridInterval {
  std::size_t bottom = 0, top = 0;
  std::size_t r = 0, s = 0;
  bool operator==(const GridInterval&) const = default;
};

/// All intervals [a, b] isomorphic to D_{2^r * 3^s}, sorted by (bottom, top).
std::vector<GridInterval> find_grid_intervals(const Lattice& l, std::size_t r, std::size_t s);

struct ClassificationReport {
  bool distributive = false;
  bool simple = false;
  bool planar = false;
  bool thin = false;
  std::vector<std::size_t> apexes;
  std::size_t rank = 0;
  std::vector<std::size_t> rho;
  std::optional<std::size_t> theta;
  bool has_d54_sublattice = false;
  /// Intervals isomorphic to D_{2^2*3^2} and D_{2^2*3^3}.
  std::vector<GridInterval> grid_intervals;
  /// Some i0 with rho(i0) = rho(i0+1) = 3.
  bool consecutive_theta3 = false;
};

/// Planarity and thinness are reported false for non-distributive input.
ClassificationReport classify(const Lattice& l);

/// The thin lattice of rank n+1 on 0 < x1..xn, y1..yn < 1. For i = 2..n,
/// x_below_next_y[i-2] selects x_{i-1} < y_i (true) or y_{i-1} < x_i (false).
Lattice snake_lattice(std::span<const bool> x_below_next_y);

/// All 2^(rank-2) snake lattices of the given rank (rank >= 2).
std::vector<Lattice> enumerate_thin_lattices(std::size_t rank);

/// J(P) for every poset P that is a union of two chains with
/// 1 <= |P| <= max_poset_size, deduplicated up to isomorphism.
std::vector<Lattice> enumerate_planar_lattices(std::size_t max_poset_size);

}  // namespace joinmeet
