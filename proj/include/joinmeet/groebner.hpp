#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "joinmeet/polynomial.hpp"

namespace joinmeet {

struct GroebnerOptions {
  /// Skip S-pairs whose lcm has (weighted) degree above the cap. For
  /// homogeneous input the result is then a truncated basis, exact for every
  /// membership question up to the cap.
  std::optional<std::uint32_t> degree_cap;
  /// Degree of each variable for sugar and capping; empty means all 1.
  std::vector<std::int64_t> grading;
  /// Maximum number of S-pairs reduced before BudgetExceeded.
  std::size_t max_pairs = 2'000'000;
};

struct GroebnerBasis {
  /// Monic, inter-reduced, sorted by increasing leading monomial.
  std::vector<Polynomial> generators;
  MonomialOrder order;
  bool reduced = true;
  /// Some S-pair was skipped by the degree cap.
  bool truncated = false;
  std::optional<std::uint32_t> degree_cap;
  std::size_t pairs_reduced = 0;
};

/// Buchberger's algorithm with the normal selection strategy (smallest
/// sugar first) and Gebauer–Möller pair pruning.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const GroebnerOptions& opts = {});

/// Every S-polynomial reduces to zero (pairs with coprime leading monomials
/// are skipped, which is exact).
bool buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrder& order);

/// No term of any generator is divisible by another generator's leading
/// monomial, and every generator is monic.
bool is_reduced(std::span<const Polynomial> basis, const MonomialOrder& order);

struct EliminationOptions {
  /// Order on the kept variables (the eliminated block uses degrevlex).
  MonomialOrder keep_order = MonomialOrder::degrevlex();
  GroebnerOptions gb;
};

/// Gröbner basis of (gens) ∩ K[keep] under a block order that places the
/// complement of `keep` first. The result lives in the input ring and is a
/// basis with respect to opts.keep_order.
GroebnerBasis eliminate(std::span<const Polynomial> gens, std::span<const Var> keep,
                        const EliminationOptions& opts = {});

/// Number of monomials of (weighted) degree d in the variables `vars`
/// that lie in the ideal generated by `leads`.
std::size_t count_initial_monomials(std::span<const Monomial> leads, std::span<const Var> vars,
                                    std::span<const std::int64_t> grading, std::uint32_t d);

/// Degrees of a minimal generating set of the homogeneous ideal with basis
/// `gb` (in the variables `vars`, with the given grading), through
/// max_degree: count[d] = dim I_d - dim (I_{<d})_d.
std::map<std::uint32_t, std::size_t> minimal_generator_degrees(const GroebnerBasis& gb,
                                                               std::span<const Var> vars,
                                                               std::span<const std::int64_t> grading,
                                                               std::uint32_t max_degree);

}  // namespace joinmeet
