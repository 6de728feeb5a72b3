#pragma once

// Verdicts on R_K(L) built from its presentation: polynomial ring, quadratic
// generation, retracts onto intervals, and lifting Gröbner bases from the
// algebra of initial monomials.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "joinmeet/groebner.hpp"
#include "joinmeet/kernel.hpp"
#include "joinmeet/lattice.hpp"

namespace joinmeet {

/// Gröbner basis of ker(pi) in m.source() under `order_A`, by eliminating
/// the target variables from (y_e - f_e). Truncated when opts.degree_cap
/// (in y-degree) cuts pairs.
GroebnerBasis presentation_ideal_gb(const PresentationMap& m, const MonomialOrder& order_A,
                                    GroebnerOptions opts = {});

/// Minimal generator degrees of ker(pi) through max_degree, read off a full
/// elimination basis. Throws BudgetExceeded.
std::map<std::uint32_t, std::size_t> eliminate_generator_degrees(const PresentationMap& m,
                                                                 std::uint32_t max_degree,
                                                                 std::size_t max_pairs = 2'000'000);

struct PolynomialRingVerdict {
  std::uint32_t cap = 0;
  bool planar = false;
  bool has_d54_sublattice = false;
  /// (a) planar and no D_{2*3^3} sublattice.
  bool combinatorial = false;
  /// (b) some order makes the leading exponents independent.
  bool leading_certificate = false;
  /// "rank_weight", "diagonal_weight" or "weight_search" when (b) holds.
  std::string certificate_order;
  /// (c) ker(pi) vanishes through cap.
  bool kernel_zero = false;
  /// First degree with a nonzero kernel, when (c) fails.
  std::optional<std::uint32_t> first_relation_degree;
};

struct PolynomialRingOptions {
  KernelOptions kernel;
  /// Trials of the random weight search for (b).
  std::size_t search_trials = 300;
};

/// Computes (a), (b), (c) independently and throws TheoremViolation unless
/// (a) == (c) and (b) implies (a). Throws NotDistributive.
PolynomialRingVerdict is_polynomial_ring(const Lattice& l, std::uint32_t cap = 4,
                                         const PolynomialRingOptions& opts = {});

struct QuadraticOptions {
  KernelOptions kernel;
  bool compute_gb = true;
  std::size_t max_pairs = 200'000;
};

struct QuadraticReport {
  std::uint32_t cap = 0;
  std::map<std::uint32_t, std::size_t> generator_degrees;
  /// No minimal generators in degrees 3..cap.
  bool generated_in_degree_2 = false;
  /// Absent when the elimination ran out of budget or was not requested.
  std::optional<bool> quadratic_gb;
  std::optional<std::uint32_t> gb_max_degree;
  std::size_t gb_size = 0;
  /// "Q_L revlex" for thin lattices, else "degrevlex".
  std::string gb_order;
};

/// Throws NotDistributive.
QuadraticReport quadratic_presentation_check(const Lattice& l, std::uint32_t cap = 4,
                                             const QuadraticOptions& opts = {});

/// Order on the y-ring of a thin lattice's presentation: reverse lex from a
/// linear extension of Q_L.
MonomialOrder q_lattice_revlex(const Lattice& l, const PresentationMap& m);

/// Sends the variables outside [a, b] to zero in every binomial of `sys`
/// and returns the nonzero images as the presentation of the interval,
/// after asserting they are exactly the interval's own binomials.
/// Throws InputError unless a <= b.
PresentationMap retract_images(const Lattice& l, std::size_t a, std::size_t b, const JoinMeetSystem& sys);

struct LiftResult {
  /// h_j with in(h_j) = in(g_j), in the order of `toric`.
  std::vector<Polynomial> lifted;
  /// Reduced Gröbner basis G' of the toric ideal of y_e -> in(f_e), through max_degree.
  std::vector<Polynomial> toric;
  /// G' is a complete Gröbner basis of the toric ideal (no truncation).
  bool complete = false;
  /// Buchberger criterion on the lifted set; asserted when complete.
  bool buchberger_ok = false;
};

/// Weight order on the y-ring pulling back a weight order on S through the
/// leading monomials: w(y_e) = w . exp(in f_e), ties by `tiebreak`.
/// Throws InputError unless order_S is a weight order.
MonomialOrder pullback_order(const PresentationMap& m, const MonomialOrder& order_S,
                             const MonomialOrder& tiebreak = MonomialOrder::degrevlex());

/// Lifts a toric Gröbner basis of the leading monomials to ker(pi). Throws InputError if leading monomials of the f_e under
/// order_S coincide, HypothesisUnmet(j) if in(g_j) is not the leading
/// monomial of any kernel element, TheoremViolation if a complete lift fails
/// Buchberger's criterion, BudgetExceeded.
LiftResult lift_groebner(const PresentationMap& m, const MonomialOrder& order_S, const MonomialOrder& order_A,
                         std::uint32_t max_degree, std::size_t max_pairs = 2'000'000);

}  // namespace joinmeet
