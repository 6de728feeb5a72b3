#pragma once

// Algebras with straightening laws: standard monomials, the two ASL axioms
// checked by exact linear algebra, and the Q_L poset of thin lattices.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "joinmeet/kernel.hpp"
#include "joinmeet/poset.hpp"

namespace joinmeet {

/// Multichain gamma_1 <= ... <= gamma_d of poset element indices.
struct StandardMonomial {
  std::vector<std::size_t> chain;
  auto operator<=>(const StandardMonomial&) const = default;
};

/// All multichains of length d, in lexicographic order of index sequences.
std::vector<StandardMonomial> standard_monomials(const Poset& p, std::uint32_t d);

/// The algebra K[phi(a) : a in P] with phi(a) = m.images()[generator_of[a]].
/// generator_of must be a bijection onto the generators (InputError).
struct AslStructure {
  const PresentationMap* map = nullptr;
  const Poset* poset = nullptr;
  std::vector<std::size_t> generator_of;

  AslStructure(const PresentationMap& m, const Poset& p, std::vector<std::size_t> injection);
  /// Identity injection: element a is generator a.
  AslStructure(const PresentationMap& m, const Poset& p);
  /// y-monomial of a multichain.
  Monomial y_monomial(const StandardMonomial& s) const;
};

struct Asl1Degree {
  std::uint32_t degree = 0;
  std::size_t standard = 0;
  /// Dimension of the degree-d piece of the algebra.
  std::size_t hilbert = 0;
  bool independent = false;
  bool ok = false;
};

/// ASL-1 up to max_deg: standard monomial images are independent and their
/// number equals the graded dimension.
std::vector<Asl1Degree> asl1_check(const AslStructure& a, std::uint32_t max_deg);

struct StraighteningRelation {
  std::size_t alpha = 0, beta = 0;
  std::vector<std::pair<Rational, StandardMonomial>> terms;
  /// Every term's gamma_1 lies below alpha and beta.
  bool asl2_ok = false;
  /// Degree-2 standard monomial images are independent, so the expression is unique.
  bool unique = false;
  /// y_alpha y_beta - sum r_i y_gamma..., verified to lie in the kernel.
  Polynomial relation;
  /// in(relation) = y_alpha y_beta under revlex from a linear extension.
  bool revlex_lead_ok = false;
};

/// Expresses phi(alpha) phi(beta) in degree-2 standard monomials, trying the
/// ASL-2 shaped ones first. Throws InputError for comparable elements and
/// NoExpression when no expression exists.
StraighteningRelation straighten(const AslStructure& a, std::size_t alpha, std::size_t beta);

/// Degree-reverse-lex order on the y-ring in which poset-smaller elements
/// give smaller variables (ties by a fixed linear extension).
MonomialOrder revlex_from_poset(const AslStructure& a);

struct AslReport {
  std::uint32_t max_degree = 0;
  std::vector<Asl1Degree> asl1;
  bool asl1_ok = false;
  std::vector<StraighteningRelation> relations;
  /// Incomparable pairs without any standard-monomial expression.
  std::vector<std::pair<std::size_t, std::size_t>> no_expression;
  /// ASL-2 shaped expression exists for every incomparable pair.
  bool weakly = false;
  bool asl = false;
  /// ASL verdict of the algebra of leading monomials, when requested.
  std::optional<bool> initial_asl;
  /// Initial algebra ASL and weakly ASL together imply ASL.
  bool transfer_consistent = true;
};

/// Full check. With `initial_order`, also checks the algebra generated by
/// the leading monomials under that order and asserts the transfer.
AslReport asl_check(const AslStructure& a, std::uint32_t max_deg,
                    const std::optional<MonomialOrder>& initial_order = std::nullopt);

/// Q_L of a thin lattice L = {0, x_1..x_n, y_1..y_n, 1}.
struct QLattice {
  /// Element indices of x_1..x_n and y_1..y_n.
  std::vector<std::size_t> x, y;
  /// (i, j), 1-based, with x_i and y_j incomparable; sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  /// Position of f_{x_i y_j} in join_meet_system(L).pairs.
  std::vector<std::size_t> generator;
  /// Componentwise order on `pairs`, labels "(i,j)".
  Poset poset;
};

/// x_1 is the rank-1 element whose labelled chain holds more join-irreducibles
/// (ties: smaller index); `swap` exchanges the roles. Throws NotThin.
QLattice q_lattice(const Lattice& l, bool swap = false);
bool is_chain(const QLattice& q);

/// The ASL structure of R_K(L) on Q_L.
AslStructure thin_asl_structure(const PresentationMap& m, const QLattice& q);

/// The Plücker-type identity on D_{2*3^(n-1)}: f_{l,i} f_{k,j} = f_{k,i} f_{l,j} - f_{j-1,i} f_{l,k+1}
/// for all i < j <= k < l, each factor checked to be a binomial of the lattice.
struct PluckerIdentityReport {
  std::size_t tuples = 0;
  std::size_t holding = 0;
  /// Tuples for which the identity as literally printed holds.
  std::size_t literal_holding = 0;
  bool ok() const { return tuples > 0 && holding == tuples; }
};
PluckerIdentityReport plucker_identity_check(std::uint32_t n);

}  // namespace joinmeet
