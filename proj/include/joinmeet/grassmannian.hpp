#pragma once

// The lattice L(d, n) of Plücker symbols, maximal minors of a d x n matrix
// of variables, and the Hibi-type toric ring of their diagonal terms.

#include <cstdint>
#include <string>
#include <vector>

#include "joinmeet/asl.hpp"
#include "joinmeet/kernel.hpp"
#include "joinmeet/lattice.hpp"

namespace joinmeet {

/// [i_1 ... i_d], strictly increasing, 1-based.
struct PluckerSymbol {
  std::vector<std::uint32_t> indices;
  auto operator<=>(const PluckerSymbol&) const = default;
  /// "[14]", or "[1,10]" when n >= 10.
  std::string label(std::uint32_t n) const;
};

struct GrassLattice {
  std::uint32_t d = 0, n = 0;
  /// Element a of `lattice` is symbols[a]; symbols are in lex order.
  std::vector<PluckerSymbol> symbols;
  Lattice lattice;
};

/// Componentwise order on d-subsets of [n]; distributivity is asserted.
/// Throws InputError unless 1 <= d <= n.
GrassLattice grass_lattice(std::uint32_t d, std::uint32_t n);

/// Join-irreducibles by the closed form: [a..a+d-1] for 1 < a <= n-d+1 and
/// [1..a, a+b, .., b+d-1] for 1 <= a < d, 1 < b <= n-d+1.
std::vector<PluckerSymbol> appendix_join_irreducibles(std::uint32_t d, std::uint32_t n);

/// The join-irreducibles of g.lattice, as symbols, sorted.
std::vector<PluckerSymbol> lattice_join_irreducibles(const GrassLattice& g);

/// chains[j-1][k-j-1] is the element x_{j,k}, k = j+1 .. n-d+j: the symbol
/// [1, .., j-1, k, k+1, ..]. Asserts that the chains partition the
/// join-irreducibles and that x_{j,k} <= xi iff k <= i_j.
std::vector<std::vector<std::size_t>> chain_decomposition(const GrassLattice& g);

/// K[x[i,j]], row-major: x[1,1] > x[1,2] > ... under lex.
RingHandle grass_ring(std::uint32_t d, std::uint32_t n);

/// Determinant of the columns of `s`; asserts the diagonal is the leading
/// term under lex on grass_ring. Throws InputError for an invalid symbol and
/// BudgetExceeded for d > 5.
Polynomial plucker_polynomial(const PluckerSymbol& s, const RingHandle& ring, std::uint32_t d, std::uint32_t n);

/// y_xi |-> [xi] for every symbol, in lattice order.
PresentationMap plucker_presentation(const GrassLattice& g);
/// y_xi |-> prod_j x_{j, i_j}.
PresentationMap psi_presentation(const GrassLattice& g);

struct GrassAslReport {
  std::uint32_t d = 0, n = 0;
  /// Determinant generators on L(d, n), with the transfer through the
  /// algebra of diagonal terms.
  AslReport report;
  std::size_t incomparable_pairs = 0;
};

GrassAslReport grass_asl_check(std::uint32_t d, std::uint32_t n, std::uint32_t max_deg);

/// psi(a) psi(b) = psi(a join b) psi(a meet b) for every pair.
bool psi_multiplicativity(std::uint32_t d, std::uint32_t n);

struct PhiMapReport {
  /// Number of distinct degree-r products, r = 1..max_degree.
  std::vector<std::size_t> phi_dims, psi_dims;
  /// sigma: x_{j,k} -> x_{j,j} ... x_{j,k} sends psi(xi) to phi(xi) and is
  /// injective on monomials.
  bool substitution_ok = false;
  /// psi(xi) divides phi(xi) for every xi.
  bool psi_divides_phi = false;
  /// Generators of one family that literally lie in the other algebra.
  std::size_t phi_in_psi = 0, psi_in_phi = 0;
  std::size_t size = 0;
  bool ok() const { return phi_dims == psi_dims && substitution_ok && psi_divides_phi; }
};

/// phi(xi) = prod_j x_{j,j} x_{j,j+1} ... x_{j,i_j} against psi.
PhiMapReport phi_map_check(std::uint32_t d, std::uint32_t n, std::uint32_t max_degree = 3);

}  // namespace joinmeet
