#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace joinmeet {

using Var = std::uint32_t;

/// Power product stored as (variable, exponent) pairs sorted by variable,
/// with no zero exponents.
class Monomial {
 public:
  using Entry = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  static Monomial var(Var v, std::uint32_t e = 1);
  /// Merges repeated variables and drops zero exponents.
  static Monomial from_entries(std::vector<Entry> entries);
  static Monomial from_dense(std::span<const std::uint32_t> exps);

  const std::vector<Entry>& entries() const { return e_; }
  std::uint32_t degree() const { return deg_; }
  std::uint32_t exponent(Var v) const;
  bool is_one() const { return e_.empty(); }
  /// One past the largest variable index present.
  Var span_vars() const { return e_.empty() ? 0 : e_.back().first + 1; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool divides(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  /// No variable in common.
  friend bool coprime(const Monomial& a, const Monomial& b);

  /// Canonical (not monomial-order) comparison, for containers.
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }

  std::size_t hash() const;

 private:
  std::vector<Entry> e_;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// A monomial order. Every kind is decided by the exponent difference of the
/// two arguments, which makes multiplicativity structural.
///
/// Variables are ranked for lex-type comparisons: by default variable 0 is
/// the largest; with_ranking(r) makes r[v] the position of v (0 = largest).
class MonomialOrder {
 public:
  enum class Kind { lex, deglex, degrevlex, weight, block };

  static MonomialOrder lex();
  static MonomialOrder deglex();
  static MonomialOrder degrevlex();
  /// Compare w·a first, then `tiebreak`.
  static MonomialOrder weight(std::vector<std::int64_t> w, MonomialOrder tiebreak);
  /// block_of[v] selects the block of v; blocks are compared in increasing
  /// block index, each by its own inner order. Variables past block_of.size()
  /// fall in the last block.
  static MonomialOrder block(std::vector<std::uint32_t> block_of, std::vector<MonomialOrder> inner);

  MonomialOrder with_ranking(std::vector<std::uint32_t> rank) const;

  Kind kind() const { return kind_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }

  /// -1, 0, 1 as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Integer key whose lexicographic comparison agrees with compare() for
  /// monomials in the first `nvars` variables.
  void append_key(const Monomial& m, std::size_t nvars, std::vector<std::int64_t>& out) const;

  /// Comparison on an exponent difference a - b given as sorted pairs.
  int compare_diff(std::span<const std::pair<Var, std::int64_t>> diff) const;

 private:
  std::uint32_t rank_of(Var v) const { return v < rank_.size() ? rank_[v] : v; }

  Kind kind_ = Kind::degrevlex;
  std::vector<std::uint32_t> rank_;
  std::vector<std::int64_t> weights_;
  std::vector<std::uint32_t> block_of_;
  std::vector<MonomialOrder> inner_;
};

}  // namespace joinmeet
