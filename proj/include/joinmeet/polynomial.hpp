#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "joinmeet/monomial.hpp"

namespace joinmeet {

using Rational = mpq_class;
using Integer = mpz_class;

/// Variable names of a polynomial ring; compared by identity.
struct Ring {
  std::vector<std::string> names;
  std::size_t size() const { return names.size(); }
};
using RingHandle = std::shared_ptr<const Ring>;

RingHandle make_ring(std::vector<std::string> names);

struct Term {
  Monomial m;
  Rational c;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept in
/// canonical monomial order (not a monomial order); use sorted_terms() for
/// order-dependent views.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingHandle ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingHandle ring, const Rational& c);
  static Polynomial variable(RingHandle ring, Var v);
  static Polynomial monomial(RingHandle ring, Monomial m, const Rational& c = 1);
  /// Combines repeated monomials and drops zero coefficients.
  static Polynomial from_terms(RingHandle ring, std::vector<Term> terms);

  const RingHandle& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest total degree; 0 for the zero polynomial.
  std::uint32_t degree() const;
  bool is_homogeneous() const;
  /// Homogeneous for deg(x_v) = w[v].
  bool is_homogeneous(std::span<const std::int64_t> w) const;
  Rational coefficient(const Monomial& m) const;

  /// Terms sorted by `order`, largest first.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;
  /// Throws InvariantViolation on the zero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  Polynomial mul_term(const Monomial& m, const Rational& c) const;

  /// Same ring and same terms.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Divides by the leading coefficient under `order`.
  Polynomial monic(const MonomialOrder& order) const;

  /// Ring homomorphism sending variable v to images[v].
  Polynomial substitute(std::span<const Polynomial> images, const RingHandle& target) const;

  /// "3/2*x[a]^2*x[b] - x[c] + 1", terms sorted by `order`.
  std::string to_string(const MonomialOrder& order) const;

 private:
  RingHandle ring_;
  std::vector<Term> terms_;
};

std::string monomial_string(const Monomial& m, const Ring& ring);

/// Remainder of `f` on division by `divisors` (full reduction: no term of
/// the result is divisible by a divisor's leading monomial).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order);

/// Throws RingMismatch unless both share the ring.
void check_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace joinmeet
