#include "joinmeet/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "joinmeet/error.hpp"

namespace joinmeet {

RingHandle make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(Ring{std::move(names)});
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) throw RingMismatch();
}

namespace {

bool canonical_less(const Term& a, const Term& b) { return a.m < b.m; }

}  // namespace

Polynomial Polynomial::constant(RingHandle ring, const Rational& c) {
  return monomial(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::variable(RingHandle ring, Var v) {
  if (v >= ring->size()) throw InputError("variable index out of range");
  return monomial(std::move(ring), Monomial::var(v));
}

Polynomial Polynomial::monomial(RingHandle ring, Monomial m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) {
    p.terms_.push_back({std::move(m), c});
    p.terms_.back().c.canonicalize();
  }
  return p;
}

Polynomial Polynomial::from_terms(RingHandle ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), canonical_less);
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    t.c.canonicalize();
    if (!p.terms_.empty() && p.terms_.back().m == t.m)
      p.terms_.back().c += t.c;
    else {
      if (!p.terms_.empty() && sgn(p.terms_.back().c) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().c) == 0) p.terms_.pop_back();
  return p;
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.m.degree() != terms_.front().m.degree()) return false;
  return true;
}

bool Polynomial::is_homogeneous(std::span<const std::int64_t> w) const {
  auto wdeg = [&](const Monomial& m) {
    std::int64_t s = 0;
    for (auto [v, e] : m.entries()) s += (v < w.size() ? w[v] : 0) * e;
    return s;
  };
  for (const auto& t : terms_)
    if (wdeg(t.m) != wdeg(terms_.front().m)) return false;
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, canonical_less);
  return it != terms_.end() && it->m == m ? it->c : Rational(0);
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.m, b.m); });
  return out;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw InvariantViolation("zero polynomial has no leading term");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.greater(t.m, best->m)) best = &t;
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  check_same_ring(a, b);
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin(), j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end() || (i != a.terms().end() && i->m < j->m)) {
      out.push_back(*i++);
    } else if (i == a.terms().end() || j->m < i->m) {
      out.push_back({j->m, subtract ? Rational(-j->c) : j->c});
      ++j;
    } else {
      Rational c = subtract ? Rational(i->c - j->c) : Rational(i->c + j->c);
      if (sgn(c) != 0) out.push_back({i->m, std::move(c)});
      ++i, ++j;
    }
  }
  return Polynomial::from_terms(a.ring(), std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) acc[s.m * t.m] += s.c * t.c;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.push_back({m, c});
  return Polynomial::from_terms(a.ring(), std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial p(a.ring());
  if (sgn(c) == 0) return p;
  p.terms_ = a.terms_;
  for (auto& t : p.terms_) t.c *= c;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial p(ring_);
  if (sgn(c) == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the canonical order only up to
  // re-sorting, since the canonical order is not multiplicative.
  for (const auto& t : terms_) p.terms_.push_back({t.m * m, t.c * c});
  std::sort(p.terms_.begin(), p.terms_.end(), canonical_less);
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_term(order).c;
  return inv * *this;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images,
                                  const RingHandle& target) const {
  if (images.size() != ring_->size()) throw InputError("substitution needs one image per variable");
  for (const auto& img : images)
    if (img.ring() != target) throw RingMismatch();
  // Cache powers so repeated exponents are expanded once.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](Var v, std::uint32_t e) -> const Polynomial& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(constant(target, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
    return pw[e];
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.c);
    for (auto [v, e] : t.m.entries()) prod = prod * power(v, e);
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return from_terms(target, std::move(acc));
}

std::string monomial_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (auto [v, e] : m.entries()) {
    if (!out.empty()) out += "*";
    out += v < ring.size() ? ring.names[v] : "v" + std::to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string Polynomial::to_string(const MonomialOrder& order) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : sorted_terms(order)) {
    const bool neg = sgn(t.c) < 0;
    Rational mag = abs(t.c);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const std::string mono = monomial_string(t.m, *ring_);
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order) {
  std::vector<Term> leads;
  for (const auto& g : divisors) {
    check_same_ring(f, g);
    if (g.is_zero()) throw InputError("cannot divide by the zero polynomial");
    leads.push_back(g.leading_term(order));
  }
  Polynomial rest = f;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term lt = rest.leading_term(order);
    bool reduced = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (!divides(leads[k].m, lt.m)) continue;
      rest = rest - divisors[k].mul_term(lt.m / leads[k].m, lt.c / leads[k].c);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      rest = rest - Polynomial::monomial(rest.ring(), lt.m, lt.c);
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

}  // namespace joinmeet
