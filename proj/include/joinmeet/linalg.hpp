#pragma once

// Sparse row echelon forms over Q (fraction-free, integer rows) and over a
// prime field, with optional tracking of the row operations.

#include <gmpxx.h>

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace joinmeet {

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

/// Integers with fraction-free elimination; rows are kept primitive.
struct IntegerField {
  using Elem = mpz_class;
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
};

/// Z/p for a prime p < 2^32; rows are kept with pivot 1.
struct PrimeField {
  using Elem = std::uint32_t;
  std::uint32_t p = kDefaultPrime;

  static bool is_zero(Elem a) { return a == 0; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p); }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p - b); }
  Elem neg(Elem a) const { return a ? p - a : 0; }
  Elem inv(Elem a) const {
    // Fermat: a^(p-2).
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<Elem>(r);
  }
  Elem from(const mpz_class& z) const {
    return static_cast<Elem>(mpz_fdiv_ui(z.get_mpz_t(), p));
  }
};

template <class E>
using SparseVec = std::vector<std::pair<std::uint32_t, E>>;

namespace detail {

// x := a*x - b*y over the integers.
inline void int_combine(SparseVec<mpz_class>& x, const mpz_class& a, const SparseVec<mpz_class>& y,
                        const mpz_class& b) {
  SparseVec<mpz_class> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  mpz_class t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      t = a * x[i].second - b * y[j].second;
      if (sgn(t) != 0) out.emplace_back(x[i].first, t);
      ++i, ++j;
    }
  }
  x = std::move(out);
}

// x := x - b*y mod p.
inline void prime_combine(const PrimeField& f, SparseVec<std::uint32_t>& x, const SparseVec<std::uint32_t>& y,
                          std::uint32_t b) {
  SparseVec<std::uint32_t> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, f.neg(f.mul(b, y[j].second)));
      ++j;
    } else {
      auto v = f.sub(x[i].second, f.mul(b, y[j].second));
      if (v) out.emplace_back(x[i].first, v);
      ++i, ++j;
    }
  }
  x = std::move(out);
}

inline void make_primitive(SparseVec<mpz_class>& v, SparseVec<mpz_class>* t) {
  mpz_class g = 0;
  for (const auto& [c, x] : v) g = gcd(g, x);
  if (t)
    for (const auto& [c, x] : *t) g = gcd(g, x);
  if (g == 0 || g == 1) return;
  for (auto& [c, x] : v) x /= g;
  if (t)
    for (auto& [c, x] : *t) x /= g;
}

}  // namespace detail

/// Echelon form whose rows have distinct pivots, the pivot of a row being
/// its largest column. Vectors are sorted by increasing column.
template <class F>
class Echelon {
 public:
  using Elem = typename F::Elem;
  using Vec = SparseVec<Elem>;

  explicit Echelon(F field = {}) : f_(field) {}

  /// Reduces v (applying the same operations to *track when given) until
  /// its largest column is not a pivot. Returns true when v becomes zero.
  bool reduce(Vec& v, Vec* track) const {
    while (!v.empty()) {
      auto it = pivot_.find(v.back().first);
      if (it == pivot_.end()) break;
      const auto& row = rows_[it->second];
      const auto& rtrack = tracks_[it->second];
      if constexpr (std::is_same_v<F, IntegerField>) {
        const mpz_class& p = row.back().second;
        const mpz_class c = v.back().second;
        const mpz_class g = gcd(p, c);
        const mpz_class a = p / g, b = c / g;
        detail::int_combine(v, a, row, b);
        if (track) detail::int_combine(*track, a, rtrack, b);
        detail::make_primitive(v, track);
      } else {
        const Elem c = v.back().second;
        detail::prime_combine(f_, v, row, c);
        if (track) detail::prime_combine(f_, *track, rtrack, c);
      }
    }
    return v.empty();
  }

  /// Adds a vector already reduced by reduce() (nonzero).
  void add(Vec v, Vec track = {}) {
    if constexpr (std::is_same_v<F, IntegerField>) {
      detail::make_primitive(v, &track);
    } else {
      const Elem inv = f_.inv(v.back().second);
      for (auto& [c, x] : v) x = f_.mul(x, inv);
      for (auto& [c, x] : track) x = f_.mul(x, inv);
    }
    pivot_.emplace(v.back().first, static_cast<std::uint32_t>(rows_.size()));
    rows_.push_back(std::move(v));
    tracks_.push_back(std::move(track));
  }

  /// Reduces and adds; returns true when the vector was independent.
  bool insert(Vec v) {
    if (reduce(v, nullptr)) return false;
    add(std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const F& field() const { return f_; }

 private:
  F f_;
  std::vector<Vec> rows_, tracks_;
  std::unordered_map<std::uint32_t, std::uint32_t> pivot_;
};

/// Rank of a dense rational matrix.
std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows);

/// Basis of {w : rows * w = 0} as primitive integer vectors.
std::vector<std::vector<mpz_class>> integer_null_space(std::vector<std::vector<mpq_class>> rows,
                                                       std::size_t ncols);

}  // namespace joinmeet
