#include "joinmeet/monomial.hpp"

#include <algorithm>

#include "joinmeet/error.hpp"

namespace joinmeet {

Monomial Monomial::var(Var v, std::uint32_t e) {
  Monomial m;
  if (e) {
    m.e_.emplace_back(v, e);
    m.deg_ = e;
  }
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  Monomial m;
  for (auto [v, e] : entries) {
    if (!e) continue;
    if (!m.e_.empty() && m.e_.back().first == v)
      m.e_.back().second += e;
    else
      m.e_.emplace_back(v, e);
    m.deg_ += e;
  }
  return m;
}

Monomial Monomial::from_dense(std::span<const std::uint32_t> exps) {
  Monomial m;
  for (std::size_t v = 0; v < exps.size(); ++v)
    if (exps[v]) {
      m.e_.emplace_back(static_cast<Var>(v), exps[v]);
      m.deg_ += exps[v];
    }
  return m;
}

std::uint32_t Monomial::exponent(Var v) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), Entry{v, 0});
  return it != e_.end() && it->first == v ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.e_.reserve(a.e_.size() + b.e_.size());
  auto i = a.e_.begin(), j = b.e_.begin();
  while (i != a.e_.end() || j != b.e_.end()) {
    if (j == b.e_.end() || (i != a.e_.end() && i->first < j->first))
      m.e_.push_back(*i++);
    else if (i == a.e_.end() || j->first < i->first)
      m.e_.push_back(*j++);
    else {
      m.e_.emplace_back(i->first, i->second + j->second);
      ++i, ++j;
    }
  }
  m.deg_ = a.deg_ + b.deg_;
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg_ > b.deg_) return false;
  auto j = b.e_.begin();
  for (auto [v, e] : a.e_) {
    while (j != b.e_.end() && j->first < v) ++j;
    if (j == b.e_.end() || j->first != v || j->second < e) return false;
  }
  return true;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw InvariantViolation("monomial division is not exact");
  Monomial m;
  auto j = b.e_.begin();
  for (auto [v, e] : a.e_) {
    std::uint32_t sub = 0;
    if (j != b.e_.end() && j->first == v) sub = (j++)->second;
    if (e > sub) m.e_.emplace_back(v, e - sub);
  }
  m.deg_ = a.deg_ - b.deg_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Entry> all(a.e_);
  for (auto [v, e] : b.e_) {
    auto it = std::lower_bound(all.begin(), all.end(), Monomial::Entry{v, 0});
    if (it != all.end() && it->first == v)
      it->second = std::max(it->second, e);
    else
      all.insert(it, {v, e});
  }
  return Monomial::from_entries(std::move(all));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Entry> out;
  auto j = b.e_.begin();
  for (auto [v, e] : a.e_) {
    while (j != b.e_.end() && j->first < v) ++j;
    if (j != b.e_.end() && j->first == v) out.emplace_back(v, std::min(e, j->second));
  }
  return Monomial::from_entries(std::move(out));
}

bool coprime(const Monomial& a, const Monomial& b) {
  auto i = a.e_.begin(), j = b.e_.begin();
  while (i != a.e_.end() && j != b.e_.end()) {
    if (i->first == j->first) return false;
    if (i->first < j->first)
      ++i;
    else
      ++j;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto [v, e] : e_) {
    h ^= (static_cast<std::size_t>(v) << 20) ^ e;
    h *= 0x100000001b3ull;
  }
  return h;
}

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::lex;
  return o;
}

MonomialOrder MonomialOrder::deglex() {
  MonomialOrder o;
  o.kind_ = Kind::deglex;
  return o;
}

MonomialOrder MonomialOrder::degrevlex() { return MonomialOrder{}; }

MonomialOrder MonomialOrder::weight(std::vector<std::int64_t> w, MonomialOrder tiebreak) {
  MonomialOrder o;
  o.kind_ = Kind::weight;
  o.weights_ = std::move(w);
  o.inner_.push_back(std::move(tiebreak));
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::uint32_t> block_of,
                                   std::vector<MonomialOrder> inner) {
  if (inner.empty()) throw InputError("block order needs at least one block");
  for (auto b : block_of)
    if (b >= inner.size()) throw InputError("block index out of range");
  MonomialOrder o;
  o.kind_ = Kind::block;
  o.block_of_ = std::move(block_of);
  o.inner_ = std::move(inner);
  return o;
}

MonomialOrder MonomialOrder::with_ranking(std::vector<std::uint32_t> rank) const {
  std::vector<std::uint32_t> seen(rank.size(), 0);
  for (auto r : rank) {
    if (r >= rank.size() || seen[r]) throw InputError("variable ranking is not a permutation");
    seen[r] = 1;
  }
  MonomialOrder o = *this;
  o.rank_ = std::move(rank);
  return o;
}

int MonomialOrder::compare_diff(std::span<const std::pair<Var, std::int64_t>> diff) const {
  auto sign = [](std::int64_t x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
  auto total = [&] {
    std::int64_t t = 0;
    for (auto [v, d] : diff) t += d;
    return t;
  };
  // Lex: the highest-ranked variable with a nonzero difference decides.
  auto lex_sign = [&] {
    const std::pair<Var, std::int64_t>* best = nullptr;
    for (const auto& p : diff)
      if (p.second && (!best || rank_of(p.first) < rank_of(best->first))) best = &p;
    return best ? sign(best->second) : 0;
  };
  switch (kind_) {
    case Kind::lex:
      return lex_sign();
    case Kind::deglex:
      if (auto t = total()) return sign(t);
      return lex_sign();
    case Kind::degrevlex: {
      if (auto t = total()) return sign(t);
      const std::pair<Var, std::int64_t>* last = nullptr;
      for (const auto& p : diff)
        if (p.second && (!last || rank_of(p.first) > rank_of(last->first))) last = &p;
      return last ? -sign(last->second) : 0;
    }
    case Kind::weight: {
      std::int64_t t = 0;
      for (auto [v, d] : diff) t += d * (v < weights_.size() ? weights_[v] : 0);
      if (t) return sign(t);
      return inner_[0].compare_diff(diff);
    }
    case Kind::block: {
      std::vector<std::pair<Var, std::int64_t>> part;
      for (std::uint32_t b = 0; b < inner_.size(); ++b) {
        part.clear();
        for (auto p : diff) {
          const auto blk = p.first < block_of_.size() ? block_of_[p.first]
                                                       : static_cast<std::uint32_t>(inner_.size() - 1);
          if (blk == b) part.push_back(p);
        }
        if (int c = inner_[b].compare_diff(part)) return c;
      }
      return 0;
    }
  }
  return 0;
}

void MonomialOrder::append_key(const Monomial& m, std::size_t nvars,
                               std::vector<std::int64_t>& out) const {
  // Variable at lex position pos.
  std::vector<Var> at(nvars);
  for (Var v = 0; v < nvars; ++v) {
    const auto r = rank_of(v);
    if (r >= nvars) throw InputError("variable ranking does not cover the ring");
    at[r] = v;
  }
  switch (kind_) {
    case Kind::lex:
      for (std::size_t pos = 0; pos < nvars; ++pos) out.push_back(m.exponent(at[pos]));
      return;
    case Kind::deglex:
      out.push_back(m.degree());
      for (std::size_t pos = 0; pos < nvars; ++pos) out.push_back(m.exponent(at[pos]));
      return;
    case Kind::degrevlex:
      out.push_back(m.degree());
      for (std::size_t pos = nvars; pos-- > 0;) out.push_back(-static_cast<std::int64_t>(m.exponent(at[pos])));
      return;
    case Kind::weight: {
      std::int64_t t = 0;
      for (auto [v, e] : m.entries()) t += static_cast<std::int64_t>(e) * (v < weights_.size() ? weights_[v] : 0);
      out.push_back(t);
      inner_[0].append_key(m, nvars, out);
      return;
    }
    case Kind::block:
      for (std::uint32_t b = 0; b < inner_.size(); ++b) {
        std::vector<Monomial::Entry> part;
        for (auto ent : m.entries()) {
          const auto blk = ent.first < block_of_.size() ? block_of_[ent.first]
                                                         : static_cast<std::uint32_t>(inner_.size() - 1);
          if (blk == b) part.push_back(ent);
        }
        inner_[b].append_key(Monomial::from_entries(std::move(part)), nvars, out);
      }
      return;
  }
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  thread_local std::vector<std::pair<Var, std::int64_t>> diff;
  diff.clear();
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  auto i = ea.begin(), j = eb.begin();
  while (i != ea.end() || j != eb.end()) {
    if (j == eb.end() || (i != ea.end() && i->first < j->first)) {
      diff.emplace_back(i->first, i->second);
      ++i;
    } else if (i == ea.end() || j->first < i->first) {
      diff.emplace_back(j->first, -static_cast<std::int64_t>(j->second));
      ++j;
    } else {
      if (i->second != j->second)
        diff.emplace_back(i->first, static_cast<std::int64_t>(i->second) - j->second);
      ++i, ++j;
    }
  }
  if (diff.empty()) return 0;
  return compare_diff(diff);
}

}  // namespace joinmeet
