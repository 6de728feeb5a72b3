#include "joinmeet/poset.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "joinmeet/error.hpp"

namespace joinmeet {

namespace {

void check_distinct(const std::vector<std::string>& labels) {
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw InputError("duplicate element label '" + *dup + "'");
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> labels,
                         std::span<const std::pair<std::string, std::string>> covers) {
  check_distinct(labels);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<Cover> idx;
  idx.reserve(covers.size());
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a);
    if (ia == index.end()) throw UnknownLabel(a);
    auto ib = index.find(b);
    if (ib == index.end()) throw UnknownLabel(b);
    idx.emplace_back(ia->second, ib->second);
  }
  return from_cover_indices(std::move(labels), idx);
}

Poset Poset::from_cover_indices(std::vector<std::string> labels, std::span<const Cover> covers) {
  check_distinct(labels);
  const std::size_t n = labels.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw InputError("cover index out of range");
    if (a == b) throw CycleDetected(labels[a]);
    succ[a].push_back(b);
  }
  // Kahn's algorithm detects cycles and yields a topological order for the
  // closure pass.
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : succ[a]) ++indeg[b];
  std::vector<std::size_t> order, queue;
  for (std::size_t a = 0; a < n; ++a)
    if (indeg[a] == 0) queue.push_back(a);
  while (!queue.empty()) {
    auto a = queue.back();
    queue.pop_back();
    order.push_back(a);
    for (auto b : succ[a])
      if (--indeg[b] == 0) queue.push_back(b);
  }
  if (order.size() != n) {
    auto it = std::find_if(indeg.begin(), indeg.end(), [](std::size_t d) { return d > 0; });
    throw CycleDetected(labels[static_cast<std::size_t>(it - indeg.begin())]);
  }
  std::vector<std::uint8_t> leq(n * n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto a = *it;
    leq[a * n + a] = 1;
    for (auto b : succ[a])
      for (std::size_t c = 0; c < n; ++c)
        if (leq[b * n + c]) leq[a * n + c] = 1;
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.leq_ = std::move(leq);
  p.reduce();
  p.build_index();
  return p;
}

Poset Poset::from_relation(std::vector<std::string> labels, std::vector<std::uint8_t> leq) {
  check_distinct(labels);
  const std::size_t n = labels.size();
  if (leq.size() != n * n) throw InputError("relation matrix has wrong size");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a * n + a]) throw InputError("relation is not reflexive at " + labels[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a * n + b] && leq[b * n + a]) throw CycleDetected(labels[a]);
      if (!leq[a * n + b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (leq[b * n + c] && !leq[a * n + c])
          throw InputError("relation is not transitive at " + labels[a]);
    }
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.leq_ = std::move(leq);
  p.reduce();
  p.build_index();
  return p;
}

void Poset::reduce() {
  // Covers of a are the strict upper bounds of a that lie strictly above no
  // other strict upper bound; computed with word-parallel bit rows.
  const std::size_t n = size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> up(n * words, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (less(a, b)) up[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
  covers_.clear();
  lower_.assign(n, {});
  upper_.assign(n, {});
  std::vector<std::uint64_t> above(words);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(above.begin(), above.end(), 0);
    for (std::size_t c = 0; c < n; ++c)
      if (less(a, c))
        for (std::size_t w = 0; w < words; ++w) above[w] |= up[c * words + w];
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b) || (above[b / 64] >> (b % 64)) & 1) continue;
      covers_.emplace_back(a, b);
      upper_[a].push_back(b);
      lower_[b].push_back(a);
    }
  }
}

void Poset::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

std::optional<std::size_t> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Poset::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw UnknownLabel(std::string(label));
  return *i;
}

std::vector<std::size_t> Poset::linear_extension() const {
  const std::size_t n = size();
  std::vector<std::size_t> height(n, 0);
  // Longest chain ending at each element; processing by number of elements
  // below gives a valid order for the DP.
  std::vector<std::size_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (less(b, a)) ++below[a];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  for (auto a : order)
    for (auto c : lower_[a]) height[a] = std::max(height[a], height[c] + 1);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(height[a], a) < std::tie(height[b], b);
  });
  return order;
}

std::size_t Poset::rank() const {
  std::size_t best = 0;
  std::vector<std::size_t> height(size(), 0);
  for (auto a : linear_extension()) {
    for (auto c : lower_[a]) height[a] = std::max(height[a], height[c] + 1);
    best = std::max(best, height[a]);
  }
  return best;
}

Poset Poset::induced(std::span<const std::size_t> elements) const {
  const std::size_t m = elements.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (auto e : elements) labels.push_back(labels_.at(e));
  std::vector<std::uint8_t> rel(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rel[i * m + j] = leq(elements[i], elements[j]) ? 1 : 0;
  return from_relation(std::move(labels), std::move(rel));
}

bool Poset::is_chain() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!comparable(a, b)) return false;
  return true;
}

namespace {

struct Signature {
  std::size_t below, above, lower, upper;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const Poset& p) {
  std::vector<Signature> sig(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    Signature s{0, 0, p.lower_covers(a).size(), p.upper_covers(a).size()};
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.less(b, a)) ++s.below;
      if (p.less(a, b)) ++s.above;
    }
    sig[a] = s;
  }
  return sig;
}

bool extend(const Poset& p1, const Poset& p2, const std::vector<std::size_t>& order,
            const std::vector<Signature>& s1, const std::vector<Signature>& s2, std::size_t depth,
            std::vector<std::size_t>& map, std::vector<char>& used) {
  if (depth == order.size()) return true;
  const auto a = order[depth];
  for (std::size_t b = 0; b < p2.size(); ++b) {
    if (used[b] || s1[a] != s2[b]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      const auto c = order[k];
      ok = p1.leq(a, c) == p2.leq(b, map[c]) && p1.leq(c, a) == p2.leq(map[c], b);
    }
    if (!ok) continue;
    map[a] = b;
    used[b] = 1;
    if (extend(p1, p2, order, s1, s2, depth + 1, map, used)) return true;
    used[b] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> poset_isomorphism(const Poset& p1, const Poset& p2) {
  if (p1.size() != p2.size() || p1.covers().size() != p2.covers().size()) return std::nullopt;
  auto s1 = signatures(p1);
  auto s2 = signatures(p2);
  auto c1 = s1, c2 = s2;
  std::sort(c1.begin(), c1.end());
  std::sort(c2.begin(), c2.end());
  if (c1 != c2) return std::nullopt;
  // Assign in a linear-extension order so consistency checks bite early.
  auto order = p1.linear_extension();
  std::vector<std::size_t> map(p1.size(), 0);
  std::vector<char> used(p2.size(), 0);
  if (!extend(p1, p2, order, s1, s2, 0, map, used)) return std::nullopt;
  return map;
}

}  // namespace joinmeet
