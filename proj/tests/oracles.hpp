#pragma once

// Naive reference computations, deliberately independent of the library
// internals they are used to check.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Covers = std::vector<std::pair<std::string, std::string>>;

// Reflexive-transitive closure by repeated DFS from every element.
inline std::map<std::string, std::set<std::string>> up_sets(const std::vector<std::string>& elems,
                                                            const Covers& covers) {
  std::map<std::string, std::set<std::string>> up;
  for (const auto& e : elems) {
    std::vector<std::string> stack{e};
    auto& seen = up[e];
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      if (!seen.insert(a).second) continue;
      for (const auto& [lo, hi] : covers)
        if (lo == a) stack.push_back(hi);
    }
  }
  return up;
}

struct Order {
  std::vector<std::string> elems;
  std::map<std::string, std::set<std::string>> up;
  bool leq(const std::string& a, const std::string& b) const { return up.at(a).count(b) > 0; }
  bool comparable(const std::string& a, const std::string& b) const { return leq(a, b) || leq(b, a); }

  std::string join(const std::string& a, const std::string& b) const {
    std::vector<std::string> ub;
    for (const auto& c : elems)
      if (leq(a, c) && leq(b, c)) ub.push_back(c);
    for (const auto& c : ub)
      if (std::all_of(ub.begin(), ub.end(), [&](const std::string& d) { return leq(c, d); })) return c;
    return "";
  }
  std::string meet(const std::string& a, const std::string& b) const {
    std::vector<std::string> lb;
    for (const auto& c : elems)
      if (leq(c, a) && leq(c, b)) lb.push_back(c);
    for (const auto& c : lb)
      if (std::all_of(lb.begin(), lb.end(), [&](const std::string& d) { return leq(d, c); })) return c;
    return "";
  }
  // Longest chain from any minimal element, by memoized recursion.
  int rank(const std::string& a) const {
    int best = 0;
    for (const auto& c : elems)
      if (c != a && leq(c, a)) best = std::max(best, rank(c) + 1);
    return best;
  }
};

inline Order make_order(const std::vector<std::string>& elems, const Covers& covers) {
  return Order{elems, up_sets(elems, covers)};
}

inline std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline const Covers& b3_covers() {
  static const Covers c{{"1", "2"}, {"1", "3"}, {"1", "6"}, {"2", "4"}, {"2", "5"}, {"3", "4"},
                        {"3", "7"}, {"6", "5"}, {"6", "7"}, {"4", "8"}, {"5", "8"}, {"7", "8"}};
  return c;
}

// Number of multichains of length d in an order (naive recursion).
inline std::size_t multichains(const Order& o, std::size_t d, const std::string& floor = "") {
  if (d == 0) return 1;
  std::size_t n = 0;
  for (const auto& e : o.elems)
    if (floor.empty() || o.leq(floor, e)) n += multichains(o, d - 1, e);
  return n;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
