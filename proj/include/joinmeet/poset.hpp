#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace joinmeet {

using Cover = std::pair<std::size_t, std::size_t>;

/// A finite poset over opaque string labels.
///
/// The order relation is stored as a dense boolean matrix together with its
/// transitive reduction. Instances are immutable once built; the factories
/// validate reflexivity, antisymmetry and transitivity.
class Poset {
 public:
  Poset() = default;

  /// Builds the poset generated by `covers` (pairs a < b). The relation is
  /// closed transitively and re-reduced, so redundant pairs are accepted.
  static Poset from_covers(std::vector<std::string> labels,
                           std::span<const std::pair<std::string, std::string>> covers);
  static Poset from_cover_indices(std::vector<std::string> labels, std::span<const Cover> covers);

  /// Builds from a full relation `leq[a * n + b]`, which must already be a
  /// partial order.
  static Poset from_relation(std::vector<std::string> labels, std::vector<std::uint8_t> leq);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Like find() but throws UnknownLabel.
  std::size_t index_of(std::string_view label) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// Covering pairs (a, b) with a ⋖ b, sorted.
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<std::size_t>& lower_covers(std::size_t a) const { return lower_[a]; }
  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return upper_[a]; }

  /// Length of the longest chain.
  std::size_t rank() const;

  /// Subposet on `elements` (in that order) with the induced relation.
  Poset induced(std::span<const std::size_t> elements) const;

  /// Elements sorted so that a < b implies a appears first; ties keep
  /// index order.
  std::vector<std::size_t> linear_extension() const;

  bool is_chain() const;

 private:
  void build_index();
  void reduce();

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> lower_, upper_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Order isomorphism p1 -> p2 as an index map, if one exists.
std::optional<std::vector<std::size_t>> poset_isomorphism(const Poset& p1, const Poset& p2);

}  // namespace joinmeet
