#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace cyclecon {

struct VertexTag {};
struct EdgeTag {};
struct ArcTag {};

/// Equivalence-class labelling of vertices, edges or arcs.
///
/// Labels are canonical: classes are numbered 0..count()-1 in order of their
/// smallest member id, so two partitions describing the same classes compare
/// equal.
template <class Tag>
class Partition {
 public:
  Partition() = default;

  /// Canonicalizes arbitrary labels (any integers, equal label = same class).
  static Partition from_labels(std::span<const std::uint32_t> labels) {
    Partition p;
    p.class_of_.resize(labels.size());
    std::vector<std::uint32_t> remap;
    std::uint32_t max_label = 0;
    for (auto l : labels) max_label = std::max(max_label, l);
    remap.assign(labels.empty() ? 0 : std::size_t{max_label} + 1, kUnset);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto& slot = remap[labels[i]];
      if (slot == kUnset) slot = p.count_++;
      p.class_of_[i] = slot;
    }
    return p;
  }

  /// Every element in its own class.
  static Partition singletons(std::size_t n) {
    std::vector<std::uint32_t> labels(n);
    for (std::uint32_t i = 0; i < n; ++i) labels[i] = i;
    return from_labels(labels);
  }

  std::size_t size() const noexcept { return class_of_.size(); }
  std::size_t count() const noexcept { return count_; }
  std::uint32_t operator[](std::size_t element) const { return class_of_[element]; }
  std::span<const std::uint32_t> labels() const noexcept { return class_of_; }
  bool same(std::size_t a, std::size_t b) const { return class_of_[a] == class_of_[b]; }

  std::vector<std::size_t> class_sizes() const {
    std::vector<std::size_t> sizes(count_, 0);
    for (auto c : class_of_) ++sizes[c];
    return sizes;
  }

  /// Members of each class, each list increasing.
  std::vector<std::vector<std::uint32_t>> classes() const {
    std::vector<std::vector<std::uint32_t>> out(count_);
    for (std::uint32_t i = 0; i < class_of_.size(); ++i) out[class_of_[i]].push_back(i);
    return out;
  }

  std::size_t trivial_count() const {
    std::size_t t = 0;
    for (auto s : class_sizes()) t += s == 1;
    return t;
  }

  /// True when every class of *this lies inside a class of `coarser`.
  bool refines(const Partition& coarser) const {
    if (coarser.size() != size()) return false;
    std::vector<std::uint32_t> image(count_, kUnset);
    for (std::size_t i = 0; i < class_of_.size(); ++i) {
      auto& img = image[class_of_[i]];
      if (img == kUnset) img = coarser.class_of_[i];
      else if (img != coarser.class_of_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  static constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> class_of_;
  std::uint32_t count_ = 0;
};

using VertexPartition = Partition<VertexTag>;
using EdgePartition = Partition<EdgeTag>;
using ArcPartition = Partition<ArcTag>;

}  // namespace cyclecon
