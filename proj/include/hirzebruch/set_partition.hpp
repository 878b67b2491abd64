#pragma once

// The lattice of set partitions of {1, ..., r} ordered by refinement.
//
// A set partition is stored as its restricted-growth string (RGS): element i
// (0-based) carries the label of its block, labels appear in first-occurrence
// order, so rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]). The RGS is a unique
// normal form, so equality and hashing are structural. Blocks are numbered by
// their smallest element.

#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hirzebruch {

inline constexpr unsigned kMaxSetPartitionSize = 12;  // Bell(12) = 4,213,597

class SetPartition {
 public:
  SetPartition() = default;

  /// From a restricted-growth string over {0, 1, ...}.
  explicit SetPartition(std::vector<std::uint8_t> rgs) : rgs_(std::move(rgs)) {
    unsigned next = 0;
    for (std::uint8_t label : rgs_) {
      if (label > next) throw std::invalid_argument("SetPartition: not a restricted-growth string");
      if (label == next) ++next;
    }
    length_ = next;
  }

  /// From blocks of 1-based elements covering {1, ..., r} exactly once.
  static SetPartition from_blocks(const std::vector<std::vector<unsigned>>& blocks) {
    unsigned r = 0;
    for (const auto& b : blocks) r += static_cast<unsigned>(b.size());
    std::vector<int> label(r, -1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].empty()) throw std::invalid_argument("SetPartition: empty block");
      for (unsigned e : blocks[i]) {
        if (e < 1 || e > r || label[e - 1] != -1)
          throw std::invalid_argument("SetPartition: blocks must partition {1..r}");
        label[e - 1] = static_cast<int>(i);
      }
    }
    return canonical(label);
  }

  /// Relabels an arbitrary block assignment into RGS normal form.
  static SetPartition canonical(const std::vector<int>& labels) {
    std::vector<int> remap;
    std::vector<std::uint8_t> rgs;
    rgs.reserve(labels.size());
    int next = 0;
    for (int l : labels) {
      if (l < 0) throw std::invalid_argument("SetPartition: negative label");
      if (static_cast<std::size_t>(l) >= remap.size()) remap.resize(l + 1, -1);
      if (remap[l] == -1) remap[l] = next++;
      rgs.push_back(static_cast<std::uint8_t>(remap[l]));
    }
    return SetPartition(std::move(rgs));
  }

  static SetPartition finest(unsigned r) {
    std::vector<std::uint8_t> rgs(r);
    for (unsigned i = 0; i < r; ++i) rgs[i] = static_cast<std::uint8_t>(i);
    return SetPartition(std::move(rgs));
  }

  static SetPartition coarsest(unsigned r) { return SetPartition(std::vector<std::uint8_t>(r, 0)); }

  unsigned size() const noexcept { return static_cast<unsigned>(rgs_.size()); }
  unsigned length() const noexcept { return length_; }
  const std::vector<std::uint8_t>& rgs() const noexcept { return rgs_; }
  unsigned block_of(unsigned element) const { return rgs_.at(element); }

  /// Blocks as sorted lists of 0-based elements, ordered by smallest element.
  std::vector<std::vector<unsigned>> blocks() const {
    std::vector<std::vector<unsigned>> out(length_);
    for (unsigned i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(i);
    return out;
  }

  std::vector<unsigned> block_sizes() const {
    std::vector<unsigned> sizes(length_, 0);
    for (std::uint8_t l : rgs_) ++sizes[l];
    return sizes;
  }

  /// "{{1,2},{3}}" with 1-based elements.
  std::string to_string() const {
    std::string s = "{";
    auto bs = blocks();
    for (std::size_t i = 0; i < bs.size(); ++i) {
      if (i) s += ",";
      s += "{";
      for (std::size_t j = 0; j < bs[i].size(); ++j) {
        if (j) s += ",";
        s += std::to_string(bs[i][j] + 1);
      }
      s += "}";
    }
    return s + "}";
  }

  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.rgs_ == b.rgs_; }
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.rgs_ <=> b.rgs_; }

 private:
  std::vector<std::uint8_t> rgs_;
  unsigned length_ = 0;
};

struct SetPartitionHash {
  std::size_t operator()(const SetPartition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t c : p.rgs()) h = (h ^ c) * 1099511628211ull;
    return h;
  }
};

/// Calls visit(rgs, length) for every set partition of an r-element set, in
/// lexicographic RGS order. No size guard; callers bound r themselves.
/// r = 0 visits the single empty partition.
template <typename Visitor>
void for_each_set_partition_rgs(unsigned r, Visitor&& visit) {
  std::vector<std::uint8_t> a(r, 0);
  // prefix_max[i] = max(a[0..i-1]) + 1, i.e. the largest label allowed at i.
  std::vector<std::uint8_t> bound(r + 1, 0);
  if (r == 0) {
    visit(a, 0u);
    return;
  }
  for (unsigned i = 1; i < r; ++i) bound[i] = 1;
  while (true) {
    unsigned len = r > 0 ? static_cast<unsigned>(std::max<int>(bound[r - 1], a[r - 1] + 1)) : 0;
    visit(static_cast<const std::vector<std::uint8_t>&>(a), len);
    // Find rightmost position that can be incremented.
    int i = static_cast<int>(r) - 1;
    while (i > 0 && a[i] >= bound[i]) --i;
    if (i <= 0) return;
    ++a[i];
    for (unsigned j = i + 1; j < r; ++j) {
      a[j] = 0;
      bound[j] = static_cast<std::uint8_t>(std::max<int>(bound[j - 1], a[j - 1] + 1));
    }
  }
}

template <typename Visitor>
void for_each_set_partition(unsigned r, Visitor&& visit) {
  for_each_set_partition_rgs(r, [&](const std::vector<std::uint8_t>& rgs, unsigned) { visit(SetPartition(rgs)); });
}

/// All set partitions of {1, ..., r}, 1 <= r <= 12, in lexicographic RGS order.
inline std::vector<SetPartition> enumerate_set_partitions(unsigned r) {
  if (r < 1 || r > kMaxSetPartitionSize)
    throw std::out_of_range("enumerate_set_partitions: r = " + std::to_string(r) +
                            " outside 1..12 (Bell(12) = 4,213,597 partitions; larger r is not enumerable "
                            "in reasonable time and memory)");
  std::vector<SetPartition> out;
  for_each_set_partition(r, [&](SetPartition p) { out.push_back(std::move(p)); });
  return out;
}

inline Integer bell(unsigned n) {
  // Bell triangle.
  std::vector<Integer> row{1};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Integer> next{row.back()};
    for (const Integer& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

/// If pi <= rho, the unique partition W of {1, ..., l(pi)} (blocks of pi
/// indexed by smallest element) with rho_i = union_{j in W_i} pi_j.
inline std::optional<SetPartition> refinement_leq(const SetPartition& pi, const SetPartition& rho) {
  if (pi.size() != rho.size()) throw std::invalid_argument("refinement_leq: partitions of different ground sets");
  std::vector<int> target(pi.length(), -1);
  for (unsigned e = 0; e < pi.size(); ++e) {
    int& t = target[pi.block_of(e)];
    const int r = static_cast<int>(rho.block_of(e));
    if (t == -1) t = r;
    else if (t != r) return std::nullopt;
  }
  return SetPartition::canonical(target);
}

/// rho = W(pi): merges the blocks of pi according to a partition W of its blocks.
inline SetPartition coarsen(const SetPartition& pi, const SetPartition& witness) {
  if (witness.size() != pi.length()) throw std::invalid_argument("coarsen: witness must partition the blocks of pi");
  std::vector<int> labels(pi.size());
  for (unsigned e = 0; e < pi.size(); ++e) labels[e] = witness.block_of(pi.block_of(e));
  return SetPartition::canonical(labels);
}

/// Every rho >= pi, in lexicographic order of the witness partitions.
inline std::vector<SetPartition> coarsenings(const SetPartition& pi) {
  std::vector<SetPartition> out;
  for_each_set_partition(pi.length(), [&](const SetPartition& w) { out.push_back(coarsen(pi, w)); });
  return out;
}

/// Moebius function of the partition lattice:
/// mu(pi, rho) = (-1)^{l(pi) - l(rho)} prod_i (b_i - 1)!, b_i = number of
/// pi-blocks inside rho_i.
inline std::int64_t mobius(const SetPartition& pi, const SetPartition& rho) {
  auto witness = refinement_leq(pi, rho);
  if (!witness) throw std::invalid_argument("mobius: pi is not a refinement of rho");
  std::int64_t mu = ((pi.length() - rho.length()) % 2 == 0) ? 1 : -1;
  for (unsigned b : witness->block_sizes()) mu *= factorial_i64(b - 1);
  return mu;
}

/// Stirling number of the second kind, 1 <= k <= n.
inline Integer stirling2(unsigned n, unsigned k) {
  if (k == 0 || k > n) throw std::invalid_argument("stirling2: need 1 <= k <= n");
  // row[j] = S(m, j)
  std::vector<Integer> row(n + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = m; j >= 1; --j) row[j] = Integer(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

/// sum_{k=1}^{n} (-1)^k S(n,k) k!, which equals (-1)^n.
inline std::int64_t length_sum(unsigned n) {
  if (n < 1 || n > 9) throw std::out_of_range("length_sum: n must lie in 1..9");
  Integer acc = 0;
  for (unsigned k = 1; k <= n; ++k) {
    Integer term = stirling2(n, k) * factorial(k);
    acc += (k % 2 == 0) ? term : Integer(-term);
  }
  return acc.convert_to<std::int64_t>();
}

/// sum_{rho >= pi} (-1)^{l(rho)} l(rho)! by walking the interval [pi, 1].
inline std::int64_t length_sum_over_coarsenings(const SetPartition& pi) {
  if (pi.length() > 9) throw std::out_of_range("length_sum_over_coarsenings: l(pi) must be <= 9");
  std::int64_t acc = 0;
  for_each_set_partition_rgs(pi.length(), [&](const std::vector<std::uint8_t>&, unsigned len) {
    const std::int64_t f = factorial_i64(len);
    acc += (len % 2 == 0) ? f : -f;
  });
  return acc;
}

}  // namespace hirzebruch
