#pragma once

#include "rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hirzebruch {

/// Integer partition (j_1 >= ... >= j_r >= 1) of its weight k = j_1 + ... + j_r.
class IntegerPartition {
 public:
  IntegerPartition() = default;

  /// Parts must already be non-increasing and positive.
  explicit IntegerPartition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw std::invalid_argument("IntegerPartition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("IntegerPartition: parts must be non-increasing");
    }
  }
  IntegerPartition(std::initializer_list<unsigned> parts) : IntegerPartition(std::vector<unsigned>(parts)) {}

  /// Sorts arbitrary positive parts into canonical order.
  static IntegerPartition from_unsorted(std::vector<unsigned> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return IntegerPartition(std::move(parts));
  }

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  unsigned operator[](std::size_t i) const { return parts_.at(i); }

  unsigned weight() const noexcept {
    unsigned k = 0;
    for (unsigned j : parts_) k += j;
    return k;
  }

  /// alpha_l = number of parts equal to l.
  unsigned multiplicity(unsigned l) const noexcept {
    return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), l));
  }

  /// alpha_1! alpha_2! ... alpha_k!
  Integer multiplicity_factorial() const {
    Integer f = 1;
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      f *= factorial(static_cast<unsigned>(j - i));
      i = j;
    }
    return f;
  }

  /// Lexicographic on the part list; (3) > (2,1) > (1,1,1).
  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;
  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;

  /// "j1+j2+..."; the empty partition renders as "0".
  std::string to_string(char separator = '+') const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += separator;
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  /// Accepts "2,1", "2+1" or "1,2" (parts are sorted).
  static IntegerPartition parse(std::string_view text) {
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    if (text.empty()) throw std::invalid_argument("empty partition");
    while (pos <= text.size()) {
      std::size_t end = text.find_first_of(",+", pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
      unsigned v = static_cast<unsigned>(std::stoul(std::string(tok)));
      if (v == 0) throw std::invalid_argument("partition parts must be positive");
      parts.push_back(v);
      pos = end + 1;
    }
    return from_unsorted(std::move(parts));
  }

 private:
  std::vector<unsigned> parts_;
};

/// All partitions of k in descending lexicographic order, e.g. k=3 gives
/// (3), (2,1), (1,1,1). k = 0 yields the single empty partition.
inline std::vector<IntegerPartition> integer_partitions(unsigned k) {
  std::vector<IntegerPartition> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

}  // namespace hirzebruch
