#pragma once

// Bernoulli numbers.
//
// bernoulli_standard(n) is the usual signed B_n with B_1 = -1/2, computed from
// sum_{j=0}^{n} C(n+1, j) B_j = 0. bernoulli(k) exposes Hirzebruch's unsigned
// convention B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ..., i.e. |B_{2k}|.

#include "rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace hirzebruch {

inline Rational bernoulli_standard(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table[j];
    table.push_back(-acc / Rational(m + 1));
  }
  return table[n];
}

inline Rational bernoulli(unsigned k) {
  if (k == 0) throw std::invalid_argument("bernoulli: index starts at 1 (B_1 = 1/6)");
  return abs(bernoulli_standard(2 * k));
}

}  // namespace hirzebruch
