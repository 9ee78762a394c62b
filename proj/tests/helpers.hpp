#pragma once

#include <functional>
#include <vector>

#include "toroidal/exponent.hpp"

namespace testing {

/// Calls f(row) for every row of length k with entries in [lo, hi].
inline void for_each_row(std::size_t k, long lo, long hi, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> row(k, lo);
  while (true) {
    f(row);
    std::size_t i = 0;
    while (i < k && row[i] == hi) row[i++] = lo;
    if (i == k) return;
    ++row[i];
  }
}

inline toroidal::ExponentRow to_row(const std::vector<long>& v) {
  std::vector<toroidal::Exponent> out(v.begin(), v.end());
  return toroidal::ExponentRow(std::move(out));
}

}  // namespace testing
