#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toroidal {

/// Exponents are unbounded; blowups only ever add them.
using Exponent = boost::multiprecision::cpp_int;

/// Non-negative exponent vector over the toroidal variables x_1..x_k.
/// Indexing through operator[] is 0-based; `at(i)` uses the 1-based
/// variable numbering of the local coordinates.
class ExponentRow {
 public:
  ExponentRow() = default;
  explicit ExponentRow(std::vector<Exponent> entries);
  ExponentRow(std::initializer_list<long long> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Exponent& operator[](std::size_t idx) const { return entries_[idx]; }
  const Exponent& at(std::size_t var) const;
  const std::vector<Exponent>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool is_zero() const;

  friend bool operator==(const ExponentRow&, const ExponentRow&) = default;
  friend bool operator<(const ExponentRow& a, const ExponentRow& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Exponent> entries_;
};

/// a_i <= b_i for every i. Rows must have equal length.
bool dominated_by(const ExponentRow& a, const ExponentRow& b);

/// Componentwise a - b; throws DomainError if some entry would go negative.
ExponentRow difference(const ExponentRow& a, const ExponentRow& b);

Exponent gcd_of(const ExponentRow& row);

std::string to_string(const ExponentRow& row);
std::ostream& operator<<(std::ostream& os, const ExponentRow& row);

}  // namespace toroidal
