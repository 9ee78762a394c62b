#include "toroidal/exponent.hpp"

#include <sstream>

#include "toroidal/error.hpp"

namespace toroidal {

ExponentRow::ExponentRow(std::vector<Exponent> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e < 0) throw ValidationError("exponent entries must be non-negative");
  }
}

ExponentRow::ExponentRow(std::initializer_list<long long> entries) {
  entries_.reserve(entries.size());
  for (long long e : entries) {
    if (e < 0) throw ValidationError("exponent entries must be non-negative");
    entries_.emplace_back(e);
  }
}

const Exponent& ExponentRow::at(std::size_t var) const {
  if (var == 0 || var > entries_.size()) {
    throw DomainError("variable index " + std::to_string(var) + " out of range 1.." +
                      std::to_string(entries_.size()));
  }
  return entries_[var - 1];
}

bool ExponentRow::is_zero() const {
  for (const auto& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

bool dominated_by(const ExponentRow& a, const ExponentRow& b) {
  if (a.size() != b.size()) throw DomainError("row length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

ExponentRow difference(const ExponentRow& a, const ExponentRow& b) {
  if (a.size() != b.size()) throw DomainError("row length mismatch");
  std::vector<Exponent> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) throw DomainError("exponent difference would be negative");
    out.push_back(a[i] - b[i]);
  }
  return ExponentRow(std::move(out));
}

Exponent gcd_of(const ExponentRow& row) {
  Exponent g = 0;
  for (const auto& e : row) g = boost::multiprecision::gcd(g, e);
  return g;
}

std::string to_string(const ExponentRow& row) {
  std::ostringstream os;
  os << row;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExponentRow& row) {
  os << '(';
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ',';
    os << row[i];
  }
  return os << ')';
}

}  // namespace toroidal
