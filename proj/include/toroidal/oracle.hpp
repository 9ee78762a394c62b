#pragma once

// Brute-force cross-checks that share only raw data types with the engine.
//
// A point is modelled as the multiset of exponent columns (U_s, V_s), one per
// variable appearing in u or v; unit factors are dropped. Principality,
// centers and blowup children are read directly off the columns.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toroidal/exponent.hpp"
#include "toroidal/forms.hpp"
#include "toroidal/transform.hpp"

namespace toroidal {
struct Scenario;
}

namespace toroidal::oracle {

struct Column {
  Exponent u = 0;
  Exponent v = 0;
  friend bool operator==(const Column&, const Column&) = default;
  friend bool operator<(const Column& a, const Column& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

using Point = std::vector<Column>;

/// Sorted, without zero columns.
Point canonical(Point p);

/// Columns in variable order: x_1..x_k, then the free variable of F1 / the
/// second coordinate of F6..F8.
Point raw_point(const MonomialPresentation& p);
inline Point point_of(const MonomialPresentation& p) { return canonical(raw_point(p)); }

std::string to_string(const Point& p);

/// Whether (x^u, x^v [* z]) is principal, z a variable not in x.
bool oracle_principal(const ExponentRow& u, const ExponentRow& v, bool v_times_free = false);
bool principal(const Point& p);

/// Rank of the 2 x k matrix [u; v] from its 2 x 2 minors.
std::size_t oracle_rank(const ExponentRow& u, const ExponentRow& v);

/// (U_s - V_s)(V_t - U_t) with s, t oriented so that it is positive; 0 if the pair does not cross.
Exponent crossing_value(const Column& s, const Column& t);

/// Pairs s < t (0-based) of columns that cross.
std::vector<std::pair<std::size_t, std::size_t>> centers(const Point& p);

/// Blowup of x_s = x_t = 0: column s absorbs t; column t absorbs s; the merged
/// column alone (chart where the other coordinate is a unit). Not canonicalized.
std::array<Point, 3> children(const Point& p, std::size_t s, std::size_t t);

/// Raw column indices of an engine center; empty if it does not name two columns.
std::optional<std::pair<std::size_t, std::size_t>> center_columns(const MonomialPresentation& p,
                                                                  const Center& c);

struct SearchBound {
  std::size_t max_entry = 8;
  std::size_t max_k = 4;
  std::size_t max_depth = 32;
};

struct PathStep {
  Point point;
  std::size_t s = 0;
  std::size_t t = 0;
  /// 0, 1, 2 as in `children`.
  std::size_t child = 0;
};

struct RootResult {
  Point point;
  std::size_t min_depth = 0;
  std::size_t max_depth = 0;
};

/// Depths are tree heights: min over center strategies, and max over all
/// maximal chains of blowups.
struct SearchResult {
  bool all_terminate = true;
  std::size_t min_depth = 0;
  std::size_t max_depth = 0;
  std::size_t states = 0;
  std::vector<RootResult> roots;
  /// A chain realizing max_depth.
  std::vector<PathStep> longest_path;
};

class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, std::vector<PathStep> path)
      : std::runtime_error(what), path_(std::move(path)) {}
  const std::vector<PathStep>& path() const noexcept { return path_; }

 private:
  std::vector<PathStep> path_;
};

/// Depth bound of a single point. Throws BoundExceeded.
SearchResult exhaustive_search(const Point& root, std::size_t max_depth);

/// All active presentations of the scenario, roots searched in parallel.
/// Throws DomainError when the scenario is outside `b`, BoundExceeded past max_depth.
SearchResult exhaustive_search(const Scenario& s, const SearchBound& b);

}  // namespace toroidal::oracle
