#include "toroidal/oracle.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

#include "toroidal/error.hpp"
#include "toroidal/scenario.hpp"

namespace toroidal::oracle {

Point canonical(Point p) {
  std::erase_if(p, [](const Column& c) { return c.u == 0 && c.v == 0; });
  std::sort(p.begin(), p.end());
  return p;
}

Point raw_point(const MonomialPresentation& p) {
  Point out;
  const auto& a = p.u_row();
  const auto& b = p.v_row();
  switch (p.form()) {
    case FormTag::F1:
      for (std::size_t j = 0; j < a.size(); ++j) out.push_back({a[j], b[j]});
      out.push_back({0, 1});
      break;
    case FormTag::F2:
    case FormTag::F3:
    case FormTag::F5:
      for (std::size_t j = 0; j < a.size(); ++j) out.push_back({a[j], b[j]});
      break;
    case FormTag::F4:
      for (const auto& g : p.g_row()) out.push_back({g * p.m(), g * p.t()});
      break;
    case FormTag::F6:  // u = x_1, v = x_2
      out = {{1, 0}, {0, 1}};
      break;
    case FormTag::F7:  // u = x_1, v = x_1 (x_2 + alpha)
      out = {{1, 1}};
      if (!p.alpha_nonzero()) out.push_back({0, 1});
      break;
    case FormTag::F8:  // u = x_1 x_2, v = x_2
      out = {{1, 0}, {1, 1}};
      break;
  }
  return out;
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (s) os << ',';
    os << '(' << p[s].u << ',' << p[s].v << ')';
  }
  os << ']';
  return os.str();
}

bool oracle_principal(const ExponentRow& u, const ExponentRow& v, bool v_times_free) {
  // Monomials over x_1..x_k and z; the ideal is principal iff one generator divides the other.
  const std::size_t k = std::max(u.size(), v.size());
  std::vector<Exponent> gu(k + 1, 0);
  std::vector<Exponent> gv(k + 1, 0);
  for (std::size_t j = 0; j < u.size(); ++j) gu[j] = u[j];
  for (std::size_t j = 0; j < v.size(); ++j) gv[j] = v[j];
  gv[k] = v_times_free ? 1 : 0;
  auto divides = [&](const std::vector<Exponent>& x, const std::vector<Exponent>& y) {
    for (std::size_t j = 0; j <= k; ++j) {
      if (x[j] > y[j]) return false;
    }
    return true;
  };
  return divides(gu, gv) || divides(gv, gu);
}

bool principal(const Point& p) {
  bool u_divides = true;
  bool v_divides = true;
  for (const auto& c : p) {
    if (c.u > c.v) u_divides = false;
    if (c.v > c.u) v_divides = false;
  }
  return u_divides || v_divides;
}

std::size_t oracle_rank(const ExponentRow& u, const ExponentRow& v) {
  const std::size_t k = std::min(u.size(), v.size());
  bool nonzero = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (u[i] != 0 || v[i] != 0) nonzero = true;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return 2;
    }
  }
  return nonzero ? 1 : 0;
}

Exponent crossing_value(const Column& s, const Column& t) {
  if (s.u > s.v && t.v > t.u) return (s.u - s.v) * (t.v - t.u);
  if (s.v > s.u && t.u > t.v) return (s.v - s.u) * (t.u - t.v);
  return 0;
}

std::vector<std::pair<std::size_t, std::size_t>> centers(const Point& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < p.size(); ++s) {
    for (std::size_t t = s + 1; t < p.size(); ++t) {
      if (crossing_value(p[s], p[t]) > 0) out.emplace_back(s, t);
    }
  }
  return out;
}

std::array<Point, 3> children(const Point& p, std::size_t s, std::size_t t) {
  const Column sum{p[s].u + p[t].u, p[s].v + p[t].v};
  std::array<Point, 3> out{p, p, Point{}};
  out[0][s] = sum;
  out[1][t] = sum;
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (r == t) continue;
    out[2].push_back(r == s ? sum : p[r]);
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> center_columns(const MonomialPresentation& p,
                                                                  const Center& c) {
  const std::size_t width = raw_point(p).size();
  std::size_t s = 0;
  std::size_t t = 0;
  if (c.kind == CenterKind::VarVar) {
    s = c.i - 1;
    t = c.j - 1;
  } else if (p.form() == FormTag::F1) {
    s = c.i - 1;
    t = width - 1;
  } else if (p.form() == FormTag::F6 && c.i == 1) {
    s = 0;
    t = 1;
  } else {
    return std::nullopt;
  }
  if (c.i == 0 || s >= width || t >= width || s == t) return std::nullopt;
  return std::make_pair(s, t);
}

namespace {

struct Node {
  std::size_t min_depth = 0;
  std::size_t max_depth = 0;
  // Witness for max_depth.
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t child = 0;
};

class Searcher {
 public:
  explicit Searcher(std::size_t max_depth) : max_depth_(max_depth) {}

  const Node& visit(const Point& p, std::vector<PathStep>& stack) {
    if (auto it = memo_.find(p); it != memo_.end()) {
      check(p, it->second, stack);
      return it->second;
    }
    Node node;
    const auto cs = centers(p);
    if (!cs.empty()) {
      if (stack.size() >= max_depth_) {
        throw BoundExceeded("blowup chain longer than " + std::to_string(max_depth_), stack);
      }
      node.min_depth = SIZE_MAX;
      for (const auto& [s, t] : cs) {
        const auto kids = children(p, s, t);
        std::size_t worst_min = 0;
        for (std::size_t c = 0; c < kids.size(); ++c) {
          stack.push_back({p, s, t, c});
          const Node& kid = visit(canonical(kids[c]), stack);
          stack.pop_back();
          worst_min = std::max(worst_min, kid.min_depth + 1);
          if (kid.max_depth + 1 > node.max_depth) node = Node{node.min_depth, kid.max_depth + 1, s, t, c};
        }
        node.min_depth = std::min(node.min_depth, worst_min);
      }
    }
    return memo_.emplace(p, node).first->second;
  }

  std::vector<PathStep> witness(Point p) const {
    std::vector<PathStep> path;
    while (true) {
      const Node& node = memo_.at(p);
      if (node.max_depth == 0) break;
      path.push_back({p, node.s, node.t, node.child});
      p = canonical(children(p, node.s, node.t)[node.child]);
    }
    return path;
  }

  std::size_t states() const { return memo_.size(); }

 private:
  void check(const Point& p, const Node& node, const std::vector<PathStep>& stack) const {
    if (stack.size() + node.max_depth <= max_depth_) return;
    std::vector<PathStep> path = stack;
    auto rest = witness(p);
    path.insert(path.end(), rest.begin(), rest.end());
    throw BoundExceeded("blowup chain longer than " + std::to_string(max_depth_), path);
  }

  std::size_t max_depth_;
  std::map<Point, Node> memo_;
};

SearchResult search_root(const Point& root, std::size_t max_depth) {
  Searcher searcher(max_depth);
  std::vector<PathStep> stack;
  const Node node = searcher.visit(root, stack);
  SearchResult r;
  r.min_depth = node.min_depth;
  r.max_depth = node.max_depth;
  r.states = searcher.states();
  r.roots.push_back({root, node.min_depth, node.max_depth});
  r.longest_path = searcher.witness(root);
  return r;
}

}  // namespace

SearchResult exhaustive_search(const Point& root, std::size_t max_depth) {
  return search_root(canonical(root), max_depth);
}

SearchResult exhaustive_search(const Scenario& s, const SearchBound& b) {
  if (b.max_entry == 0 || b.max_k == 0 || b.max_depth == 0) {
    throw DomainError("search bounds must be positive");
  }
  std::vector<Point> roots;
  for (const auto& entry : s.presentations) {
    const Point p = point_of(entry.presentation);
    if (p.size() > b.max_k + 1) {
      throw DomainError("presentation " + std::to_string(entry.id) + " has more than " +
                        std::to_string(b.max_k) + " toroidal variables");
    }
    for (const auto& c : p) {
      if (c.u > b.max_entry || c.v > b.max_entry) {
        throw DomainError("presentation " + std::to_string(entry.id) + " has an exponent above " +
                          std::to_string(b.max_entry));
      }
    }
    roots.push_back(p);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  std::vector<std::future<SearchResult>> jobs;
  for (const auto& root : roots) {
    jobs.push_back(std::async(std::launch::async, search_root, root, b.max_depth));
  }
  SearchResult out;
  std::vector<BoundExceeded> failures;
  for (auto& job : jobs) {
    try {
      SearchResult r = job.get();
      out.states += r.states;
      out.min_depth = std::max(out.min_depth, r.min_depth);
      if (out.roots.empty() || r.max_depth > out.max_depth) {
        out.max_depth = r.max_depth;
        out.longest_path = r.longest_path;
      }
      out.roots.push_back(r.roots.front());
    } catch (const BoundExceeded& e) {
      failures.push_back(e);
    }
  }
  // Roots are sorted, so the first failure is deterministic.
  if (!failures.empty()) throw failures.front();
  return out;
}

}  // namespace toroidal::oracle
