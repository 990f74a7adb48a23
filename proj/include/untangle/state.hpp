#pragma once

// Matching / spanning-tree state, crossing enumeration, and flip semantics.
//
// A flip removes two crossing edges and re-pairs their four endpoints with
// two non-crossing edges.  A monochromatic matching crossing admits both
// re-pairings, a bichromatic crossing exactly the color-respecting one, and
// a tree crossing exactly the one that keeps the graph connected and acyclic.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "untangle/core.hpp"

namespace untangle {

struct Edge {
  int a = -1;
  int b = -1;

  Edge() = default;
  Edge(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {}

  bool touches(int v) const { return a == v || b == v; }
  int other(int v) const { return a == v ? b : a; }
  bool shares_vertex(const Edge& o) const {
    return touches(o.a) || touches(o.b);
  }
  friend bool operator==(const Edge& x, const Edge& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Edge& x, const Edge& y) { return !(x == y); }
  friend bool operator<(const Edge& x, const Edge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

using PointSetPtr = std::shared_ptr<const PointSet>;

struct Matching {
  PointSetPtr ps;
  std::vector<Edge> pairs;  // kept sorted
  bool chromatic = false;

  const PointSet& points() const { return *ps; }
  int n() const { return ps->n(); }
  bool has_edge(const Edge& e) const {
    return std::binary_search(pairs.begin(), pairs.end(), e);
  }
  int partner(int v) const {
    for (const Edge& e : pairs)
      if (e.touches(v)) return e.other(v);
    fail(Errc::InvalidInstance, "partner: vertex unmatched");
  }
};

struct SpanningTree {
  PointSetPtr ps;
  std::vector<Edge> edges;  // kept sorted

  const PointSet& points() const { return *ps; }
  int n() const { return ps->n(); }
  bool has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }
  int degree(int v) const {
    int d = 0;
    for (const Edge& e : edges)
      if (e.touches(v)) ++d;
    return d;
  }
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const Edge& e : edges)
      if (e.touches(v)) out.push_back(e.other(v));
    return out;
  }
};

namespace detail {

inline void sort_edges(std::vector<Edge>& es) { std::sort(es.begin(), es.end()); }

inline bool connected_acyclic(int n, const std::vector<Edge>& es) {
  if (int(es.size()) != n - 1) return false;
  std::vector<int> parent(std::size_t(n));
  for (int i = 0; i < n; ++i) parent[std::size_t(i)] = i;
  auto find = [&](int v) {
    while (parent[std::size_t(v)] != v) {
      parent[std::size_t(v)] = parent[std::size_t(parent[std::size_t(v)])];
      v = parent[std::size_t(v)];
    }
    return v;
  };
  for (const Edge& e : es) {
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) return false;
    parent[std::size_t(ra)] = rb;
  }
  return true;
}

}  // namespace detail

inline Matching make_matching(PointSetPtr ps, std::vector<Edge> pairs, bool chromatic) {
  require(ps != nullptr, Errc::InvalidInstance, "matching: null point set");
  int n = ps->n();
  require(n % 2 == 0, Errc::InvalidInstance, "matching: n must be even");
  require(int(pairs.size()) == n / 2, Errc::InvalidInstance, "matching: wrong edge count");
  std::vector<char> seen(std::size_t(n), 0);
  for (const Edge& e : pairs) {
    require(e.a >= 0 && e.b < n && e.a != e.b, Errc::InvalidInstance, "matching: bad edge");
    require(!seen[std::size_t(e.a)] && !seen[std::size_t(e.b)], Errc::InvalidInstance,
            "matching: vertex matched twice");
    seen[std::size_t(e.a)] = seen[std::size_t(e.b)] = 1;
    if (chromatic) {
      Color ca = (*ps)[e.a].color, cb = (*ps)[e.b].color;
      bool ok = (ca == Color::Red && cb == Color::Blue) || (ca == Color::Blue && cb == Color::Red);
      require(ok, Errc::ColorConstraint, "matching: edge must join red and blue");
    }
  }
  detail::sort_edges(pairs);
  return Matching{std::move(ps), std::move(pairs), chromatic};
}

inline SpanningTree make_spanning_tree(PointSetPtr ps, std::vector<Edge> edges) {
  require(ps != nullptr, Errc::InvalidInstance, "tree: null point set");
  int n = ps->n();
  for (const Edge& e : edges)
    require(e.a >= 0 && e.b < n && e.a != e.b, Errc::InvalidInstance, "tree: bad edge");
  require(detail::connected_acyclic(n, edges), Errc::InvalidInstance,
          "tree: must be connected and acyclic with n-1 edges");
  detail::sort_edges(edges);
  return SpanningTree{std::move(ps), std::move(edges)};
}

inline const std::vector<Edge>& edges_of(const Matching& m) { return m.pairs; }
inline const std::vector<Edge>& edges_of(const SpanningTree& t) { return t.edges; }

struct CrossingPair {
  Edge e1, e2;  // e1 < e2
  friend bool operator<(const CrossingPair& x, const CrossingPair& y) {
    return x.e1 != y.e1 ? x.e1 < y.e1 : x.e2 < y.e2;
  }
  friend bool operator==(const CrossingPair& x, const CrossingPair& y) {
    return x.e1 == y.e1 && x.e2 == y.e2;
  }
};

inline bool edges_cross(const PointSet& ps, const Edge& e, const Edge& f) {
  if (e.shares_vertex(f)) return false;
  return segments_cross(ps[e.a], ps[e.b], ps[f.a], ps[f.b]);
}

// All crossing pairs of vertex-disjoint edges, in lexicographic order.
template <class State>
std::vector<CrossingPair> crossings(const State& s) {
  const auto& es = edges_of(s);
  std::vector<CrossingPair> out;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (edges_cross(s.points(), es[i], es[j])) out.push_back({es[i], es[j]});
  return out;
}

template <class State>
bool is_plane(const State& s) {
  const auto& es = edges_of(s);
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (edges_cross(s.points(), es[i], es[j])) return false;
  return true;
}

template <class State>
double weight(const State& s) {
  double w = 0;
  for (const Edge& e : edges_of(s)) w += distance(s.points()[e.a], s.points()[e.b]);
  return w;
}

struct FlipCandidate {
  Edge add1, add2;  // add1 < add2
  FlipCandidate() = default;
  FlipCandidate(Edge x, Edge y) : add1(std::min(x, y)), add2(std::max(x, y)) {}
  friend bool operator==(const FlipCandidate& a, const FlipCandidate& b) {
    return a.add1 == b.add1 && a.add2 == b.add2;
  }
  friend bool operator<(const FlipCandidate& a, const FlipCandidate& b) {
    return a.add1 != b.add1 ? a.add1 < b.add1 : a.add2 < b.add2;
  }
};

// Re-pairings available for a crossing in a matching: both for monochromatic,
// the single color-respecting one for bichromatic.
inline std::vector<FlipCandidate> flip_candidates_matching(const Matching& m, const Edge& e1,
                                                           const Edge& e2) {
  require(!e1.shares_vertex(e2), Errc::SharedEndpoint, "flip: edges share an endpoint");
  require(edges_cross(m.points(), e1, e2), Errc::NotCrossing, "flip: edges do not cross");
  std::vector<FlipCandidate> out;
  if (!m.chromatic) {
    out.emplace_back(Edge(e1.a, e2.a), Edge(e1.b, e2.b));
    out.emplace_back(Edge(e1.a, e2.b), Edge(e1.b, e2.a));
    std::sort(out.begin(), out.end());
  } else {
    const PointSet& ps = m.points();
    int r1 = ps[e1.a].color == Color::Red ? e1.a : e1.b;
    int b1 = e1.other(r1);
    int r2 = ps[e2.a].color == Color::Red ? e2.a : e2.b;
    int b2 = e2.other(r2);
    out.emplace_back(Edge(r1, b2), Edge(r2, b1));
  }
  return out;
}

// The unique re-pairing that keeps a tree connected and acyclic.
inline FlipCandidate flip_candidate_tree(const SpanningTree& t, const Edge& e1, const Edge& e2) {
  require(!e1.shares_vertex(e2), Errc::SharedEndpoint, "tree flip: edges share an endpoint");
  require(edges_cross(t.points(), e1, e2), Errc::NotCrossing, "tree flip: edges do not cross");
  std::array<FlipCandidate, 2> cands = {
      FlipCandidate(Edge(e1.a, e2.a), Edge(e1.b, e2.b)),
      FlipCandidate(Edge(e1.a, e2.b), Edge(e1.b, e2.a)),
  };
  std::vector<Edge> base;
  base.reserve(t.edges.size());
  for (const Edge& e : t.edges)
    if (e != e1 && e != e2) base.push_back(e);
  std::optional<FlipCandidate> valid;
  for (const FlipCandidate& c : cands) {
    std::vector<Edge> trial = base;
    trial.push_back(c.add1);
    trial.push_back(c.add2);
    if (detail::connected_acyclic(t.n(), trial)) {
      require(!valid.has_value(), Errc::Internal, "tree flip: both re-pairings valid");
      valid = c;
    }
  }
  require(valid.has_value(), Errc::Internal, "tree flip: no valid re-pairing");
  return *valid;
}

struct FlipStep {
  Edge removed1, removed2;  // removed1 < removed2
  Edge added1, added2;      // added1 < added2
  RationalPoint crossing;
  std::string rule;
  double w_before = 0, w_after = 0;
  int crossings_before = 0, crossings_after = 0;
};

// Tree-engine bookkeeping events; matching traces contain only flips.
struct ContractEvent {
  int u = -1, v = -1;  // u contracted into v
};
struct ReinsertEvent {
  int u = -1, v = -1;
};

using TraceEvent = std::variant<FlipStep, ContractEvent, ReinsertEvent>;

template <class State>
struct Trace {
  State initial;
  State result;
  std::vector<TraceEvent> events;

  int flip_count() const {
    int k = 0;
    for (const TraceEvent& ev : events)
      if (std::holds_alternative<FlipStep>(ev)) ++k;
    return k;
  }
  std::vector<const FlipStep*> steps() const {
    std::vector<const FlipStep*> out;
    for (const TraceEvent& ev : events)
      if (const FlipStep* s = std::get_if<FlipStep>(&ev)) out.push_back(s);
    return out;
  }
};

namespace detail {

inline void swap_edges(std::vector<Edge>& es, const Edge& r1, const Edge& r2, const Edge& a1,
                       const Edge& a2) {
  auto erase_one = [&](const Edge& e) {
    auto it = std::lower_bound(es.begin(), es.end(), e);
    require(it != es.end() && *it == e, Errc::IllegalFlip, "flip: removed edge not present");
    es.erase(it);
  };
  erase_one(r1);
  erase_one(r2);
  es.push_back(a1);
  es.push_back(a2);
  sort_edges(es);
}

inline bool same_four_endpoints(const Edge& r1, const Edge& r2, const Edge& a1, const Edge& a2) {
  std::array<int, 4> u = {r1.a, r1.b, r2.a, r2.b};
  std::array<int, 4> v = {a1.a, a1.b, a2.a, a2.b};
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  return u == v;
}

}  // namespace detail

inline Matching apply_flip(const Matching& m, const FlipStep& step) {
  require(m.has_edge(step.removed1) && m.has_edge(step.removed2), Errc::IllegalFlip,
          "flip: removed edges must be present");
  require(detail::same_four_endpoints(step.removed1, step.removed2, step.added1, step.added2),
          Errc::IllegalFlip, "flip: added edges must re-pair the removed endpoints");
  auto cands = flip_candidates_matching(m, step.removed1, step.removed2);
  FlipCandidate chosen(step.added1, step.added2);
  bool legal = false;
  for (const auto& c : cands) legal = legal || (c == chosen);
  require(legal, Errc::IllegalFlip, "flip: added edges are not a legal candidate");
  Matching out = m;
  detail::swap_edges(out.pairs, step.removed1, step.removed2, step.added1, step.added2);
  return out;
}

inline SpanningTree apply_flip(const SpanningTree& t, const FlipStep& step) {
  require(t.has_edge(step.removed1) && t.has_edge(step.removed2), Errc::IllegalFlip,
          "flip: removed edges must be present");
  require(detail::same_four_endpoints(step.removed1, step.removed2, step.added1, step.added2),
          Errc::IllegalFlip, "flip: added edges must re-pair the removed endpoints");
  FlipCandidate unique = flip_candidate_tree(t, step.removed1, step.removed2);
  require(unique == FlipCandidate(step.added1, step.added2), Errc::IllegalFlip,
          "flip: added edges are not the tree re-pairing");
  SpanningTree out = t;
  detail::swap_edges(out.edges, step.removed1, step.removed2, step.added1, step.added2);
  return out;
}

// Builds a fully annotated step and applies it.  Engines use this so every
// recorded step is validated at construction time.
template <class State>
State apply_and_record(const State& s, Edge r1, Edge r2, Edge a1, Edge a2, std::string rule,
                       std::vector<TraceEvent>* events) {
  FlipStep step;
  step.removed1 = std::min(r1, r2);
  step.removed2 = std::max(r1, r2);
  step.added1 = std::min(a1, a2);
  step.added2 = std::max(a1, a2);
  step.crossing =
      intersection_point(s.points()[r1.a], s.points()[r1.b], s.points()[r2.a], s.points()[r2.b]);
  step.rule = std::move(rule);
  step.w_before = weight(s);
  step.crossings_before = int(crossings(s).size());
  State out = apply_flip(s, step);
  step.w_after = weight(out);
  step.crossings_after = int(crossings(out).size());
  require(step.w_after < step.w_before, Errc::Internal, "flip did not decrease weight");
  if (events) events->push_back(step);
  return out;
}

// Replays a matching trace, re-checking legality and strict weight decrease.
inline void validate_trace(const Trace<Matching>& tr) {
  Matching cur = tr.initial;
  for (const TraceEvent& ev : tr.events) {
    const FlipStep* s = std::get_if<FlipStep>(&ev);
    require(s != nullptr, Errc::InvalidInstance, "matching trace: only flip events allowed");
    Matching next = apply_flip(cur, *s);
    require(weight(next) < weight(cur), Errc::InvalidInstance, "trace: weight must decrease");
    cur = std::move(next);
  }
  require(cur.pairs == tr.result.pairs, Errc::InvalidInstance, "trace: result mismatch");
  require(is_plane(cur), Errc::InvalidInstance, "trace: final state must be plane");
}

}  // namespace untangle
