#pragma once

// Seeded instance generators (convex, jittered grid, semi-collinear point
// sets; random matchings and spanning trees) plus exhaustive enumerators for
// the small sizes the oracle can handle.  All entropy comes from the explicit
// seed; draws use rejection sampling so results are stable across platforms.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "untangle/core.hpp"
#include "untangle/state.hpp"

namespace untangle {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform integer in [0, n).
  int below(int n) {
    std::uint64_t bound = std::uint64_t(n);
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
      std::uint64_t r = eng_();
      if (r < limit) return int(r % bound);
    }
  }

  Coord range(Coord lo, Coord hi) { return lo + Coord(below(int(hi - lo + 1))); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = int(v.size()) - 1; i > 0; --i) std::swap(v[std::size_t(i)], v[std::size_t(below(i + 1))]);
  }

 private:
  std::mt19937_64 eng_;
};

namespace detail {

// Clockwise comparator around the origin for points sampled on a circle.
inline bool cw_before(const Point& p, const Point& q) {
  auto half = [](const Point& a) { return (a.y > 0 || (a.y == 0 && a.x > 0)) ? 0 : 1; };
  int hp = half(p), hq = half(q);
  if (hp != hq) return hp < hq;
  std::int64_t c = p.x * q.y - p.y * q.x;
  return c < 0;  // p strictly clockwise of q within the half
}

inline bool any_collinear_triple(const std::vector<Point>& pts, bool skip_all_blue) {
  int n = int(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (skip_all_blue && pts[i].color == Color::Blue && pts[j].color == Color::Blue &&
            pts[k].color == Color::Blue)
          continue;
        if (collinear(pts[i], pts[j], pts[k])) return true;
      }
  return false;
}

}  // namespace detail

// n integer points in strictly convex position, clockwise.
inline PointSet gen_convex(int n, std::uint64_t seed) {
  require(n >= 3, Errc::InvalidInstance, "gen_convex: n >= 3");
  Rng rng(seed);
  const double radius = 400000.0;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Point> pts;
    pts.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) {
      double ang = 2.0 * 3.14159265358979323846 * (double(rng.below(1 << 30)) / double(1 << 30));
      Point p;
      p.x = Coord(std::llround(radius * std::cos(ang)));
      p.y = Coord(std::llround(radius * std::sin(ang)));
      pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(), detail::cw_before);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) ok = !same_coords(pts[std::size_t(i)], pts[std::size_t(j)]);
    for (int i = 0; i < n && ok; ++i) {
      const Point& a = pts[std::size_t(i)];
      const Point& b = pts[std::size_t((i + 1) % n)];
      const Point& c = pts[std::size_t((i + 2) % n)];
      ok = orientation(a, b, c) == Orient::Clockwise;
    }
    if (!ok) continue;
    return make_point_set(std::move(pts), PositionClass::Convex);
  }
  fail(Errc::Internal, "gen_convex: could not realize a convex set");
}

// k x k grid, scale 64, jitter <= 8 per coordinate (= scale/8), re-jittering
// single points until no three are collinear.  Spread is Theta(sqrt(n)).
inline PointSet gen_grid(int k, std::uint64_t jitter_seed) {
  require(k >= 2, Errc::InvalidInstance, "gen_grid: k >= 2");
  Rng rng(jitter_seed);
  const Coord scale = 64, jitter = 8;
  std::vector<Point> pts;
  pts.reserve(std::size_t(k) * std::size_t(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Point p;
      p.x = scale * i + rng.range(-jitter, jitter);
      p.y = scale * j + rng.range(-jitter, jitter);
      pts.push_back(p);
    }
  int n = int(pts.size());
  for (int round = 0; round < 100000; ++round) {
    bool clean = true;
    for (int i = 0; i < n && clean; ++i)
      for (int j = i + 1; j < n && clean; ++j)
        for (int l = j + 1; l < n && clean; ++l)
          if (collinear(pts[std::size_t(i)], pts[std::size_t(j)], pts[std::size_t(l)])) {
            int cell = l;
            pts[std::size_t(cell)].x = scale * (cell / k) + rng.range(-jitter, jitter);
            pts[std::size_t(cell)].y = scale * (cell % k) + rng.range(-jitter, jitter);
            clean = false;
          }
    if (clean) return make_point_set(std::move(pts), PositionClass::General);
  }
  fail(Errc::Internal, "gen_grid: could not break collinearities");
}

// n/2 blue points on y=0 with distinct x, n/2 red points strictly above.
inline PointSet gen_semi_collinear(int n, std::uint64_t seed) {
  require(n >= 2 && n % 2 == 0, Errc::InvalidInstance, "gen_semi_collinear: even n >= 2");
  Rng rng(seed);
  const Coord span_x = 8 * Coord(n) + 8, span_y = 4 * Coord(n) + 4;
  std::vector<Point> pts;
  std::vector<char> used_x(std::size_t(span_x) + 1, 0);
  for (int i = 0; i < n / 2; ++i) {
    Coord x;
    do {
      x = rng.range(0, span_x);
    } while (used_x[std::size_t(x)]);
    used_x[std::size_t(x)] = 1;
    pts.push_back(Point{-1, x, 0, Color::Blue});
  }
  for (int i = 0; i < n / 2; ++i)
    pts.push_back(Point{-1, rng.range(0, span_x), rng.range(1, span_y), Color::Red});
  for (int round = 0; round < 100000; ++round) {
    bool clean = true;
    int m = int(pts.size());
    for (int i = 0; i < m && clean; ++i)
      for (int j = i + 1; j < m && clean; ++j)
        for (int l = j + 1; l < m && clean; ++l) {
          bool all_blue = pts[std::size_t(i)].color == Color::Blue &&
                          pts[std::size_t(j)].color == Color::Blue &&
                          pts[std::size_t(l)].color == Color::Blue;
          if (all_blue) continue;
          if (collinear(pts[std::size_t(i)], pts[std::size_t(j)], pts[std::size_t(l)])) {
            // at least one of the three is red; resample the last red one
            int fix = pts[std::size_t(l)].color == Color::Red ? l
                      : pts[std::size_t(j)].color == Color::Red ? j
                                                                : i;
            pts[std::size_t(fix)].x = rng.range(0, span_x);
            pts[std::size_t(fix)].y = rng.range(1, span_y);
            clean = false;
          }
        }
    if (clean) return make_point_set(std::move(pts), PositionClass::SemiCollinear);
  }
  fail(Errc::Internal, "gen_semi_collinear: could not break collinearities");
}

// Uniform random perfect matching; color-respecting when chromatic.
inline Matching gen_random_matching(PointSetPtr ps, std::uint64_t seed, bool chromatic) {
  Rng rng(seed);
  int n = ps->n();
  require(n % 2 == 0, Errc::InvalidInstance, "gen_random_matching: even n");
  std::vector<Edge> pairs;
  if (!chromatic) {
    std::vector<int> free;
    for (int i = 0; i < n; ++i) free.push_back(i);
    while (!free.empty()) {
      int a = free.front();
      free.erase(free.begin());
      int pick = rng.below(int(free.size()));
      int b = free[std::size_t(pick)];
      free.erase(free.begin() + pick);
      pairs.emplace_back(a, b);
    }
  } else {
    std::vector<int> reds, blues;
    for (int i = 0; i < n; ++i)
      ((*ps)[i].color == Color::Red ? reds : blues).push_back(i);
    require(int(reds.size()) == int(blues.size()), Errc::ColorCountMismatch,
            "gen_random_matching: need equal color counts");
    rng.shuffle(blues);
    for (std::size_t i = 0; i < reds.size(); ++i) pairs.emplace_back(reds[i], blues[i]);
  }
  return make_matching(std::move(ps), std::move(pairs), chromatic);
}

namespace detail {

inline std::vector<Edge> prufer_decode(const std::vector<int>& code, int n) {
  std::vector<int> degree(std::size_t(n), 1);
  for (int v : code) degree[std::size_t(v)]++;
  std::vector<Edge> edges;
  std::vector<char> used(std::size_t(n), 0);
  int leaf = -1;
  for (int i = 0; i < n; ++i)
    if (degree[std::size_t(i)] == 1) {
      leaf = i;
      break;
    }
  int ptr = leaf;
  for (int v : code) {
    edges.emplace_back(leaf, v);
    if (--degree[std::size_t(v)] == 1 && v < ptr) {
      leaf = v;
    } else {
      do {
        ++ptr;
      } while (degree[std::size_t(ptr)] != 1);
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

}  // namespace detail

// Uniform random labeled spanning tree (random Prufer sequence).
inline SpanningTree gen_random_tree(PointSetPtr ps, std::uint64_t seed) {
  Rng rng(seed);
  int n = ps->n();
  require(n >= 2, Errc::InvalidInstance, "gen_random_tree: n >= 2");
  if (n == 2) return make_spanning_tree(std::move(ps), {Edge(0, 1)});
  std::vector<int> code;
  for (int i = 0; i < n - 2; ++i) code.push_back(rng.below(n));
  return make_spanning_tree(std::move(ps), detail::prufer_decode(code, n));
}

// ---- exhaustive enumeration (oracle-sized instances) ----

// All perfect matchings on {0..n-1}, lexicographic by construction.
inline void enumerate_perfect_matchings(int n, const std::function<void(const std::vector<Edge>&)>& visit) {
  std::vector<Edge> acc;
  std::vector<char> used(std::size_t(n), 0);
  std::function<void()> rec = [&]() {
    int a = -1;
    for (int i = 0; i < n; ++i)
      if (!used[std::size_t(i)]) {
        a = i;
        break;
      }
    if (a < 0) {
      visit(acc);
      return;
    }
    used[std::size_t(a)] = 1;
    for (int b = a + 1; b < n; ++b) {
      if (used[std::size_t(b)]) continue;
      used[std::size_t(b)] = 1;
      acc.emplace_back(a, b);
      rec();
      acc.pop_back();
      used[std::size_t(b)] = 0;
    }
    used[std::size_t(a)] = 0;
  };
  rec();
}

// All color-respecting perfect matchings: bijections reds -> blues.
inline void enumerate_bichromatic_matchings(const PointSet& ps,
                                            const std::function<void(const std::vector<Edge>&)>& visit) {
  std::vector<int> reds, blues;
  for (int i = 0; i < ps.n(); ++i) ((ps)[i].color == Color::Red ? reds : blues).push_back(i);
  require(reds.size() == blues.size(), Errc::ColorCountMismatch,
          "enumerate_bichromatic_matchings: unbalanced colors");
  std::vector<int> perm = blues;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < reds.size(); ++i) pairs.emplace_back(reds[i], perm[i]);
    visit(pairs);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// All labeled trees on n vertices via Prufer codes (n^(n-2) of them).
inline void enumerate_labeled_trees(int n, const std::function<void(const std::vector<Edge>&)>& visit) {
  require(n >= 2, Errc::TooLarge, "enumerate_labeled_trees: n >= 2");
  if (n == 2) {
    visit({Edge(0, 1)});
    return;
  }
  std::vector<int> code(std::size_t(n - 2), 0);
  for (;;) {
    visit(detail::prufer_decode(code, n));
    int i = n - 3;
    while (i >= 0 && code[std::size_t(i)] == n - 1) code[std::size_t(i--)] = 0;
    if (i < 0) break;
    code[std::size_t(i)]++;
  }
}

// All balanced red/blue colorings of n points (n choose n/2).
inline void enumerate_balanced_colorings(int n, const std::function<void(const std::vector<Color>&)>& visit) {
  std::vector<Color> colors(std::size_t(n), Color::Blue);
  std::function<void(int, int)> rec = [&](int idx, int reds_left) {
    if (reds_left == 0) {
      visit(colors);
      return;
    }
    if (n - idx < reds_left) return;
    colors[std::size_t(idx)] = Color::Red;
    rec(idx + 1, reds_left - 1);
    colors[std::size_t(idx)] = Color::Blue;
    rec(idx + 1, reds_left);
  };
  rec(0, n / 2);
}

}  // namespace untangle
