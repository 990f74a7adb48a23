#pragma once

// Exact planar geometry kernel: integer points, sign-exact predicates, and
// the point-set measures (spread, chord depth) used by the flip engines.
//
// All control-flow decisions are made on integer or rational arithmetic with
// enough bits to be exact; floating point appears only in reported values.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace untangle {

using Coord = std::int64_t;
using Int128 = __int128;
using Int256 = boost::multiprecision::int256_t;

// Coordinates are capped so every derived quantity (including dot products at
// rational segment intersections) fits the fixed-width integer types used by
// the predicates.
inline constexpr Coord kCoordLimit = Coord{1} << 20;

enum class Errc {
  DegenerateInput,
  NoCrossing,
  DuplicatePoints,
  NotCrossing,
  SharedEndpoint,
  IllegalFlip,
  PositionClassMismatch,
  ColorConstraint,
  ColorCountMismatch,
  NotDoubleStar,
  PreconditionViolated,
  TooLarge,
  BoundViolation,
  InvalidInstance,
  IoError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

enum class Color : std::uint8_t { None, Red, Blue };

enum class Orient { Clockwise, CounterClockwise, Collinear };

enum class PositionClass { General, Convex, SemiCollinear };

inline std::string to_string(PositionClass c) {
  switch (c) {
    case PositionClass::General: return "general";
    case PositionClass::Convex: return "convex";
    case PositionClass::SemiCollinear: return "semicollinear";
  }
  return "?";
}

struct Point {
  int id = -1;
  Coord x = 0;
  Coord y = 0;
  Color color = Color::None;
};

inline Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

inline Int128 gcd128(Int128 a, Int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::string to_string128(Int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  Int128 a = neg ? -v : v;
  std::string s;
  while (a > 0) {
    s.push_back(char('0' + int(a % 10)));
    a /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

// cross((b-a),(c-a)); fits in 64 bits for capped coordinates.
inline std::int64_t cross_value(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline Orient orientation(const Point& a, const Point& b, const Point& c) {
  std::int64_t v = cross_value(a, b, c);
  if (v > 0) return Orient::CounterClockwise;
  if (v < 0) return Orient::Clockwise;
  return Orient::Collinear;
}

inline bool collinear(const Point& a, const Point& b, const Point& c) {
  return cross_value(a, b, c) == 0;
}

inline bool same_coords(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

// p assumed collinear with ab: true iff p lies in the closed box of ab.
inline bool within_segment_box(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Proper interior crossing of segments ab and cd.  Segments that share an
// endpoint never cross; a point of one segment lying on the other segment is
// a degenerate contact and reported as an error rather than guessed at.
inline bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (same_coords(a, c) || same_coords(a, d) || same_coords(b, c) || same_coords(b, d))
    return false;
  std::int64_t o1 = cross_value(a, b, c);
  std::int64_t o2 = cross_value(a, b, d);
  std::int64_t o3 = cross_value(c, d, a);
  std::int64_t o4 = cross_value(c, d, b);
  if (o1 == 0 && within_segment_box(a, b, c))
    fail(Errc::DegenerateInput, "segments_cross: endpoint on segment");
  if (o2 == 0 && within_segment_box(a, b, d))
    fail(Errc::DegenerateInput, "segments_cross: endpoint on segment");
  if (o3 == 0 && within_segment_box(c, d, a))
    fail(Errc::DegenerateInput, "segments_cross: endpoint on segment");
  if (o4 == 0 && within_segment_box(c, d, b))
    fail(Errc::DegenerateInput, "segments_cross: endpoint on segment");
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return false;
  return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0));
}

// Exact rational point (nx/den, ny/den), den > 0, gcd-reduced.
struct RationalPoint {
  Int128 nx = 0;
  Int128 ny = 0;
  Int128 den = 1;

  static RationalPoint from_point(const Point& p) { return {p.x, p.y, 1}; }

  void normalize() {
    if (den < 0) {
      den = -den;
      nx = -nx;
      ny = -ny;
    }
    Int128 g = gcd128(gcd128(nx, ny), den);
    if (g > 1) {
      nx /= g;
      ny /= g;
      den /= g;
    }
  }

  double x() const { return double(nx) / double(den); }
  double y() const { return double(ny) / double(den); }

  std::string str() const {
    return to_string128(nx) + "/" + to_string128(den) + " " + to_string128(ny) + "/" +
           to_string128(den);
  }

  bool operator==(const RationalPoint& o) const {
    return nx == o.nx && ny == o.ny && den == o.den;
  }
};

// Intersection point of the crossing segments ab and cd.
inline RationalPoint intersection_point(const Point& a, const Point& b, const Point& c,
                                        const Point& d) {
  if (!segments_cross(a, b, c, d)) fail(Errc::NoCrossing, "intersection_point: segments do not cross");
  // a + t*(b-a) = c + u*(d-c); t = cross(c-a, d-c) / cross(b-a, d-c)
  Int128 denom = Int128(b.x - a.x) * (d.y - c.y) - Int128(b.y - a.y) * (d.x - c.x);
  Int128 tnum = Int128(c.x - a.x) * (d.y - c.y) - Int128(c.y - a.y) * (d.x - c.x);
  RationalPoint o;
  o.nx = Int128(a.x) * denom + tnum * (b.x - a.x);
  o.ny = Int128(a.y) * denom + tnum * (b.y - a.y);
  o.den = denom;
  o.normalize();
  return o;
}

// True iff the angle r-o-q is at most pi/2, i.e. dot(r-o, q-o) >= 0,
// evaluated exactly over the rationals.
inline bool angle_at_most_right(const RationalPoint& o, const Point& r, const Point& q) {
  Int256 d(o.den);
  Int256 ax = Int256(r.x) * d - Int256(o.nx);
  Int256 ay = Int256(r.y) * d - Int256(o.ny);
  Int256 bx = Int256(q.x) * d - Int256(o.nx);
  Int256 by = Int256(q.y) * d - Int256(o.ny);
  return ax * bx + ay * by >= 0;
}

inline std::int64_t dist2(const Point& p, const Point& q) {
  std::int64_t dx = p.x - q.x;
  std::int64_t dy = p.y - q.y;
  return dx * dx + dy * dy;
}

inline double distance(const Point& p, const Point& q) {
  return std::sqrt(double(dist2(p, q)));
}

inline std::int64_t min_pairwise_dist2(const std::vector<Point>& pts) {
  require(pts.size() >= 2, Errc::InvalidInstance, "min_pairwise_dist2: need at least 2 points");
  std::int64_t best = dist2(pts[0], pts[1]);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, dist2(pts[i], pts[j]));
  return best;
}

inline double min_pairwise_distance(const std::vector<Point>& pts) {
  return std::sqrt(double(min_pairwise_dist2(pts)));
}

struct PointSet {
  std::vector<Point> pts;
  PositionClass cls = PositionClass::General;

  int n() const { return int(pts.size()); }
  const Point& operator[](int i) const { return pts[std::size_t(i)]; }

  // y of the blue line; only meaningful for SemiCollinear sets.
  Coord blue_line_y() const {
    for (const Point& p : pts)
      if (p.color == Color::Blue) return p.y;
    fail(Errc::InvalidInstance, "blue_line_y: no blue point");
  }
};

namespace detail {

inline void validate_no_three_collinear(const std::vector<Point>& pts, bool skip_all_blue,
                                        const char* ctx) {
  int n = int(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (skip_all_blue && pts[i].color == Color::Blue && pts[j].color == Color::Blue &&
            pts[k].color == Color::Blue)
          continue;
        if (collinear(pts[i], pts[j], pts[k]))
          fail(Errc::InvalidInstance,
               std::string(ctx) + ": collinear triple " + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k));
      }
}

}  // namespace detail

inline void validate_point_set(const PointSet& ps) {
  int n = ps.n();
  require(n >= 2, Errc::InvalidInstance, "point set: need n >= 2");
  for (int i = 0; i < n; ++i) {
    const Point& p = ps[i];
    require(p.id == i, Errc::InvalidInstance, "point set: ids must equal positions");
    require(std::llabs(p.x) <= kCoordLimit && std::llabs(p.y) <= kCoordLimit,
            Errc::InvalidInstance, "point set: coordinate exceeds limit");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (same_coords(ps[i], ps[j])) fail(Errc::DuplicatePoints, "point set: duplicate points");

  switch (ps.cls) {
    case PositionClass::General:
      detail::validate_no_three_collinear(ps.pts, false, "general");
      break;
    case PositionClass::Convex: {
      require(n >= 3, Errc::InvalidInstance, "convex: need n >= 3");
      for (int i = 0; i < n; ++i) {
        const Point& a = ps[i];
        const Point& b = ps[(i + 1) % n];
        const Point& c = ps[(i + 2) % n];
        require(orientation(a, b, c) == Orient::Clockwise, Errc::InvalidInstance,
                "convex: points must be strictly convex in clockwise order");
      }
      break;
    }
    case PositionClass::SemiCollinear: {
      int blues = 0, reds = 0;
      Coord line_y = 0;
      for (const Point& p : ps.pts) {
        if (p.color == Color::Blue) {
          if (blues == 0) line_y = p.y;
          require(p.y == line_y, Errc::InvalidInstance, "semicollinear: blues must share a line");
          ++blues;
        } else if (p.color == Color::Red) {
          ++reds;
        } else {
          fail(Errc::InvalidInstance, "semicollinear: every point must be colored");
        }
      }
      require(blues >= 1 && reds >= 1, Errc::InvalidInstance,
              "semicollinear: need both colors");
      for (const Point& p : ps.pts)
        if (p.color == Color::Red)
          require(p.y != line_y, Errc::InvalidInstance, "semicollinear: red on the blue line");
      detail::validate_no_three_collinear(ps.pts, true, "semicollinear");
      break;
    }
  }
}

inline PointSet make_point_set(std::vector<Point> pts, PositionClass cls) {
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i].id = int(i);
  PointSet ps{std::move(pts), cls};
  validate_point_set(ps);
  return ps;
}

// Spread = max pairwise distance / min pairwise distance.  The exact squared
// pair is exposed separately so tests can compare without rounding.
struct Spread2 {
  std::int64_t max2 = 0;
  std::int64_t min2 = 0;
};

inline Spread2 spread2(const PointSet& ps) {
  require(ps.n() >= 2, Errc::InvalidInstance, "spread: need n >= 2");
  Spread2 s;
  s.max2 = 0;
  s.min2 = dist2(ps[0], ps[1]);
  for (int i = 0; i < ps.n(); ++i)
    for (int j = i + 1; j < ps.n(); ++j) {
      std::int64_t d = dist2(ps[i], ps[j]);
      s.max2 = std::max(s.max2, d);
      s.min2 = std::min(s.min2, d);
    }
  if (s.min2 == 0) fail(Errc::DuplicatePoints, "spread: duplicate points");
  return s;
}

inline double spread(const PointSet& ps) {
  Spread2 s = spread2(ps);
  return std::sqrt(double(s.max2) / double(s.min2));
}

// Depth of the chord ij on a convex point set: the smaller number of points
// strictly on either side of the line through i and j.  Zero iff hull edge.
inline int chord_depth(const PointSet& ps, int i, int j) {
  require(ps.cls == PositionClass::Convex, Errc::PositionClassMismatch,
          "chord_depth: convex point set required");
  require(i != j, Errc::InvalidInstance, "chord_depth: i != j");
  int left = 0, right = 0;
  for (int k = 0; k < ps.n(); ++k) {
    if (k == i || k == j) continue;
    Orient o = orientation(ps[i], ps[j], ps[k]);
    require(o != Orient::Collinear, Errc::DegenerateInput, "chord_depth: collinear point");
    (o == Orient::CounterClockwise ? left : right)++;
  }
  return std::min(left, right);
}

}  // namespace untangle
