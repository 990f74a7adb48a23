#pragma once

#include <optional>
#include <string>
#include <vector>

#include "untangle/state.hpp"

namespace untangle {

template <class State>
struct EngineReport {
  std::string engine;
  int flips_used = 0;
  std::optional<double> bound_value;
  Trace<State> trace;
  bool plane = false;
};

template <class State>
EngineReport<State> make_report(std::string engine, State initial, State result,
                                std::vector<TraceEvent> events, std::optional<double> bound) {
  EngineReport<State> rep;
  rep.engine = std::move(engine);
  rep.trace = Trace<State>{std::move(initial), std::move(result), std::move(events)};
  rep.flips_used = rep.trace.flip_count();
  rep.bound_value = bound;
  rep.plane = is_plane(rep.trace.result);
  require(rep.plane, Errc::Internal, rep.engine + ": result is not plane");
  if (bound)
    require(double(rep.flips_used) <= *bound + 1e-9, Errc::BoundViolation,
            rep.engine + ": flip count exceeds theorem bound");
  return rep;
}

namespace detail {

// Cyclic list of the still-active points of a convex set, in clockwise
// order.  Supports the strip-a-boundary-edge recursions.
class ActiveRing {
 public:
  explicit ActiveRing(int n) : order_(), pos_(std::size_t(n), -1) {
    for (int i = 0; i < n; ++i) {
      order_.push_back(i);
      pos_[std::size_t(i)] = i;
    }
  }

  int size() const { return int(order_.size()); }
  bool active(int id) const { return pos_[std::size_t(id)] >= 0; }

  int next(int id) const {
    int p = pos_at(id);
    return order_[std::size_t((p + 1) % size())];
  }
  int prev(int id) const {
    int p = pos_at(id);
    return order_[std::size_t((p + size() - 1) % size())];
  }

  // number of active points strictly between u and v going clockwise
  int gap_cw(int u, int v) const {
    int pu = pos_at(u), pv = pos_at(v);
    return (pv - pu - 1 + size()) % size();
  }

  int depth(const Edge& e) const { return std::min(gap_cw(e.a, e.b), gap_cw(e.b, e.a)); }

  void remove(int id) {
    int p = pos_at(id);
    order_.erase(order_.begin() + p);
    pos_[std::size_t(id)] = -1;
    for (std::size_t i = std::size_t(p); i < order_.size(); ++i) pos_[std::size_t(order_[i])] = int(i);
  }

 private:
  int pos_at(int id) const {
    int p = pos_[std::size_t(id)];
    require(p >= 0, Errc::Internal, "active ring: point not active");
    return p;
  }
  std::vector<int> order_;
  std::vector<int> pos_;
};

}  // namespace detail

}  // namespace untangle
