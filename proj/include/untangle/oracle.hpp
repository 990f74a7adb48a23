#pragma once

// Ground-truth flip distances by exhaustive search.  The state graph under
// flips is a DAG (total edge length strictly decreases), so shortest
// distances come from BFS and longest ones from memoized DFS.

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "untangle/state.hpp"

namespace untangle {

inline constexpr int kOracleMatchingLimit = 12;
inline constexpr int kOracleTreeLimit = 9;

struct Move {
  Edge r1, r2;
  FlipCandidate cand;
};

inline std::vector<Move> legal_moves(const Matching& m) {
  std::vector<Move> out;
  for (const CrossingPair& cp : crossings(m))
    for (const FlipCandidate& c : flip_candidates_matching(m, cp.e1, cp.e2))
      out.push_back({cp.e1, cp.e2, c});
  return out;
}

inline std::vector<Move> legal_moves(const SpanningTree& t) {
  std::vector<Move> out;
  for (const CrossingPair& cp : crossings(t))
    out.push_back({cp.e1, cp.e2, flip_candidate_tree(t, cp.e1, cp.e2)});
  return out;
}

template <class State>
State apply_move(const State& s, const Move& mv) {
  State out = s;
  auto& es = const_cast<std::vector<Edge>&>(edges_of(out));
  detail::swap_edges(es, mv.r1, mv.r2, mv.cand.add1, mv.cand.add2);
  return out;
}

namespace detail {

inline std::uint64_t key_of(const std::vector<Edge>& es) {
  std::uint64_t h = 1469598103934665603ull;
  for (const Edge& e : es) {
    h = (h ^ std::uint64_t(e.a)) * 1099511628211ull;
    h = (h ^ std::uint64_t(e.b)) * 1099511628211ull;
  }
  return h;
}

template <class State>
void check_oracle_guard(const State& s) {
  if constexpr (std::is_same_v<State, Matching>) {
    require(s.n() <= kOracleMatchingLimit, Errc::TooLarge, "oracle: matching too large");
  } else {
    require(s.n() <= kOracleTreeLimit, Errc::TooLarge, "oracle: tree too large");
  }
}

}  // namespace detail

// Minimum number of flips to reach a plane state (f).
template <class State>
int oracle_min_flips(const State& start) {
  detail::check_oracle_guard(start);
  if (is_plane(start)) return 0;
  std::unordered_map<std::uint64_t, int> dist;
  std::deque<State> queue;
  dist[detail::key_of(edges_of(start))] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    State cur = std::move(queue.front());
    queue.pop_front();
    int d = dist[detail::key_of(edges_of(cur))];
    for (const Move& mv : legal_moves(cur)) {
      State nxt = apply_move(cur, mv);
      std::uint64_t k = detail::key_of(edges_of(nxt));
      if (dist.count(k)) continue;
      if (is_plane(nxt)) return d + 1;
      dist[k] = d + 1;
      queue.push_back(nxt);
    }
  }
  fail(Errc::Internal, "oracle_min_flips: no plane state reachable");
}

// Maximum length of a valid flip sequence (F); memoized longest path.
template <class State>
int oracle_max_flips(const State& start) {
  detail::check_oracle_guard(start);
  std::unordered_map<std::uint64_t, int> memo;
  std::function<int(const State&)> longest = [&](const State& s) -> int {
    std::uint64_t k = detail::key_of(edges_of(s));
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (const Move& mv : legal_moves(s)) best = std::max(best, 1 + longest(apply_move(s, mv)));
    memo[k] = best;
    return best;
  };
  return longest(start);
}

// A longest valid flip sequence, as explicit moves (witness for F).
template <class State>
std::vector<Move> oracle_max_sequence(const State& start) {
  detail::check_oracle_guard(start);
  std::unordered_map<std::uint64_t, int> memo;
  std::function<int(const State&)> longest = [&](const State& s) -> int {
    std::uint64_t k = detail::key_of(edges_of(s));
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (const Move& mv : legal_moves(s)) best = std::max(best, 1 + longest(apply_move(s, mv)));
    memo[k] = best;
    return best;
  };
  std::vector<Move> seq;
  State cur = start;
  int remaining = longest(cur);
  while (remaining > 0) {
    for (const Move& mv : legal_moves(cur)) {
      State nxt = apply_move(cur, mv);
      if (longest(nxt) == remaining - 1) {
        seq.push_back(mv);
        cur = std::move(nxt);
        break;
      }
    }
    --remaining;
  }
  return seq;
}

// First instance of the family satisfying the predicate, in generation order.
template <class Instance>
std::optional<Instance> find_witness(const std::function<std::optional<Instance>()>& next_instance,
                                     const std::function<bool(const Instance&)>& pred) {
  while (std::optional<Instance> inst = next_instance()) {
    if (pred(*inst)) return inst;
  }
  return std::nullopt;
}

}  // namespace untangle
