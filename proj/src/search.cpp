#include "legtorus/search.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <unordered_map>

#include "legtorus/parallel.hpp"

namespace legtorus {

namespace {

struct Node {
  FrontWord word;
  int parent = -1;
  MoveInstance move;
};

struct Side {
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> index;
  std::vector<int> frontier;
};

std::string witness(const FrontInvariants& a, const FrontInvariants& b) {
  std::string out;
  auto field = [&](const char* name, int x, int y) {
    if (x == y) return;
    if (!out.empty()) out += ", ";
    out += std::string(name) + " " + std::to_string(x) + " != " + std::to_string(y);
  };
  field("winding", a.winding, b.winding);
  field("tb", a.tb, b.tb);
  field("rot", a.rot, b.rot);
  return out;
}

std::vector<MoveInstance> chain(const Side& side, int node) {
  std::vector<MoveInstance> moves;
  for (int n = node; side.nodes[n].parent >= 0; n = side.nodes[n].parent) {
    moves.push_back(side.nodes[n].move);
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

// Path root(first) -> meet -> root(second), or empty optional when the two
// meeting words cannot be aligned by legal rotations.
std::optional<std::vector<MoveInstance>> join(const Side& first, int a, const Side& second,
                                              int b) {
  std::vector<MoveInstance> path = chain(first, a);
  FrontWord cur = replay(first.nodes[0].word, path);

  const FrontWord& target = second.nodes[b].word;
  const int r = rotation_offset(cur, target);
  if (r < 0) return std::nullopt;
  const int n = static_cast<int>(cur.events.size());
  // Try rotl^r, then rotr^(n-r); one of them avoids empty slices.
  for (auto [rule, steps] : {std::pair{Rule::RotL, r}, std::pair{Rule::RotR, n == 0 ? 0 : (n - r) % n}}) {
    FrontWord w = cur;
    std::vector<MoveInstance> rot;
    bool ok = true;
    for (int i = 0; i < steps && ok; ++i) {
      MoveInstance m{rule, 0, 0};
      if (!is_legal(w, m)) {
        ok = false;
        break;
      }
      w = apply_move(w, m);
      rot.push_back(m);
    }
    if (!ok) continue;
    path.insert(path.end(), rot.begin(), rot.end());
    cur = std::move(w);
    // Walk the second side back to its root.
    for (int node = b; second.nodes[node].parent >= 0; node = second.nodes[node].parent) {
      const Node& nd = second.nodes[node];
      const MoveInstance inv = inverse_move(second.nodes[nd.parent].word, nd.move);
      cur = apply_move(cur, inv);
      path.push_back(inv);
    }
    return path;
  }
  return std::nullopt;
}

std::vector<std::vector<Neighbour>> expand(const Side& side, std::size_t max_events,
                                           bool parallel) {
  const auto& frontier = side.frontier;
  std::vector<std::vector<Neighbour>> out(frontier.size());
  const std::int64_t n = static_cast<std::int64_t>(frontier.size());
  if (parallel) {
    LEGTORUS_OMP_PARALLEL_FOR_DYNAMIC
    for (std::int64_t i = 0; i < n; ++i) {
      out[i] = neighbours(side.nodes[frontier[i]].word, max_events);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      out[i] = neighbours(side.nodes[frontier[i]].word, max_events);
    }
  }
  return out;
}

}  // namespace

FrontWord replay(const FrontWord& start, const std::vector<MoveInstance>& path) {
  FrontWord w = start;
  for (const MoveInstance& m : path) w = apply_move(w, m);
  return w;
}

Certificate certify_isotopic(const FrontWord& a, const FrontWord& b, std::int64_t budget) {
  SearchOptions opts;
  opts.budget = budget;
  return certify_isotopic(a, b, opts);
}

Certificate certify_isotopic(const FrontWord& a, const FrontWord& b, const SearchOptions& opts) {
  if (opts.budget <= 0) throw InvalidInput("search budget must be positive");
  const FrontInvariants ia = front_invariants(a);
  const FrontInvariants ib = front_invariants(b);
  if (ia.winding != ib.winding || ia.tb != ib.tb || ia.rot != ib.rot) {
    return DistinctInvariants{ia, ib, witness(ia, ib)};
  }

  const std::size_t max_events = std::max(a.events.size(), b.events.size()) + opts.slack;
  std::array<Side, 2> sides;
  std::size_t explored = 0;
  const std::array<const FrontWord*, 2> roots{&a, &b};
  for (int s = 0; s < 2; ++s) {
    sides[s].nodes.push_back({*roots[s], -1, {}});
    sides[s].index.emplace(canonical_key(*roots[s]), 0);
    sides[s].frontier = {0};
    ++explored;
  }
  auto finish = [&](int s, int node, int other) -> std::optional<Certificate> {
    auto path = s == 0 ? join(sides[0], node, sides[1], other)
                       : join(sides[0], other, sides[1], node);
    if (!path) return std::nullopt;
    return Equivalent{std::move(*path), explored};
  };
  if (auto it = sides[1].index.find(sides[0].index.begin()->first); it != sides[1].index.end()) {
    if (auto done = finish(0, 0, it->second)) return *done;
  }

  while (!sides[0].frontier.empty() || !sides[1].frontier.empty()) {
    int s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
    if (sides[s].frontier.empty()) s = 1 - s;
    Side& side = sides[s];
    const Side& other = sides[1 - s];

    auto expanded = expand(side, max_events, opts.parallel);
    std::vector<int> next;
    for (std::size_t i = 0; i < expanded.size(); ++i) {
      const int parent = side.frontier[i];
      for (Neighbour& nb : expanded[i]) {
        if (side.index.count(nb.key)) continue;
        if (static_cast<std::int64_t>(explored) >= opts.budget) return Inconclusive{explored};
        const int id = static_cast<int>(side.nodes.size());
        side.nodes.push_back({std::move(nb.word), parent, nb.move});
        side.index.emplace(nb.key, id);
        next.push_back(id);
        ++explored;
        if (auto it = other.index.find(nb.key); it != other.index.end()) {
          if (auto done = finish(s, id, it->second)) return *done;
        }
      }
    }
    side.frontier = std::move(next);
  }
  return Inconclusive{explored};
}

}  // namespace legtorus
