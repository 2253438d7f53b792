#pragma once

// Bounded bidirectional breadth-first search for a sequence of front moves
// between two knot fronts.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "legtorus/front.hpp"
#include "legtorus/moves.hpp"

namespace legtorus {

struct Equivalent {
  std::vector<MoveInstance> path;  // replays from the first front to the second
  std::size_t explored = 0;
};

struct DistinctInvariants {
  FrontInvariants first;
  FrontInvariants second;
  std::string witness;  // e.g. "tb 0 != -1"
};

struct Inconclusive {
  std::size_t explored = 0;
};

using Certificate = std::variant<Equivalent, DistinctInvariants, Inconclusive>;

struct SearchOptions {
  std::int64_t budget = 100000;  // distinct states over both sides
  /// Words may grow this many events beyond the longer input.
  std::size_t slack = 3;
  bool parallel = true;
};

/// The verdict depends only on the inputs and options, never on the thread
/// count: frontier expansion runs in parallel but results are merged in
/// frontier order.
Certificate certify_isotopic(const FrontWord& a, const FrontWord& b, std::int64_t budget);
Certificate certify_isotopic(const FrontWord& a, const FrontWord& b, const SearchOptions& opts);

FrontWord replay(const FrontWord& start, const std::vector<MoveInstance>& path);

}  // namespace legtorus
