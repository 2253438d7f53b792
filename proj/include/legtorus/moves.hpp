#pragma once

// Legendrian front moves on cyclic event words.
//
//   rotl, rotr        move the first event to the end / the last to the front
//   swaphi, swaplo    commute events pos, pos+1 when the second one lies
//                     entirely above (hi) or below (lo) the first
//   r1a+, r1b+        insert a one-crossing two-cusp loop on strand `height`
//                     at slot `pos`:  a: l h+1, x h, r h+1   b: l h, x h+1, r h
//   r1a-, r1b-        remove such a loop starting at event pos
//   r2la+ / r2la-     l i+1          <->  l i, x i+1, x i
//   r2lb+ / r2lb-     l i            <->  l i+1, x i, x i+1
//   r2ra+ / r2ra-     r i+1          <->  x i, x i+1, r i
//   r2rb+ / r2rb-     r i            <->  x i+1, x i, r i+1
//   r3                x i, x i+1, x i <-> x i+1, x i, x i+1
//
// Every application re-checks components, winding, writhe, and cusp counts.

#include <string>
#include <string_view>
#include <vector>

#include "legtorus/front.hpp"

namespace legtorus {

enum class Rule {
  RotL,
  RotR,
  SwapHi,
  SwapLo,
  R1aAdd,
  R1aDel,
  R1bAdd,
  R1bDel,
  R2laAdd,
  R2laDel,
  R2lbAdd,
  R2lbDel,
  R2raAdd,
  R2raDel,
  R2rbAdd,
  R2rbDel,
  R3,
};

struct MoveInstance {
  Rule rule = Rule::RotL;
  int pos = 0;
  int height = 0;  // r1 insertions only

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

std::string_view rule_name(Rule r);
/// "RULE@POS" or "RULE@POS:HEIGHT".
std::string to_string(const MoveInstance& m);
MoveInstance parse_move(std::string_view text);

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All legal moves, in a fixed order.
std::vector<MoveInstance> legal_moves(const FrontWord& f);
/// Same, dropping r1 insertions that would push the word past max_events.
std::vector<MoveInstance> legal_moves(const FrontWord& f, std::size_t max_events);

bool is_legal(const FrontWord& f, const MoveInstance& m);

/// Applies m and verifies that the front invariants are unchanged. Throws
/// IllegalMove if m does not apply.
FrontWord apply_move(const FrontWord& f, const MoveInstance& m);

/// A legal move together with its (verified) result and canonical key.
struct Neighbour {
  MoveInstance move;
  FrontWord word;
  std::string key;
};

std::vector<Neighbour> neighbours(const FrontWord& f, std::size_t max_events);

/// The move that undoes m, expressed on apply_move(f, m).
MoveInstance inverse_move(const FrontWord& f, const MoveInstance& m);

/// Rotation-invariant key of an oriented front: the lexicographically least
/// encoding over all seam positions with a non-empty slice. Ignores the
/// declared knot type and which seam strands carry the marks.
std::string canonical_key(const FrontWord& f);
std::string canonical_key(const FrontWord& f, const FrontAnalysis& a);

/// Number of rotl moves taking `from` to a word equal to `to` up to
/// orientation marks, or -1.
int rotation_offset(const FrontWord& from, const FrontWord& to);

}  // namespace legtorus
