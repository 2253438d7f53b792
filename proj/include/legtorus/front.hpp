#pragma once

// Annular front diagrams of Legendrian knots in J^1(S^1).
//
// A front is cut open along the seam theta = 0 and stored as a word of
// events read left to right. Strands are numbered bottom-up from 1 in every
// vertical slice. Cross(i) swaps the strands at heights i and i+1,
// LeftCusp(i) creates a new pair of strands at heights i, i+1 and
// RightCusp(i) joins the strands at heights i, i+1. After the last event
// the strand count must be back to `base`, the count at the seam.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "legtorus/invariants.hpp"

namespace legtorus {

enum class EventKind : std::uint8_t { Cross, LeftCusp, RightCusp };

struct Event {
  EventKind kind = EventKind::Cross;
  int height = 1;

  static Event cross(int i) { return {EventKind::Cross, i}; }
  static Event left_cusp(int i) { return {EventKind::LeftCusp, i}; }
  static Event right_cusp(int i) { return {EventKind::RightCusp, i}; }

  friend bool operator==(const Event&, const Event&) = default;
};

enum class Dir : std::int8_t { Left = -1, Right = 1 };

inline Dir flip(Dir d) { return d == Dir::Right ? Dir::Left : Dir::Right; }

/// Orientation of one seam strand; it orients the whole component.
struct OrientMark {
  int height = 1;
  Dir dir = Dir::Right;

  friend bool operator==(const OrientMark&, const OrientMark&) = default;
};

struct KnotMeta {
  std::int64_t p = 0;
  std::int64_t q = 1;

  friend bool operator==(const KnotMeta&, const KnotMeta&) = default;
};

struct FrontWord {
  int base = 1;
  std::vector<Event> events;
  std::optional<KnotMeta> knot;
  std::vector<OrientMark> orient;

  friend bool operator==(const FrontWord&, const FrontWord&) = default;
};

/// Structural problem with a front. `site` says which part of the word is
/// at fault; `index` is the event index for Site::Event.
class FrontError : public std::invalid_argument {
 public:
  enum class Site { Word, Event, Orientation, Knot };

  explicit FrontError(const std::string& what, Site site = Site::Word, std::size_t index = 0)
      : std::invalid_argument(what), site_(site), index_(index) {}
  Site site() const { return site_; }
  std::size_t index() const { return index_; }

 private:
  Site site_;
  std::size_t index_;
};

/// Strand count after applying e to a slice of `count` strands.
int count_after(int count, const Event& e);

/// Segment (gap, height): the piece of strand at `height` in the slice just
/// left of event `gap`. Gap 0 is the seam slice.
struct FrontAnalysis {
  std::vector<int> counts;             // strands per gap
  std::vector<int> offsets;            // first segment id of each gap
  std::vector<int> component;          // component id per segment
  std::vector<std::optional<Dir>> dir;  // traversal direction per segment
  int components = 0;
  bool oriented = false;               // every component carries a mark
  std::optional<int> winding;          // present when oriented

  int segment(int gap, int height) const { return offsets[gap] + height - 1; }
  int gaps() const { return static_cast<int>(counts.size()); }
};

FrontAnalysis analyze(const FrontWord& f);

struct FrontInvariants {
  int writhe = 0;
  int c_up = 0;
  int c_down = 0;
  int tb = 0;
  int rot = 0;
  int winding = 0;
  int components = 1;

  friend bool operator==(const FrontInvariants&, const FrontInvariants&) = default;
};

/// Crossing signs and cusp directions of an oriented front, any number of
/// components. tb and rot are only meaningful for a single component.
FrontInvariants front_counts(const FrontWord& f, const FrontAnalysis& a);

/// Requires a single oriented component.
FrontInvariants front_invariants(const FrontWord& f);

/// Per-event data for drawing and tests: crossing sign, or +1 for an up
/// cusp and -1 for a down cusp.
std::vector<int> event_signs(const FrontWord& f, const FrontAnalysis& a);

enum class PeakVariant { Down, Up };

FrontWord zero_section();
/// q strands, (x1 ... x(q-1)) repeated p times; tb = p(q-1), rot = 0.
FrontWord positive_braid(std::int64_t p, std::int64_t q);
/// |p| detour blocks on q strands; tb = pq, rot = -p (down) or p (up).
FrontWord negative_peak(std::int64_t p, std::int64_t q, PeakVariant variant);
/// Two-cusp contractible front crossing the seam; tb = -1, rot = 0.
FrontWord unknot_front();

/// Inserts a zigzag at event position `slot` (0..events.size()) on the strand
/// at `height` in that slice.
FrontWord stabilize_front(const FrontWord& f, Sign sign, int height, int slot);

FrontWord mirror_z(const FrontWord& f);
FrontWord reverse_orientation(const FrontWord& f);

struct FrontClass {
  LegendrianClass cls;
  bool realizable = true;
};

/// The Jet class of a front with declared knot type.
FrontClass to_class(const FrontWord& f);

}  // namespace legtorus
