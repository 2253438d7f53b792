#include "legtorus/front.hpp"

#include <cstdlib>

namespace legtorus {

namespace {

struct End {
  int seg = -1;
  bool right = false;
};

struct Pos {
  int seg;
  Dir dir;
};

std::string describe(const Event& e) {
  const char* name = e.kind == EventKind::Cross      ? "x"
                     : e.kind == EventKind::LeftCusp ? "l"
                                                     : "r";
  return std::string(name) + " " + std::to_string(e.height);
}

void expect_invariants(const FrontWord& f, int tb, int rot, int winding, const char* what) {
  FrontInvariants inv = front_invariants(f);
  if (inv.tb != tb || inv.rot != rot || inv.winding != winding) {
    throw std::logic_error(std::string(what) + ": expected tb " + std::to_string(tb) + ", rot " +
                           std::to_string(rot) + ", winding " + std::to_string(winding) +
                           " but front has tb " + std::to_string(inv.tb) + ", rot " +
                           std::to_string(inv.rot) + ", winding " + std::to_string(inv.winding));
  }
}

}  // namespace

int count_after(int count, const Event& e) {
  const int i = e.height;
  if (i < 1) throw FrontError("event '" + describe(e) + "' has height below 1");
  switch (e.kind) {
    case EventKind::Cross:
      if (i + 1 > count) {
        throw FrontError("crossing at height " + std::to_string(i) + " needs " +
                         std::to_string(i + 1) + " strands, slice has " + std::to_string(count));
      }
      return count;
    case EventKind::LeftCusp:
      if (i > count + 1) {
        throw FrontError("left cusp at height " + std::to_string(i) + " above slice of " +
                         std::to_string(count) + " strands");
      }
      return count + 2;
    case EventKind::RightCusp:
      if (i + 1 > count) {
        throw FrontError("right cusp at height " + std::to_string(i) + " needs " +
                         std::to_string(i + 1) + " strands, slice has " + std::to_string(count));
      }
      return count - 2;
  }
  return count;
}

FrontAnalysis analyze(const FrontWord& f) {
  if (f.base < 1) throw FrontError("base must be at least 1");
  const int n_events = static_cast<int>(f.events.size());
  const int n_gaps = n_events == 0 ? 1 : n_events;

  FrontAnalysis a;
  a.counts.resize(n_gaps);
  a.counts[0] = f.base;
  int count = f.base;
  for (int k = 0; k < n_events; ++k) {
    try {
      count = count_after(count, f.events[k]);
    } catch (const FrontError& err) {
      throw FrontError(err.what(), FrontError::Site::Event, static_cast<std::size_t>(k));
    }
    if (k + 1 < n_gaps) a.counts[k + 1] = count;
  }
  if (count != f.base) {
    throw FrontError("strand count after the last event is " + std::to_string(count) +
                         ", expected base " + std::to_string(f.base),
                     n_events == 0 ? FrontError::Site::Word : FrontError::Site::Event,
                     n_events == 0 ? 0 : static_cast<std::size_t>(n_events - 1));
  }

  a.offsets.resize(n_gaps);
  int total = 0;
  for (int g = 0; g < n_gaps; ++g) {
    a.offsets[g] = total;
    total += a.counts[g];
  }

  std::vector<End> right_end(total), left_end(total);
  auto join = [&](End x, End y) {
    (x.right ? right_end : left_end)[x.seg] = y;
    (y.right ? right_end : left_end)[y.seg] = x;
  };

  if (n_events == 0) {
    for (int h = 1; h <= f.base; ++h) join({a.segment(0, h), true}, {a.segment(0, h), false});
  }
  for (int k = 0; k < n_events; ++k) {
    const int next = (k + 1) % n_events;
    const int n = a.counts[k];
    const Event& e = f.events[k];
    const int i = e.height;
    for (int h = 1; h <= n; ++h) {
      int target = h;
      switch (e.kind) {
        case EventKind::Cross:
          target = h == i ? i + 1 : h == i + 1 ? i : h;
          break;
        case EventKind::LeftCusp:
          target = h < i ? h : h + 2;
          break;
        case EventKind::RightCusp:
          if (h == i || h == i + 1) continue;
          target = h < i ? h : h - 2;
          break;
      }
      join({a.segment(k, h), true}, {a.segment(next, target), false});
    }
    if (e.kind == EventKind::LeftCusp) {
      join({a.segment(next, i), false}, {a.segment(next, i + 1), false});
    } else if (e.kind == EventKind::RightCusp) {
      join({a.segment(k, i), true}, {a.segment(k, i + 1), true});
    }
  }

  auto step = [&](Pos pos) {
    End out = pos.dir == Dir::Right ? right_end[pos.seg] : left_end[pos.seg];
    // Entering a segment through its right end means travelling leftward.
    return Pos{out.seg, out.right ? Dir::Left : Dir::Right};
  };

  a.component.assign(total, -1);
  for (int s = 0; s < total; ++s) {
    if (a.component[s] >= 0) continue;
    Pos pos{s, Dir::Right};
    do {
      a.component[pos.seg] = a.components;
      pos = step(pos);
    } while (pos.seg != s);
    ++a.components;
  }

  a.dir.assign(total, std::nullopt);
  for (const OrientMark& m : f.orient) {
    if (m.height < 1 || m.height > f.base) {
      throw FrontError("orientation mark at height " + std::to_string(m.height) +
                       " outside seam of " + std::to_string(f.base) + " strands",
                       FrontError::Site::Orientation);
    }
    Pos pos{a.segment(0, m.height), m.dir};
    const int start = pos.seg;
    if (a.dir[start] && *a.dir[start] != m.dir) {
      throw FrontError("orientation mark at height " + std::to_string(m.height) +
                       " contradicts another mark on the same component",
                       FrontError::Site::Orientation);
    }
    if (a.dir[start]) continue;
    do {
      a.dir[pos.seg] = pos.dir;
      pos = step(pos);
    } while (pos.seg != start);
  }

  a.oriented = true;
  for (int s = 0; s < total; ++s) a.oriented = a.oriented && a.dir[s].has_value();
  if (a.oriented) {
    int w = 0;
    for (int h = 1; h <= f.base; ++h) w += static_cast<int>(*a.dir[a.segment(0, h)]);
    a.winding = w;
    if (f.knot && f.knot->q != w) {
      throw FrontError("declared knot (" + std::to_string(f.knot->p) + "," +
                       std::to_string(f.knot->q) + ") but the front winds " + std::to_string(w) +
                       " times around the annulus",
                       FrontError::Site::Knot);
    }
  }
  return a;
}

std::vector<int> event_signs(const FrontWord& f, const FrontAnalysis& a) {
  if (!a.oriented) throw FrontError("front has an unoriented component");
  const int n_events = static_cast<int>(f.events.size());
  std::vector<int> signs(n_events, 0);
  for (int k = 0; k < n_events; ++k) {
    const Event& e = f.events[k];
    const int next = (k + 1) % n_events;
    switch (e.kind) {
      case EventKind::Cross: {
        Dir lo = *a.dir[a.segment(k, e.height)];
        Dir hi = *a.dir[a.segment(k, e.height + 1)];
        signs[k] = lo == hi ? 1 : -1;
        break;
      }
      case EventKind::LeftCusp:
        // Up iff the upper branch leaves the cusp rightward.
        signs[k] = *a.dir[a.segment(next, e.height + 1)] == Dir::Right ? 1 : -1;
        break;
      case EventKind::RightCusp:
        // Down iff the upper branch enters the cusp rightward.
        signs[k] = *a.dir[a.segment(k, e.height + 1)] == Dir::Right ? -1 : 1;
        break;
    }
  }
  return signs;
}

FrontInvariants front_counts(const FrontWord& f, const FrontAnalysis& a) {
  const std::vector<int> signs = event_signs(f, a);
  FrontInvariants inv;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (f.events[k].kind == EventKind::Cross) {
      inv.writhe += signs[k];
    } else if (signs[k] > 0) {
      ++inv.c_up;
    } else {
      ++inv.c_down;
    }
  }
  // Left and right cusps pair up, so both sums are even.
  inv.tb = inv.writhe - (inv.c_up + inv.c_down) / 2;
  inv.rot = (inv.c_down - inv.c_up) / 2;
  inv.winding = *a.winding;
  inv.components = a.components;
  return inv;
}

FrontInvariants front_invariants(const FrontWord& f) {
  FrontAnalysis a = analyze(f);
  if (a.components != 1) {
    throw FrontError("front has " + std::to_string(a.components) + " components, expected a knot");
  }
  return front_counts(f, a);
}

// ---------------------------------------------------------------------------

FrontWord zero_section() {
  FrontWord f;
  f.base = 1;
  f.knot = KnotMeta{0, 1};
  f.orient = {{1, Dir::Right}};
  expect_invariants(f, 0, 0, 1, "zero section");
  return f;
}

FrontWord positive_braid(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 2) throw InvalidInput("positive braid needs p >= 1 and q >= 2");
  if (gcd64(p, q) != 1) throw InvalidInput("positive braid needs coprime p and q");
  FrontWord f;
  f.base = static_cast<int>(q);
  f.knot = KnotMeta{p, q};
  f.orient = {{1, Dir::Right}};
  for (std::int64_t r = 0; r < p; ++r) {
    for (int i = 1; i < q; ++i) f.events.push_back(Event::cross(i));
  }
  expect_invariants(f, static_cast<int>(p * (q - 1)), 0, static_cast<int>(q), "positive braid");
  return f;
}

FrontWord negative_peak(std::int64_t p, std::int64_t q, PeakVariant variant) {
  if (p >= 0 || q < 2) throw InvalidInput("negative peak needs p < 0 and q >= 2");
  if (gcd64(p, q) != 1) throw InvalidInput("negative peak needs coprime p and q");
  FrontWord f;
  f.base = static_cast<int>(q);
  f.knot = KnotMeta{p, q};
  f.orient = {{1, Dir::Right}};
  // Each block sends the top strand back along a leftward detour that
  // crosses the other q-1 strands and re-enters at the bottom.
  for (std::int64_t r = 0; r < -p; ++r) {
    f.events.push_back(Event::left_cusp(1));
    for (int i = 2; i <= q; ++i) f.events.push_back(Event::cross(i));
    f.events.push_back(Event::right_cusp(static_cast<int>(q) + 1));
  }
  if (variant == PeakVariant::Up) f = mirror_z(f);
  const int rot = static_cast<int>(variant == PeakVariant::Down ? -p : p);
  expect_invariants(f, static_cast<int>(p * q), rot, static_cast<int>(q), "negative peak");
  return f;
}

FrontWord unknot_front() {
  FrontWord f;
  f.base = 2;
  f.events = {Event::right_cusp(1), Event::left_cusp(1)};
  f.orient = {{1, Dir::Right}};
  expect_invariants(f, -1, 0, 0, "unknot");
  return f;
}

FrontWord stabilize_front(const FrontWord& f, Sign sign, int height, int slot) {
  const FrontAnalysis a = analyze(f);
  const int n_events = static_cast<int>(f.events.size());
  if (slot < 0 || slot > n_events) {
    throw FrontError("slot " + std::to_string(slot) + " outside 0.." + std::to_string(n_events));
  }
  const int gap = slot == n_events ? 0 : slot;
  if (height < 1 || height > a.counts[gap]) {
    throw FrontError("no strand at height " + std::to_string(height) + " in slot " +
                     std::to_string(slot));
  }
  const auto dir = a.dir[a.segment(gap, height)];
  if (!dir) throw FrontError("strand at height " + std::to_string(height) + " is not oriented");

  const FrontInvariants before = front_counts(f, a);
  // L(h) R(h+1) adds two down cusps on a rightward strand, two up cusps on
  // a leftward one. L(h+1) R(h) does the opposite.
  const bool z_shape = static_cast<int>(sign) * static_cast<int>(*dir) > 0;
  FrontWord out = f;
  const Event first = z_shape ? Event::left_cusp(height) : Event::left_cusp(height + 1);
  const Event second = z_shape ? Event::right_cusp(height + 1) : Event::right_cusp(height);
  out.events.insert(out.events.begin() + slot, {first, second});

  const FrontAnalysis b = analyze(out);
  const FrontInvariants after = front_counts(out, b);
  if (b.components != a.components || after.winding != before.winding ||
      after.tb != before.tb - 1 || after.rot != before.rot + static_cast<int>(sign)) {
    throw std::logic_error("stabilization gadget produced wrong invariant deltas");
  }
  return out;
}

FrontWord mirror_z(const FrontWord& f) {
  const FrontAnalysis a = analyze(f);
  FrontWord out = f;
  for (std::size_t k = 0; k < f.events.size(); ++k) {
    const int n = a.counts[k];
    const Event& e = f.events[k];
    switch (e.kind) {
      case EventKind::Cross:
        out.events[k] = Event::cross(n - e.height);
        break;
      case EventKind::LeftCusp:
        out.events[k] = Event::left_cusp(n + 2 - e.height);
        break;
      case EventKind::RightCusp:
        out.events[k] = Event::right_cusp(n - e.height);
        break;
    }
  }
  for (OrientMark& m : out.orient) m.height = f.base + 1 - m.height;
  return out;
}

FrontWord reverse_orientation(const FrontWord& f) {
  FrontWord out = f;
  for (OrientMark& m : out.orient) m.dir = flip(m.dir);
  // The reversed knot has class (-p,-q); negative q is not a supported type.
  out.knot.reset();
  return out;
}

FrontClass to_class(const FrontWord& f) {
  if (!f.knot) throw FrontError("front has no declared knot type");
  const FrontInvariants inv = front_invariants(f);
  FrontClass out;
  out.cls.type = TorusKnotType{Ambient::Jet, f.knot->p, f.knot->q};
  validate(out.cls.type);
  out.cls.twist = inv.tb;
  out.cls.rot = inv.rot;
  out.realizable = is_realizable(out.cls);
  return out;
}

}  // namespace legtorus
