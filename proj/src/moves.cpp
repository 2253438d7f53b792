#include "legtorus/moves.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>

namespace legtorus {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 17> kRuleNames{{
    {Rule::RotL, "rotl"},       {Rule::RotR, "rotr"},       {Rule::SwapHi, "swaphi"},
    {Rule::SwapLo, "swaplo"},   {Rule::R1aAdd, "r1a+"},     {Rule::R1aDel, "r1a-"},
    {Rule::R1bAdd, "r1b+"},     {Rule::R1bDel, "r1b-"},     {Rule::R2laAdd, "r2la+"},
    {Rule::R2laDel, "r2la-"},   {Rule::R2lbAdd, "r2lb+"},   {Rule::R2lbDel, "r2lb-"},
    {Rule::R2raAdd, "r2ra+"},   {Rule::R2raDel, "r2ra-"},   {Rule::R2rbAdd, "r2rb+"},
    {Rule::R2rbDel, "r2rb-"},   {Rule::R3, "r3"},
}};

bool is(const Event& e, EventKind kind, int height) {
  return e.kind == kind && e.height == height;
}

int delta(const Event& e) {
  switch (e.kind) {
    case EventKind::Cross:
      return 0;
    case EventKind::LeftCusp:
      return 2;
    case EventKind::RightCusp:
      return -2;
  }
  return 0;
}

Event shifted(Event e, int by) {
  e.height += by;
  return e;
}

// Heights touched by an event, doubled so that the slot between strands
// h-1 and h sits at 2h-1. `after` selects the slice right of the event.
std::pair<int, int> footprint(const Event& e, bool after) {
  const int h = e.height;
  const bool empty = (e.kind == EventKind::LeftCusp && !after) ||
                     (e.kind == EventKind::RightCusp && after);
  if (empty) return {2 * h - 1, 2 * h - 1};
  return {2 * h, 2 * h + 2};
}

bool second_above(const Event& a, const Event& b) {
  auto [alo, ahi] = footprint(a, true);
  auto [blo, bhi] = footprint(b, false);
  if (blo > ahi) return true;
  // A right cusp followed by a left cusp in the same slot: the new cusp may
  // be slid past on either side.
  return a.kind == EventKind::RightCusp && b.kind == EventKind::LeftCusp && alo == blo;
}

bool second_below(const Event& a, const Event& b) {
  auto [alo, ahi] = footprint(a, true);
  auto [blo, bhi] = footprint(b, false);
  if (bhi < alo) return true;
  return a.kind == EventKind::RightCusp && b.kind == EventKind::LeftCusp && alo == blo;
}

void replace(std::vector<Event>& events, int pos, int count, std::initializer_list<Event> with) {
  events.erase(events.begin() + pos, events.begin() + pos + count);
  events.insert(events.begin() + pos, with);
}

// Moves the seam to the slice left of event `gap` of the old word.
std::optional<FrontWord> reseam(const FrontWord& f, const FrontAnalysis& a, int gap) {
  const int n_events = static_cast<int>(f.events.size());
  if (n_events == 0 || !a.oriented) return std::nullopt;
  const int count = a.counts[gap];
  if (count < 1) return std::nullopt;
  FrontWord out = f;
  out.base = count;
  std::rotate(out.events.begin(), out.events.begin() + gap, out.events.end());
  out.orient.clear();
  std::vector<bool> seen(a.components, false);
  for (int h = 1; h <= count; ++h) {
    const int s = a.segment(gap, h);
    if (seen[a.component[s]]) continue;
    seen[a.component[s]] = true;
    out.orient.push_back({h, *a.dir[s]});
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return std::nullopt;
  return out;
}

std::optional<FrontWord> rewrite(const FrontWord& f, const FrontAnalysis& a,
                                 const MoveInstance& m) {
  const int n_events = static_cast<int>(f.events.size());
  const int k = m.pos;
  const auto& ev = f.events;
  auto has = [&](int count) { return k >= 0 && k + count <= n_events; };
  FrontWord out = f;
  if (m.rule != Rule::R1aAdd && m.rule != Rule::R1bAdd && m.height != 0) return std::nullopt;

  switch (m.rule) {
    case Rule::RotL:
      if (k != 0 || n_events == 0) return std::nullopt;
      return reseam(f, a, n_events == 1 ? 0 : 1);
    case Rule::RotR:
      if (k != 0 || n_events == 0) return std::nullopt;
      return reseam(f, a, n_events - 1);

    case Rule::SwapHi:
    case Rule::SwapLo: {
      if (!has(2)) return std::nullopt;
      const Event& first = ev[k];
      const Event& second = ev[k + 1];
      if (m.rule == Rule::SwapHi) {
        if (!second_above(first, second)) return std::nullopt;
        out.events[k] = shifted(second, -delta(first));
        out.events[k + 1] = first;
      } else {
        if (!second_below(first, second)) return std::nullopt;
        out.events[k] = second;
        out.events[k + 1] = shifted(first, delta(second));
      }
      return out;
    }

    case Rule::R1aAdd:
    case Rule::R1bAdd: {
      if (k < 0 || k > n_events) return std::nullopt;
      const int gap = k == n_events ? 0 : k;
      const int h = m.height;
      if (h < 1 || h > a.counts[gap]) return std::nullopt;
      if (m.rule == Rule::R1aAdd) {
        out.events.insert(out.events.begin() + k,
                          {Event::left_cusp(h + 1), Event::cross(h), Event::right_cusp(h + 1)});
      } else {
        out.events.insert(out.events.begin() + k,
                          {Event::left_cusp(h), Event::cross(h + 1), Event::right_cusp(h)});
      }
      return out;
    }
    case Rule::R1aDel: {
      if (!has(3)) return std::nullopt;
      const int h = ev[k + 1].height;
      if (!is(ev[k], EventKind::LeftCusp, h + 1) || !is(ev[k + 1], EventKind::Cross, h) ||
          !is(ev[k + 2], EventKind::RightCusp, h + 1)) {
        return std::nullopt;
      }
      replace(out.events, k, 3, {});
      return out;
    }
    case Rule::R1bDel: {
      if (!has(3)) return std::nullopt;
      const int h = ev[k].height;
      if (!is(ev[k], EventKind::LeftCusp, h) || !is(ev[k + 1], EventKind::Cross, h + 1) ||
          !is(ev[k + 2], EventKind::RightCusp, h)) {
        return std::nullopt;
      }
      replace(out.events, k, 3, {});
      return out;
    }

    case Rule::R2laAdd: {
      if (!has(1) || ev[k].kind != EventKind::LeftCusp || ev[k].height < 2) return std::nullopt;
      const int i = ev[k].height - 1;
      replace(out.events, k, 1, {Event::left_cusp(i), Event::cross(i + 1), Event::cross(i)});
      return out;
    }
    case Rule::R2laDel: {
      if (!has(3)) return std::nullopt;
      const int i = ev[k].height;
      if (!is(ev[k], EventKind::LeftCusp, i) || !is(ev[k + 1], EventKind::Cross, i + 1) ||
          !is(ev[k + 2], EventKind::Cross, i)) {
        return std::nullopt;
      }
      replace(out.events, k, 3, {Event::left_cusp(i + 1)});
      return out;
    }
    case Rule::R2lbAdd: {
      if (!has(1) || ev[k].kind != EventKind::LeftCusp) return std::nullopt;
      const int i = ev[k].height;
      if (i > a.counts[k]) return std::nullopt;  // needs a strand below the tip
      replace(out.events, k, 1, {Event::left_cusp(i + 1), Event::cross(i), Event::cross(i + 1)});
      return out;
    }
    case Rule::R2lbDel: {
      if (!has(3)) return std::nullopt;
      const int i = ev[k + 1].height;
      if (!is(ev[k], EventKind::LeftCusp, i + 1) || !is(ev[k + 1], EventKind::Cross, i) ||
          !is(ev[k + 2], EventKind::Cross, i + 1)) {
        return std::nullopt;
      }
      replace(out.events, k, 3, {Event::left_cusp(i)});
      return out;
    }
    case Rule::R2raAdd: {
      if (!has(1) || ev[k].kind != EventKind::RightCusp || ev[k].height < 2) return std::nullopt;
      const int i = ev[k].height - 1;
      replace(out.events, k, 1, {Event::cross(i), Event::cross(i + 1), Event::right_cusp(i)});
      return out;
    }
    case Rule::R2raDel: {
      if (!has(3)) return std::nullopt;
      const int i = ev[k].height;
      if (!is(ev[k], EventKind::Cross, i) || !is(ev[k + 1], EventKind::Cross, i + 1) ||
          !is(ev[k + 2], EventKind::RightCusp, i)) {
        return std::nullopt;
      }
      replace(out.events, k, 3, {Event::right_cusp(i + 1)});
      return out;
    }
    case Rule::R2rbAdd: {
      if (!has(1) || ev[k].kind != EventKind::RightCusp) return std::nullopt;
      const int i = ev[k].height;
      if (i + 2 > a.counts[k]) return std::nullopt;  // needs a strand above the tip
      replace(out.events, k, 1, {Event::cross(i + 1), Event::cross(i), Event::right_cusp(i + 1)});
      return out;
    }
    case Rule::R2rbDel: {
      if (!has(3)) return std::nullopt;
      const int i = ev[k + 1].height;
      if (!is(ev[k], EventKind::Cross, i + 1) || !is(ev[k + 1], EventKind::Cross, i) ||
          !is(ev[k + 2], EventKind::RightCusp, i + 1)) {
        return std::nullopt;
      }
      replace(out.events, k, 3, {Event::right_cusp(i)});
      return out;
    }

    case Rule::R3: {
      if (!has(3)) return std::nullopt;
      if (ev[k].kind != EventKind::Cross || ev[k + 1].kind != EventKind::Cross ||
          ev[k + 2].kind != EventKind::Cross || ev[k].height != ev[k + 2].height) {
        return std::nullopt;
      }
      const int i = ev[k].height;
      const int j = ev[k + 1].height;
      if (j != i + 1 && j != i - 1) return std::nullopt;
      replace(out.events, k, 3, {Event::cross(j), Event::cross(i), Event::cross(j)});
      return out;
    }
  }
  return std::nullopt;
}

struct Signature {
  int components;
  std::optional<int> winding;
  std::optional<int> tb;
  std::optional<int> rot;

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const FrontWord& f, const FrontAnalysis& a) {
  Signature s{a.components, a.winding, std::nullopt, std::nullopt};
  if (a.oriented) {
    FrontInvariants inv = front_counts(f, a);
    s.tb = inv.tb;
    s.rot = inv.rot;
  }
  return s;
}

FrontAnalysis checked_result(const FrontWord& result, const Signature& before,
                             const MoveInstance& m) {
  FrontAnalysis b;
  try {
    b = analyze(result);
  } catch (const FrontError& err) {
    throw std::logic_error("move " + to_string(m) + " produced an invalid front: " + err.what());
  }
  if (signature(result, b) != before) {
    throw std::logic_error("move " + to_string(m) + " changed the front invariants");
  }
  return b;
}

void candidates(const FrontWord& f, const FrontAnalysis& a, std::size_t max_events,
                std::vector<MoveInstance>& out) {
  const int n_events = static_cast<int>(f.events.size());
  const std::size_t size = f.events.size();
  if (n_events >= 2) {
    out.push_back({Rule::RotL, 0, 0});
    out.push_back({Rule::RotR, 0, 0});
  }
  for (int k = 0; k < n_events; ++k) {
    if (k + 1 < n_events) {
      out.push_back({Rule::SwapHi, k, 0});
      out.push_back({Rule::SwapLo, k, 0});
    }
    if (k + 2 < n_events) {
      for (Rule r : {Rule::R1aDel, Rule::R1bDel, Rule::R2laDel, Rule::R2lbDel, Rule::R2raDel,
                     Rule::R2rbDel, Rule::R3}) {
        out.push_back({r, k, 0});
      }
    }
    if (size + 2 <= max_events) {
      for (Rule r : {Rule::R2laAdd, Rule::R2lbAdd, Rule::R2raAdd, Rule::R2rbAdd}) {
        out.push_back({r, k, 0});
      }
    }
  }
  if (size + 3 <= max_events) {
    for (int slot = 0; slot <= n_events; ++slot) {
      const int gap = slot == n_events ? 0 : slot;
      for (int h = 1; h <= a.counts[gap]; ++h) {
        out.push_back({Rule::R1aAdd, slot, h});
        out.push_back({Rule::R1bAdd, slot, h});
      }
    }
  }
}

void append_height(std::string& s, int h) {
  s.push_back(static_cast<char>(h & 0xff));
  s.push_back(static_cast<char>((h >> 8) & 0xff));
}

}  // namespace

std::string_view rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::string to_string(const MoveInstance& m) {
  std::string s = std::string(rule_name(m.rule)) + "@" + std::to_string(m.pos);
  if (m.rule == Rule::R1aAdd || m.rule == Rule::R1bAdd) s += ":" + std::to_string(m.height);
  return s;
}

MoveInstance parse_move(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) throw IllegalMove("move must be RULE@POS[:HEIGHT]");
  const std::string_view name = text.substr(0, at);
  std::string_view rest = text.substr(at + 1);
  MoveInstance m;
  auto it = std::find_if(kRuleNames.begin(), kRuleNames.end(),
                         [&](const auto& entry) { return entry.second == name; });
  if (it == kRuleNames.end()) throw IllegalMove("unknown move rule '" + std::string(name) + "'");
  m.rule = it->first;
  auto number = [](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw IllegalMove("bad number '" + std::string(s) + "' in move");
    }
    return v;
  };
  const auto colon = rest.find(':');
  m.pos = number(rest.substr(0, colon));
  if (colon != std::string_view::npos) m.height = number(rest.substr(colon + 1));
  const bool needs_height = m.rule == Rule::R1aAdd || m.rule == Rule::R1bAdd;
  if (needs_height != (colon != std::string_view::npos)) {
    throw IllegalMove(needs_height ? "r1 insertion needs a height (RULE@SLOT:HEIGHT)"
                                   : "only r1 insertions take a height");
  }
  return m;
}

std::vector<MoveInstance> legal_moves(const FrontWord& f) {
  return legal_moves(f, static_cast<std::size_t>(-1));
}

std::vector<MoveInstance> legal_moves(const FrontWord& f, std::size_t max_events) {
  const FrontAnalysis a = analyze(f);
  std::vector<MoveInstance> all;
  candidates(f, a, max_events, all);
  std::vector<MoveInstance> out;
  for (const MoveInstance& m : all) {
    if (rewrite(f, a, m)) out.push_back(m);
  }
  return out;
}

bool is_legal(const FrontWord& f, const MoveInstance& m) {
  return rewrite(f, analyze(f), m).has_value();
}

FrontWord apply_move(const FrontWord& f, const MoveInstance& m) {
  const FrontAnalysis a = analyze(f);
  auto out = rewrite(f, a, m);
  if (!out) throw IllegalMove("move " + to_string(m) + " does not apply here");
  checked_result(*out, signature(f, a), m);
  return *out;
}

MoveInstance inverse_move(const FrontWord& f, const MoveInstance& m) {
  switch (m.rule) {
    case Rule::RotL:
      return {Rule::RotR, 0, 0};
    case Rule::RotR:
      return {Rule::RotL, 0, 0};
    case Rule::SwapHi:
      return {Rule::SwapLo, m.pos, 0};
    case Rule::SwapLo:
      return {Rule::SwapHi, m.pos, 0};
    case Rule::R1aAdd:
      return {Rule::R1aDel, m.pos, 0};
    case Rule::R1bAdd:
      return {Rule::R1bDel, m.pos, 0};
    case Rule::R1aDel:
      return {Rule::R1aAdd, m.pos, f.events.at(m.pos + 1).height};
    case Rule::R1bDel:
      return {Rule::R1bAdd, m.pos, f.events.at(m.pos).height};
    case Rule::R2laAdd:
      return {Rule::R2laDel, m.pos, 0};
    case Rule::R2laDel:
      return {Rule::R2laAdd, m.pos, 0};
    case Rule::R2lbAdd:
      return {Rule::R2lbDel, m.pos, 0};
    case Rule::R2lbDel:
      return {Rule::R2lbAdd, m.pos, 0};
    case Rule::R2raAdd:
      return {Rule::R2raDel, m.pos, 0};
    case Rule::R2raDel:
      return {Rule::R2raAdd, m.pos, 0};
    case Rule::R2rbAdd:
      return {Rule::R2rbDel, m.pos, 0};
    case Rule::R2rbDel:
      return {Rule::R2rbAdd, m.pos, 0};
    case Rule::R3:
      return m;
  }
  return m;
}

std::vector<Neighbour> neighbours(const FrontWord& f, std::size_t max_events) {
  const FrontAnalysis a = analyze(f);
  const Signature before = signature(f, a);
  std::vector<MoveInstance> all;
  candidates(f, a, max_events, all);
  std::vector<Neighbour> out;
  for (const MoveInstance& m : all) {
    auto w = rewrite(f, a, m);
    if (!w) continue;
    const FrontAnalysis b = checked_result(*w, before, m);
    std::string key = canonical_key(*w, b);
    out.push_back({m, std::move(*w), std::move(key)});
  }
  return out;
}

std::string canonical_key(const FrontWord& f) { return canonical_key(f, analyze(f)); }

std::string canonical_key(const FrontWord& f, const FrontAnalysis& a) {
  const int n_events = static_cast<int>(f.events.size());
  const int n_rot = std::max(n_events, 1);
  std::string best;
  bool have = false;
  std::string s;
  for (int r = 0; r < n_rot; ++r) {
    const int count = a.counts[r];
    if (count < 1) continue;
    s.clear();
    append_height(s, count);
    for (int h = 1; h <= count; ++h) {
      const auto d = a.dir[a.segment(r, h)];
      s.push_back(!d ? '?' : *d == Dir::Right ? '+' : '-');
    }
    for (int j = 0; j < n_events; ++j) {
      const Event& e = f.events[(r + j) % n_events];
      s.push_back(static_cast<char>('a' + static_cast<int>(e.kind)));
      append_height(s, e.height);
    }
    if (!have || s < best) {
      best = s;
      have = true;
    }
  }
  return best;
}

int rotation_offset(const FrontWord& from, const FrontWord& to) {
  if (from.events.size() != to.events.size()) return -1;
  const FrontAnalysis a = analyze(from);
  const FrontAnalysis b = analyze(to);
  const int n_events = static_cast<int>(from.events.size());
  const int n_rot = std::max(n_events, 1);
  for (int r = 0; r < n_rot; ++r) {
    if (a.counts[r] != to.base) continue;
    bool same = true;
    for (int j = 0; j < n_events && same; ++j) {
      same = from.events[(r + j) % n_events] == to.events[j];
    }
    for (int h = 1; h <= to.base && same; ++h) {
      same = a.dir[a.segment(r, h)] == b.dir[b.segment(0, h)];
    }
    if (same) return r;
  }
  return -1;
}

}  // namespace legtorus
