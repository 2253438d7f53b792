#include "legtorus/textio.hpp"

#include <charconv>
#include <algorithm>

#include <json.hpp>

namespace legtorus {

using nlohmann::json;

LfrontError::LfrontError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line),
      message_(message) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t to_int(std::string_view tok, int line) {
  std::int64_t v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw LfrontError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

int to_height(std::string_view tok, int line) {
  const std::int64_t v = to_int(tok, line);
  if (v < 1 || v > 1000000) {
    throw LfrontError(line, "height " + std::string(tok) + " out of range");
  }
  return static_cast<int>(v);
}

void arity(const std::vector<std::string_view>& toks, std::size_t n, int line) {
  if (toks.size() != n) {
    throw LfrontError(line, "'" + std::string(toks[0]) + "' takes " + std::to_string(n - 1) +
                                " argument" + (n == 2 ? "" : "s") + ", got " +
                                std::to_string(toks.size() - 1));
  }
}

}  // namespace

FrontWord parse_lfront(std::string_view text) {
  FrontWord f;
  bool header = false;
  bool have_base = false;
  int knot_line = 0;
  int last_orient_line = 0;
  int last_line = 0;
  int count = 0;
  std::vector<int> event_lines;

  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line;
    if (end == text.size() && raw.empty()) break;
    last_line = line;

    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto toks = split_ws(raw);
    if (toks.empty()) continue;
    const std::string_view dir = toks[0];

    if (!header) {
      if (dir != "LFRONT") throw LfrontError(line, "expected header 'LFRONT 1'");
      arity(toks, 2, line);
      if (toks[1] != "1") {
        throw LfrontError(line, "unsupported version '" + std::string(toks[1]) + "'");
      }
      header = true;
    } else if (dir == "LFRONT") {
      throw LfrontError(line, "duplicate header");
    } else if (dir == "knot") {
      arity(toks, 3, line);
      if (have_base) throw LfrontError(line, "'knot' must come before 'base'");
      if (knot_line) throw LfrontError(line, "duplicate 'knot'");
      KnotMeta k{to_int(toks[1], line), to_int(toks[2], line)};
      try {
        validate(TorusKnotType{Ambient::Jet, k.p, k.q});
      } catch (const std::exception& e) {
        throw LfrontError(line, e.what());
      }
      f.knot = k;
      knot_line = line;
    } else if (dir == "base") {
      arity(toks, 2, line);
      if (have_base) throw LfrontError(line, "duplicate 'base'");
      f.base = to_height(toks[1], line);
      count = f.base;
      have_base = true;
    } else if (dir == "x" || dir == "l" || dir == "r") {
      arity(toks, 2, line);
      if (!have_base) throw LfrontError(line, "event before 'base'");
      if (!f.orient.empty()) throw LfrontError(line, "event after 'orient'");
      const int h = to_height(toks[1], line);
      const Event e = dir == "x" ? Event::cross(h) : dir == "l" ? Event::left_cusp(h)
                                                                : Event::right_cusp(h);
      try {
        count = count_after(count, e);
      } catch (const FrontError& err) {
        throw LfrontError(line, err.what());
      }
      f.events.push_back(e);
      event_lines.push_back(line);
    } else if (dir == "orient") {
      arity(toks, 3, line);
      if (!have_base) throw LfrontError(line, "'orient' before 'base'");
      const int h = to_height(toks[1], line);
      Dir d;
      if (toks[2] == "+") {
        d = Dir::Right;
      } else if (toks[2] == "-") {
        d = Dir::Left;
      } else {
        throw LfrontError(line, "orientation must be '+' or '-'");
      }
      f.orient.push_back({h, d});
      last_orient_line = line;
    } else {
      throw LfrontError(line, "unknown directive '" + std::string(dir) + "'");
    }
  }

  const int eof = last_line + 1;
  if (!header) throw LfrontError(eof, "missing header 'LFRONT 1'");
  if (!have_base) throw LfrontError(eof, "missing 'base'");
  if (f.orient.empty()) throw LfrontError(eof, "missing 'orient'");
  if (count != f.base) {
    throw LfrontError(event_lines.empty() ? eof : event_lines.back(),
                      "strand count after the last event is " + std::to_string(count) +
                          ", seam has " + std::to_string(f.base));
  }

  try {
    const FrontAnalysis a = analyze(f);
    if (!a.oriented) throw LfrontError(last_orient_line, "front has an unoriented component");
  } catch (const FrontError& err) {
    int at = eof;
    switch (err.site()) {
      case FrontError::Site::Event:
        at = event_lines.at(err.index());
        break;
      case FrontError::Site::Orientation:
        at = last_orient_line;
        break;
      case FrontError::Site::Knot:
        at = knot_line;
        break;
      case FrontError::Site::Word:
        break;
    }
    throw LfrontError(at, err.what());
  }
  return f;
}

std::string print_lfront(const FrontWord& f) {
  std::string out = "LFRONT 1\n";
  if (f.knot) out += "knot " + std::to_string(f.knot->p) + " " + std::to_string(f.knot->q) + "\n";
  out += "base " + std::to_string(f.base) + "\n";
  for (const Event& e : f.events) {
    const char c = e.kind == EventKind::Cross ? 'x' : e.kind == EventKind::LeftCusp ? 'l' : 'r';
    out += c;
    out += " " + std::to_string(e.height) + "\n";
  }
  for (const OrientMark& m : f.orient) {
    out += "orient " + std::to_string(m.height) + (m.dir == Dir::Right ? " +\n" : " -\n");
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json twist_value(const std::optional<std::int64_t>& t) { return t ? json(*t) : json(nullptr); }

}  // namespace

std::string invariants_json(const FrontInvariants& inv, const std::optional<FrontClass>& cls) {
  json j = {{"c_down", inv.c_down}, {"c_up", inv.c_up},   {"components", inv.components},
            {"rot", inv.rot},       {"tb", inv.tb},       {"winding", inv.winding},
            {"writhe", inv.writhe}};
  if (cls) {
    j["knot"] = {{"p", cls->cls.type.p}, {"q", cls->cls.type.q}};
    j["realizable"] = cls->realizable;
  }
  return j.dump();
}

std::string class_json(const LegendrianClass& c) {
  json j = {{"ambient", std::string(ambient_name(c.type.ambient))},
            {"p", c.type.p},
            {"q", c.type.q},
            {"rot", c.rot},
            {"twist", twist_value(c.twist)}};
  return j.dump();
}

std::string peaks_json(const TorusKnotType& t, std::int64_t window) {
  const TorusKnotType n = normalize_type(t);
  const PeakSet ps = peaks(n);
  json j = {{"ambient", std::string(ambient_name(n.ambient))},
            {"p", n.p},
            {"q", n.q},
            {"level", twist_value(ps.level)},
            {"finite", ps.finite()},
            {"rots", ps.window(window)}};
  if (!ps.finite()) {
    const auto& rs = std::get<ResidueSet>(ps.rots);
    j["modulus"] = rs.modulus;
    j["residues"] = rs.residues;
    j["window"] = window;
  }
  return j.dump();
}

std::string mountain_json(const TorusKnotType& t, const std::vector<MountainRow>& rows) {
  const TorusKnotType n = normalize_type(t);
  json levels = json::array();
  for (const MountainRow& row : rows) {
    levels.push_back({{"rots", row.rots}, {"twist", twist_value(row.twist)}});
  }
  json j = {{"ambient", std::string(ambient_name(n.ambient))},
            {"levels", levels},
            {"p", n.p},
            {"q", n.q}};
  return j.dump();
}

// ---------------------------------------------------------------------------
// SVG

namespace {

constexpr int kCol = 40;
constexpr int kRow = 20;
constexpr int kPad = 20;

std::string xy(int x, int y) { return std::to_string(x) + "," + std::to_string(y); }

std::string svg_open(int w, int h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(w) + "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " +
         std::to_string(w) + " " + std::to_string(h) + "\">\n";
}

// Horizontal tangents at both ends.
std::string bezier(int x0, int y0, int x1, int y1) {
  const int d = (x1 - x0) / 2;
  return "M" + xy(x0, y0) + " C" + xy(x0 + d, y0) + " " + xy(x1 - d, y1) + " " + xy(x1, y1);
}

}  // namespace

std::string render_front_svg(const FrontWord& f) {
  const FrontAnalysis a = analyze(f);
  const std::vector<int> signs = a.oriented ? event_signs(f, a) : std::vector<int>();
  const int n = static_cast<int>(f.events.size());
  const int cols = std::max(n, 1);
  int tallest = 0;
  for (int c : a.counts) tallest = std::max(tallest, c);
  const int width = 2 * kPad + cols * kCol;
  const int height = 2 * kPad + (tallest + 1) * kRow;
  auto x_at = [&](int gap) { return kPad + gap * kCol; };
  auto y_at = [&](int h) { return height - kPad - h * kRow; };

  std::vector<std::string> strands(a.components);
  auto piece = [&](int comp, int x0, int y0, int x1, int y1) {
    std::string& d = strands[comp];
    if (!d.empty()) d += ' ';
    d += y0 == y1 ? "M" + xy(x0, y0) + " L" + xy(x1, y1) : bezier(x0, y0, x1, y1);
  };

  std::string cusps;
  std::string crossings;
  if (n == 0) {
    for (int h = 1; h <= f.base; ++h) {
      piece(a.component[a.segment(0, h)], x_at(0), y_at(h), x_at(1), y_at(h));
    }
  }
  for (int k = 0; k < n; ++k) {
    const Event& e = f.events[k];
    const int i = e.height;
    const int x0 = x_at(k);
    const int x1 = x_at(k + 1);
    const int xm = (x0 + x1) / 2;
    const int before = a.counts[k];
    const int next = (k + 1) % n;
    for (int h = 1; h <= before; ++h) {
      int to = h;
      if (e.kind == EventKind::Cross && (h == i || h == i + 1)) continue;
      if (e.kind == EventKind::RightCusp && (h == i || h == i + 1)) continue;
      if (e.kind == EventKind::LeftCusp && h >= i) to = h + 2;
      if (e.kind == EventKind::RightCusp && h > i + 1) to = h - 2;
      piece(a.component[a.segment(k, h)], x0, y_at(h), x1, y_at(to));
    }
    const std::string sign = signs.empty() ? "0" : std::to_string(signs[k]);
    if (e.kind == EventKind::Cross) {
      // Ascending strand i -> i+1 is the under strand; break it at the middle.
      const int comp_lo = a.component[a.segment(k, i)];
      const int comp_hi = a.component[a.segment(k, i + 1)];
      const int ym = (y_at(i) + y_at(i + 1)) / 2;
      const int gap = kCol / 8;
      crossings += "<g class=\"crossing\" data-sign=\"" + sign + "\">";
      crossings += "<path class=\"over\" data-component=\"" + std::to_string(comp_hi) + "\" d=\"" +
                   bezier(x0, y_at(i + 1), x1, y_at(i)) + "\"/>";
      crossings += "<path class=\"under\" data-component=\"" + std::to_string(comp_lo) +
                   "\" d=\"" + bezier(x0, y_at(i), xm - gap, ym + (y_at(i) - ym) / 4) + " " +
                   bezier(xm + gap, ym - (y_at(i) - ym) / 4, x1, y_at(i + 1)) + "\"/>";
      crossings += "</g>\n";
    } else {
      const bool left = e.kind == EventKind::LeftCusp;
      const int xs = left ? x1 : x0;
      const int xt = left ? xm - kCol / 4 : xm + kCol / 4;
      const int yt = (y_at(i) + y_at(i + 1)) / 2;
      const int comp = left ? a.component[a.segment(next, i)] : a.component[a.segment(k, i)];
      const char* kind = left ? "left" : "right";
      const char* dir = signs.empty() ? "none" : signs[k] > 0 ? "up" : "down";
      cusps += "<path class=\"cusp\" data-kind=\"" + std::string(kind) + "\" data-dir=\"" + dir +
               "\" data-component=\"" + std::to_string(comp) + "\" d=\"" +
               bezier(xt, yt, xs, y_at(i)) + " " + bezier(xt, yt, xs, y_at(i + 1)) + "\"/>\n";
    }
  }

  std::string out = svg_open(width, height);
  out += "<style>path{fill:none;stroke:#000;stroke-width:1.5}"
         ".seam{stroke:#999;stroke-dasharray:4 3}</style>\n";
  const int right = x_at(cols);
  out += "<path class=\"seam\" d=\"M" + xy(x_at(0), kPad / 2) + " L" +
         xy(x_at(0), height - kPad / 2) + " M" + xy(right, kPad / 2) + " L" +
         xy(right, height - kPad / 2) + "\"/>\n";
  for (int c = 0; c < a.components; ++c) {
    out += "<path class=\"strand\" data-component=\"" + std::to_string(c) + "\" d=\"" +
           strands[c] + "\"/>\n";
  }
  out += cusps;
  out += crossings;
  out += "</svg>\n";
  return out;
}

std::string render_mountain_svg(const TorusKnotType& t, const std::vector<MountainRow>& rows) {
  const TorusKnotType n = normalize_type(t);
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (const MountainRow& row : rows) {
    if (row.rots.empty()) continue;
    lo = std::min(lo, row.rots.front());
    hi = std::max(hi, row.rots.back());
  }
  const int step = 24;
  const int width = 2 * kPad + static_cast<int>(hi - lo) * step;
  const int height = 2 * kPad + static_cast<int>(std::max<std::size_t>(rows.size(), 1) - 1) * step;
  auto x_at = [&](std::int64_t r) { return kPad + static_cast<int>(r - lo) * step; };
  auto y_at = [&](std::size_t row) { return kPad + static_cast<int>(row) * step; };
  const PeakSet ps = peaks(n);

  std::string out = svg_open(width, height);
  out += "<style>line{stroke:#666}circle{fill:#fff;stroke:#000}"
         "circle.peak{fill:#000}</style>\n";
  out += "<g class=\"mountain\" data-ambient=\"" + std::string(ambient_name(n.ambient)) +
         "\" data-p=\"" + std::to_string(n.p) + "\" data-q=\"" + std::to_string(n.q) + "\">\n";
  for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
    const auto& below = rows[r + 1].rots;
    for (std::int64_t rot : rows[r].rots) {
      for (std::int64_t d : {-1, 1}) {
        if (!std::binary_search(below.begin(), below.end(), rot + d)) continue;
        out += "<line class=\"stab\" data-sign=\"" + std::string(d > 0 ? "+" : "-") + "\" x1=\"" +
               std::to_string(x_at(rot)) + "\" y1=\"" + std::to_string(y_at(r)) + "\" x2=\"" +
               std::to_string(x_at(rot + d)) + "\" y2=\"" + std::to_string(y_at(r + 1)) + "\"/>\n";
      }
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const bool top = ps.level && rows[r].twist == ps.level;
    for (std::int64_t rot : rows[r].rots) {
      const bool peak = top && ps.contains(rot);
      out += "<circle class=\"" + std::string(peak ? "peak" : "node") + "\" data-rot=\"" +
             std::to_string(rot) + "\" data-twist=\"" +
             (rows[r].twist ? std::to_string(*rows[r].twist) : std::string("none")) +
             "\" cx=\"" + std::to_string(x_at(rot)) + "\" cy=\"" + std::to_string(y_at(r)) +
             "\" r=\"4\"/>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace legtorus
