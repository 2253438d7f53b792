#include "legtorus/invariants.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "legtorus/parallel.hpp"

namespace legtorus {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

bool is_even(std::int64_t v) { return floor_mod(v, 2) == 0; }

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw InvalidInput("bad integer '" + std::string(text) + "' in " + std::string(what));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Rotation numbers at the peak of the J^1(S^1) mountain range.
std::vector<std::int64_t> jet_peak_rots(std::int64_t p, std::int64_t q) {
  if (q == 1 || p >= 1) return {0};
  std::vector<std::int64_t> rots;
  for (std::int64_t l = 0; l * q < -p; ++l) {
    rots.push_back(p + 2 * l * q);
    rots.push_back(-(p + 2 * l * q));
  }
  std::sort(rots.begin(), rots.end());
  rots.erase(std::unique(rots.begin(), rots.end()), rots.end());
  return rots;
}

std::int64_t jet_peak_level(std::int64_t p, std::int64_t q) {
  if (q == 1) return 0;
  return p >= 1 ? p * (q - 1) : p * q;
}

}  // namespace

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::string_view ambient_name(Ambient a) {
  switch (a) {
    case Ambient::Jet:
      return "jet";
    case Ambient::SolidTorus:
      return "torus";
    case Ambient::S1xS2:
      return "s1s2";
  }
  return "?";
}

Ambient parse_ambient(std::string_view name) {
  if (name == "jet") return Ambient::Jet;
  if (name == "torus") return Ambient::SolidTorus;
  if (name == "s1s2") return Ambient::S1xS2;
  throw InvalidInput("unknown ambient '" + std::string(name) + "' (expected jet|torus|s1s2)");
}

OutOfScope::OutOfScope()
    : std::domain_error("unknot type (+-1,0) is out of scope (Eliashberg–Fraser)") {}

void validate(const TorusKnotType& t) {
  if (t.q == 0) {
    if (abs64(t.p) == 1) throw OutOfScope();
    throw InvalidInput("(" + std::to_string(t.p) + ",0) is not a knot type");
  }
  if (t.q < 0) throw InvalidInput("q must be positive, got " + std::to_string(t.q));
  if (gcd64(t.p, t.q) != 1) {
    throw InvalidInput("p and q must be coprime, got (" + std::to_string(t.p) + "," +
                       std::to_string(t.q) + ")");
  }
}

bool has_twist(const TorusKnotType& t) { return t.ambient != Ambient::S1xS2 || t.q >= 2; }

void validate(const LegendrianClass& c) {
  validate(c.type);
  if (has_twist(c.type) && !c.twist) {
    throw InvalidInput("class " + to_string(c.type) + " needs a twist value");
  }
  if (!has_twist(c.type) && c.twist) {
    throw InvalidInput("class " + to_string(c.type) + " has no twist invariant");
  }
}

TorusKnotType normalize_type(const TorusKnotType& t) {
  validate(t);
  TorusKnotType out = t;
  if (t.q == 1) {
    out.p = 0;
    return out;
  }
  if (t.ambient == Ambient::S1xS2) {
    const std::int64_t m = 2 * t.q;
    out.p = std::min(floor_mod(t.p, m), floor_mod(-t.p, m));
  }
  return out;
}

LegendrianClass normalize_class(const LegendrianClass& c) {
  validate(c);
  LegendrianClass out = c;
  out.type = normalize_type(c.type);
  return out;
}

bool topologically_isotopic(const TorusKnotType& a, const TorusKnotType& b) {
  validate(a);
  validate(b);
  if (a.ambient != b.ambient) throw InvalidInput("types live in different ambients");
  if (a.q != b.q) return false;
  return normalize_type(a).p == normalize_type(b).p;
}

// ---------------------------------------------------------------------------

bool ResidueSet::contains(std::int64_t r) const {
  return std::binary_search(residues.begin(), residues.end(), floor_mod(r, modulus));
}

std::int64_t ResidueSet::distance(std::int64_t r) const {
  std::int64_t best = modulus;
  for (std::int64_t res : residues) {
    std::int64_t d = floor_mod(r - res, modulus);
    best = std::min({best, d, modulus - d});
  }
  return best;
}

std::vector<std::int64_t> ResidueSet::window(std::int64_t w) const {
  std::vector<std::int64_t> out;
  for (std::int64_t r = -w; r <= w; ++r) {
    if (contains(r)) out.push_back(r);
  }
  return out;
}

bool PeakSet::contains(std::int64_t r) const {
  if (const auto* v = std::get_if<std::vector<std::int64_t>>(&rots)) {
    return std::binary_search(v->begin(), v->end(), r);
  }
  return std::get<ResidueSet>(rots).contains(r);
}

std::int64_t PeakSet::distance(std::int64_t r) const {
  if (const auto* v = std::get_if<std::vector<std::int64_t>>(&rots)) {
    std::int64_t best = -1;
    for (std::int64_t x : *v) {
      std::int64_t d = abs64(r - x);
      if (best < 0 || d < best) best = d;
    }
    return best;
  }
  return std::get<ResidueSet>(rots).distance(r);
}

std::vector<std::int64_t> PeakSet::window(std::int64_t w) const {
  if (const auto* v = std::get_if<std::vector<std::int64_t>>(&rots)) {
    std::vector<std::int64_t> out;
    for (std::int64_t x : *v) {
      if (abs64(x) <= w) out.push_back(x);
    }
    return out;
  }
  return std::get<ResidueSet>(rots).window(w);
}

PeakSet peaks(const TorusKnotType& t) {
  const TorusKnotType n = normalize_type(t);
  PeakSet out;
  switch (n.ambient) {
    case Ambient::Jet:
      out.level = jet_peak_level(n.p, n.q);
      out.rots = jet_peak_rots(n.p, n.q);
      break;
    case Ambient::SolidTorus:
      out.level = jet_peak_level(n.p, n.q) - (n.q == 1 ? 0 : n.p * n.q);
      out.rots = jet_peak_rots(n.p, n.q);
      break;
    case Ambient::S1xS2: {
      ResidueSet rs;
      if (n.q == 1) {
        rs.modulus = 1;
        rs.residues = {0};
      } else {
        rs.modulus = 2 * n.q;
        rs.residues = {floor_mod(n.p, rs.modulus), floor_mod(-n.p, rs.modulus)};
        std::sort(rs.residues.begin(), rs.residues.end());
        rs.residues.erase(std::unique(rs.residues.begin(), rs.residues.end()),
                          rs.residues.end());
        out.level = 0;
      }
      out.rots = std::move(rs);
      break;
    }
  }
  return out;
}

LegendrianClass stabilize_class(const LegendrianClass& c, Sign s) {
  validate(c);
  LegendrianClass out = c;
  if (out.twist) *out.twist -= 1;
  out.rot += static_cast<int>(s);
  return out;
}

namespace {

// Cone test against a known peak set. n is the number of stabilizations
// between the peak level and the class.
bool in_cone(const PeakSet& ps, std::int64_t n, std::int64_t rot) {
  if (n < 0) return false;
  if (const auto* v = std::get_if<std::vector<std::int64_t>>(&ps.rots)) {
    for (std::int64_t rho : *v) {
      if (abs64(rot - rho) <= n && is_even(rot - rho - n)) return true;
    }
    return false;
  }
  const auto& rs = std::get<ResidueSet>(ps.rots);
  for (std::int64_t res : rs.residues) {
    // Every member of a residue class mod 2q has the parity of res.
    if (!is_even(rot - res - n)) continue;
    std::int64_t d = floor_mod(rot - res, rs.modulus);
    if (std::min(d, rs.modulus - d) <= n) return true;
  }
  return false;
}

}  // namespace

bool is_realizable(const LegendrianClass& c) {
  const LegendrianClass n = normalize_class(c);
  const PeakSet ps = peaks(n.type);
  if (!ps.level) return true;
  return in_cone(ps, *ps.level - *n.twist, n.rot);
}

bool legendrian_isotopic(const LegendrianClass& a, const LegendrianClass& b) {
  validate(a);
  validate(b);
  if (a.type.ambient != b.type.ambient) throw InvalidInput("classes live in different ambients");
  if (!is_realizable(a)) throw InvalidInput("class " + to_string(a) + " is not realizable");
  if (!is_realizable(b)) throw InvalidInput("class " + to_string(b) + " is not realizable");
  if (a.type.q != b.type.q) return false;
  const LegendrianClass na = normalize_class(a);
  const LegendrianClass nb = normalize_class(b);
  return na.type.p == nb.type.p && na.twist == nb.twist && na.rot == nb.rot;
}

// ---------------------------------------------------------------------------

namespace {

void check_extent(std::int64_t depth, std::int64_t window) {
  if (depth < 0 || window < 0) throw InvalidInput("depth and window must be non-negative");
  if (depth > kMaxAtlasExtent || window > kMaxAtlasExtent) {
    throw InvalidInput("atlas extent exceeds limit " + std::to_string(kMaxAtlasExtent));
  }
}

MountainRow atlas_row(const PeakSet& ps, std::int64_t k, std::int64_t window) {
  MountainRow row;
  row.twist = *ps.level - k;
  for (std::int64_t r = -window; r <= window; ++r) {
    if (in_cone(ps, k, r)) row.rots.push_back(r);
  }
  return row;
}

std::vector<MountainRow> degenerate_range(const PeakSet& ps, std::int64_t window) {
  MountainRow row;
  row.rots = ps.window(window);
  return {row};
}

}  // namespace

std::vector<MountainRow> mountain_range(const TorusKnotType& t, std::int64_t depth,
                                        std::int64_t rot_window) {
  check_extent(depth, rot_window);
  const PeakSet ps = peaks(t);
  if (!ps.level) return degenerate_range(ps, rot_window);
  std::vector<MountainRow> rows(static_cast<std::size_t>(depth + 1));
  const std::int64_t count = depth + 1;
  LEGTORUS_OMP_PARALLEL_FOR_DYNAMIC
  for (std::int64_t k = 0; k < count; ++k) {
    rows[static_cast<std::size_t>(k)] = atlas_row(ps, k, rot_window);
  }
  return rows;
}

std::vector<MountainRow> mountain_range_serial(const TorusKnotType& t, std::int64_t depth,
                                               std::int64_t rot_window) {
  check_extent(depth, rot_window);
  const PeakSet ps = peaks(t);
  if (!ps.level) return degenerate_range(ps, rot_window);
  std::vector<MountainRow> rows;
  for (std::int64_t k = 0; k <= depth; ++k) {
    // Reference path goes through the public realizability test.
    MountainRow row;
    row.twist = *ps.level - k;
    const TorusKnotType n = normalize_type(t);
    for (std::int64_t r = -rot_window; r <= rot_window; ++r) {
      if (is_realizable(LegendrianClass{n, row.twist, r})) row.rots.push_back(r);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::int64_t natural_window(const TorusKnotType& t, std::int64_t depth) {
  const PeakSet ps = peaks(t);
  if (const auto* v = std::get_if<std::vector<std::int64_t>>(&ps.rots)) {
    std::int64_t m = 0;
    for (std::int64_t x : *v) m = std::max(m, abs64(x));
    return m + depth;
  }
  return 2 * normalize_type(t).q + depth;
}

// ---------------------------------------------------------------------------

TorusKnotType act_type(const ContactMap& m, const TorusKnotType& t) {
  validate(t);
  if (t.ambient != Ambient::S1xS2) throw InvalidInput("contact maps act on S1xS2 only");
  TorusKnotType out = t;
  switch (m.kind) {
    case ContactMap::Kind::BTop:
      out.p = -t.p;
      return out;
    case ContactMap::Kind::RC:
      out.p = t.p + t.q;
      break;
    case ContactMap::Kind::RCInv:
      out.p = t.p - t.q;
      break;
    case ContactMap::Kind::G:
      out.p = t.p - 2 * t.q;
      break;
    case ContactMap::Kind::GInv:
      out.p = t.p + 2 * t.q;
      break;
    case ContactMap::Kind::H:
      if (m.k < 0) throw InvalidInput("H(k) needs k >= 0");
      out.p = -t.p - 2 * m.k * t.q;
      break;
  }
  return normalize_type(out);
}

LegendrianClass act(const ContactMap& m, const LegendrianClass& c) {
  validate(c);
  if (m.kind == ContactMap::Kind::BTop) {
    throw InvalidInput("b is a topological map and does not act on Legendrian classes");
  }
  LegendrianClass out = c;
  out.type = act_type(m, c.type);
  if (m.kind == ContactMap::Kind::RC) out.rot += c.type.q;
  if (m.kind == ContactMap::Kind::RCInv) out.rot -= c.type.q;
  return out;
}

LegendrianClass change_ambient(const LegendrianClass& c, Ambient target) {
  validate(c);
  const Ambient from = c.type.ambient;
  if (from == target) return c;
  const std::int64_t p = c.type.p;
  const std::int64_t q = c.type.q;
  auto twist_shift = [&](std::int64_t sign) {
    if (q < 2) throw InvalidInput("tw is undefined for q = 1");
    LegendrianClass out = c;
    *out.twist += sign * p * q;
    return out;
  };
  if (from == Ambient::Jet && target == Ambient::SolidTorus) {
    auto out = twist_shift(-1);
    out.type.ambient = Ambient::SolidTorus;
    return out;
  }
  if (from == Ambient::SolidTorus && target == Ambient::Jet) {
    auto out = twist_shift(+1);
    out.type.ambient = Ambient::Jet;
    return out;
  }
  if (from == Ambient::SolidTorus && target == Ambient::S1xS2) {
    LegendrianClass out = c;
    out.type.ambient = Ambient::S1xS2;
    if (q == 1) out.twist.reset();
    out.type = normalize_type(out.type);
    return out;
  }
  if (from == Ambient::Jet && target == Ambient::S1xS2) {
    return change_ambient(change_ambient(c, Ambient::SolidTorus), Ambient::S1xS2);
  }
  throw InvalidInput("no embedding from " + std::string(ambient_name(from)) + " into " +
                     std::string(ambient_name(target)));
}

// ---------------------------------------------------------------------------

TorusKnotType parse_type_literal(std::string_view text, Ambient ambient) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw InvalidInput("type literal must be 'p,q': " + std::string(text));
  TorusKnotType t{ambient, parse_int(parts[0], "type"), parse_int(parts[1], "type")};
  validate(t);
  return t;
}

LegendrianClass parse_class_literal(std::string_view text, std::optional<Ambient> ambient) {
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    Ambient prefixed = parse_ambient(text.substr(0, colon));
    if (ambient && *ambient != prefixed) {
      throw InvalidInput("class literal ambient disagrees with --ambient");
    }
    ambient = prefixed;
    text = text.substr(colon + 1);
  }
  if (!ambient) throw InvalidInput("class literal needs an ambient");
  auto parts = split(text, ',');
  if (parts.size() != 3 && parts.size() != 4) {
    throw InvalidInput("class literal must be 'p,q[,tw],rot': " + std::string(text));
  }
  LegendrianClass c;
  c.type = {*ambient, parse_int(parts[0], "class"), parse_int(parts[1], "class")};
  if (parts.size() == 4) c.twist = parse_int(parts[2], "class");
  c.rot = parse_int(parts.back(), "class");
  validate(c);
  return c;
}

std::string to_string(const TorusKnotType& t) {
  return std::string(ambient_name(t.ambient)) + ":" + std::to_string(t.p) + "," +
         std::to_string(t.q);
}

std::string to_string(const LegendrianClass& c) {
  std::string s = to_string(c.type);
  if (c.twist) s += "," + std::to_string(*c.twist);
  return s + "," + std::to_string(c.rot);
}

}  // namespace legtorus
