#pragma once

// Knot types and Legendrian classes of torus knots in J^1(S^1), in a tight
// solid torus, and in S^1 x S^2 with its standard tight contact structure.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace legtorus {

enum class Ambient { Jet, SolidTorus, S1xS2 };

std::string_view ambient_name(Ambient a);
Ambient parse_ambient(std::string_view name);

/// Malformed input: non-coprime pair, q < 0, mixed ambients, unrealizable
/// class handed to a decision procedure.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The (+-1, 0) unknot types. Their Legendrian classification is the
/// Eliashberg-Fraser theorem and is not modelled here.
class OutOfScope : public std::domain_error {
 public:
  OutOfScope();
};

struct TorusKnotType {
  Ambient ambient = Ambient::Jet;
  std::int64_t p = 0;
  std::int64_t q = 1;

  friend bool operator==(const TorusKnotType&, const TorusKnotType&) = default;
};

/// Throws OutOfScope for unknots and InvalidInput for anything else that is
/// not a torus knot type with q >= 1.
void validate(const TorusKnotType& t);

/// True when the twist invariant (tb in Jet, tw elsewhere) is defined.
bool has_twist(const TorusKnotType& t);

struct LegendrianClass {
  TorusKnotType type;
  std::optional<std::int64_t> twist;
  std::int64_t rot = 0;

  friend bool operator==(const LegendrianClass&, const LegendrianClass&) = default;
};

/// Checks the type and that the twist field is present exactly when defined.
void validate(const LegendrianClass& c);

/// Canonical representative of the smooth knot type.
///   Jet, SolidTorus: (p,1) -> (0,1), otherwise unchanged.
///   S1xS2, q >= 2:   p -> min(p mod 2q, -p mod 2q), which lies in [1, q-1].
///   S1xS2, q == 1:   (0,1).
TorusKnotType normalize_type(const TorusKnotType& t);
LegendrianClass normalize_class(const LegendrianClass& c);

bool topologically_isotopic(const TorusKnotType& a, const TorusKnotType& b);

/// Infinite rotation set {r : r = +-p (mod 2q)}, stored as residues.
struct ResidueSet {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues;  // sorted, in [0, modulus)

  bool contains(std::int64_t r) const;
  /// Distance from r to the nearest member.
  std::int64_t distance(std::int64_t r) const;
  /// Members in [-window, window], ascending.
  std::vector<std::int64_t> window(std::int64_t window) const;
};

struct PeakSet {
  /// Maximal twist value. Absent for S1xS2 with q = 1, where every rotation
  /// number is realized and there is no twist invariant.
  std::optional<std::int64_t> level;
  std::variant<std::vector<std::int64_t>, ResidueSet> rots;

  bool finite() const { return std::holds_alternative<std::vector<std::int64_t>>(rots); }
  bool contains(std::int64_t r) const;
  std::int64_t distance(std::int64_t r) const;
  std::vector<std::int64_t> window(std::int64_t window) const;
};

PeakSet peaks(const TorusKnotType& t);

enum class Sign : int { Minus = -1, Plus = 1 };

LegendrianClass stabilize_class(const LegendrianClass& c, Sign s);

/// True iff c lies in the stabilization cone of some peak.
bool is_realizable(const LegendrianClass& c);

/// Throws InvalidInput when either class is not realizable.
bool legendrian_isotopic(const LegendrianClass& a, const LegendrianClass& b);

struct MountainRow {
  std::optional<std::int64_t> twist;
  std::vector<std::int64_t> rots;

  friend bool operator==(const MountainRow&, const MountainRow&) = default;
};

inline constexpr std::int64_t kMaxAtlasExtent = 10000;

/// Rows peak, peak-1, ..., peak-depth of the stabilization cone, restricted
/// to |rot| <= rot_window.
std::vector<MountainRow> mountain_range(const TorusKnotType& t, std::int64_t depth,
                                        std::int64_t rot_window);

/// Single-threaded reference for mountain_range, built row by row from
/// is_realizable.
std::vector<MountainRow> mountain_range_serial(const TorusKnotType& t, std::int64_t depth,
                                               std::int64_t rot_window);

/// Smallest window that shows every class of the first depth+1 rows when
/// the peak set is finite; 2q + depth otherwise.
std::int64_t natural_window(const TorusKnotType& t, std::int64_t depth);

/// Contactomorphisms of (S^1 x S^2, xi_st) and the topological reflection b.
struct ContactMap {
  enum class Kind { RC, RCInv, G, GInv, H, BTop };
  Kind kind = Kind::RC;
  std::int64_t k = 0;  // only for H

  static ContactMap rc() { return {Kind::RC, 0}; }
  static ContactMap rc_inv() { return {Kind::RCInv, 0}; }
  static ContactMap g() { return {Kind::G, 0}; }
  static ContactMap g_inv() { return {Kind::GInv, 0}; }
  static ContactMap h(std::int64_t k) { return {Kind::H, k}; }
  static ContactMap b_top() { return {Kind::BTop, 0}; }
};

LegendrianClass act(const ContactMap& m, const LegendrianClass& c);
TorusKnotType act_type(const ContactMap& m, const TorusKnotType& t);

/// Moves a class along J^1(S^1) -> SolidTorus -> S1xS2 (and back from
/// SolidTorus to Jet). tw = tb - pq.
LegendrianClass change_ambient(const LegendrianClass& c, Ambient target);

/// "p,q[,tw],rot" with the ambient supplied separately, or the prefixed
/// form "ambient:p,q[,tw],rot".
LegendrianClass parse_class_literal(std::string_view text,
                                    std::optional<Ambient> ambient = std::nullopt);
TorusKnotType parse_type_literal(std::string_view text, Ambient ambient);

std::string to_string(const TorusKnotType& t);
std::string to_string(const LegendrianClass& c);

// Integer helpers shared with the front code.
std::int64_t floor_mod(std::int64_t a, std::int64_t m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace legtorus
