#pragma once

// Text formats: the line-oriented .lfront front format, JSON documents for
// invariants and atlases, and SVG drawings.
//
// .lfront grammar, one directive per line, '#' starts a comment:
//
//   LFRONT 1                 header, first directive
//   knot <p> <q>             optional declared torus knot type, before base
//   base <n>                 strands at the seam, n >= 1
//   x <i> | l <i> | r <i>    crossing / left cusp / right cusp, in order
//   orient <h> <+|->         direction of the seam strand at height h
//
// At least one orient line is required. Tokens are separated by spaces or
// tabs; a trailing '\r' is ignored.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "legtorus/front.hpp"
#include "legtorus/invariants.hpp"

namespace legtorus {

class LfrontError : public std::runtime_error {
 public:
  LfrontError(int line, const std::string& message);
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  std::string message_;
};

FrontWord parse_lfront(std::string_view text);
std::string print_lfront(const FrontWord& f);

std::string invariants_json(const FrontInvariants& inv,
                            const std::optional<FrontClass>& cls = std::nullopt);
std::string class_json(const LegendrianClass& c);
std::string peaks_json(const TorusKnotType& t, std::int64_t window);
/// {"ambient","levels":[{"rots","twist"}],"p","q"} with the normalized type.
std::string mountain_json(const TorusKnotType& t, const std::vector<MountainRow>& rows);

/// One <path class="strand"> per component, one <path class="cusp"> per
/// cusp and one <g class="crossing"> per crossing; the over strand at a
/// crossing (the one of lesser slope) is drawn unbroken.
std::string render_front_svg(const FrontWord& f);
/// Lattice of (rot, twist) classes with stabilization edges.
std::string render_mountain_svg(const TorusKnotType& t, const std::vector<MountainRow>& rows);

}  // namespace legtorus
