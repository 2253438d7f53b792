// legtorus: command-line front end for the Legendrian torus knot library.
//
// Exit codes: 0 success or affirmative decision, 1 negative decision,
// 2 usage or data error, 3 certification ran out of budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "legtorus/moves.hpp"
#include "legtorus/search.hpp"
#include "legtorus/textio.hpp"

using namespace legtorus;

namespace {

enum Exit { kYes = 0, kNo = 1, kError = 2, kUnknown = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FrontWord load_front(const std::string& path) {
  try {
    return parse_lfront(read_file(path));
  } catch (const LfrontError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ": " + e.message());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string invariants_text(const FrontInvariants& inv, const std::optional<FrontClass>& cls) {
  std::ostringstream os;
  os << "writhe " << inv.writhe << "\nc_up " << inv.c_up << "\nc_down " << inv.c_down << "\ntb "
     << inv.tb << "\nrot " << inv.rot << "\nwinding " << inv.winding << "\n";
  if (cls) {
    os << "class " << to_string(cls->cls) << "\n";
    if (!cls->realizable) os << "warning: declared knot type has no class with these invariants\n";
  }
  return os.str();
}

std::string rows_text(const TorusKnotType& t, const std::vector<MountainRow>& rows) {
  std::ostringstream os;
  os << to_string(normalize_type(t)) << "\n";
  for (const MountainRow& row : rows) {
    os << (row.twist ? std::to_string(*row.twist) : std::string("-")) << ":";
    for (std::int64_t r : row.rots) os << " " << r;
    os << "\n";
  }
  return os.str();
}

struct Flags {
  bool json = false;
  std::string file, file2, out, svg;
  std::string kind, variant = "down";
  std::int64_t p = 0, q = 0;
  std::string ambient;
  std::vector<std::string> classes, types;
  std::int64_t depth = 3;
  std::optional<std::int64_t> window;
  std::string sign;
  int height = 1, slot = 0;
  std::string apply;
  bool list = false;
  std::int64_t budget = 100000;
  std::size_t slack = 3;
  bool serial = false;
};

int cmd_invariants(const Flags& fl) {
  const FrontWord f = load_front(fl.file);
  const FrontInvariants inv = front_invariants(f);
  std::optional<FrontClass> cls;
  if (f.knot) cls = to_class(f);
  if (!fl.svg.empty()) write_output(fl.svg, render_front_svg(f));
  std::cout << (fl.json ? invariants_json(inv, cls) + "\n" : invariants_text(inv, cls));
  return kYes;
}

int cmd_generate(const Flags& fl) {
  FrontWord f;
  if (fl.kind == "zero") {
    f = zero_section();
  } else if (fl.kind == "braid") {
    f = positive_braid(fl.p, fl.q);
  } else if (fl.kind == "negpeak") {
    if (fl.variant != "up" && fl.variant != "down") throw UsageError("--variant must be up or down");
    f = negative_peak(fl.p, fl.q, fl.variant == "up" ? PeakVariant::Up : PeakVariant::Down);
  } else if (fl.kind == "unknot") {
    f = unknot_front();
  } else {
    throw UsageError("--kind must be braid, negpeak, zero or unknot");
  }
  write_output(fl.out, print_lfront(f));
  return kYes;
}

Ambient ambient_flag(const Flags& fl) { return parse_ambient(fl.ambient); }

int decision(bool yes, const Flags& fl, const char* yes_text, const char* no_text) {
  if (fl.json) {
    std::cout << nlohmann::json{{"result", yes}}.dump() << "\n";
  } else {
    std::cout << (yes ? yes_text : no_text) << "\n";
  }
  return yes ? kYes : kNo;
}

int cmd_isotopic(const Flags& fl) {
  if (fl.classes.size() != 2) throw UsageError("isotopic needs exactly two --class values");
  const Ambient amb = ambient_flag(fl);
  const auto a = parse_class_literal(fl.classes[0], amb);
  const auto b = parse_class_literal(fl.classes[1], amb);
  return decision(legendrian_isotopic(a, b), fl, "legendrian isotopic", "not legendrian isotopic");
}

int cmd_topiso(const Flags& fl) {
  if (fl.types.size() != 2) throw UsageError("topiso needs exactly two --type values");
  const Ambient amb = ambient_flag(fl);
  const auto a = parse_type_literal(fl.types[0], amb);
  const auto b = parse_type_literal(fl.types[1], amb);
  return decision(topologically_isotopic(a, b), fl, "isotopic", "not isotopic");
}

TorusKnotType single_type(const Flags& fl) {
  if (fl.types.size() != 1) throw UsageError("expected exactly one --type");
  return parse_type_literal(fl.types[0], ambient_flag(fl));
}

int cmd_peaks(const Flags& fl) {
  const TorusKnotType t = single_type(fl);
  const std::int64_t window = fl.window.value_or(natural_window(t, 0));
  if (window < 0 || window > kMaxAtlasExtent) throw InvalidInput("--window out of range");
  if (fl.json) {
    std::cout << peaks_json(t, window) << "\n";
    return kYes;
  }
  const PeakSet ps = peaks(t);
  std::cout << to_string(normalize_type(t)) << "\nlevel "
            << (ps.level ? std::to_string(*ps.level) : std::string("-")) << "\nrots";
  for (std::int64_t r : ps.window(window)) std::cout << " " << r;
  std::cout << (ps.finite() ? "" : " ...") << "\n";
  return kYes;
}

int cmd_atlas(const Flags& fl) {
  const TorusKnotType t = single_type(fl);
  const std::int64_t window = fl.window.value_or(natural_window(t, fl.depth));
  const auto rows = mountain_range(t, fl.depth, window);
  if (!fl.svg.empty()) write_output(fl.svg, render_mountain_svg(t, rows));
  std::cout << (fl.json ? mountain_json(t, rows) + "\n" : rows_text(t, rows));
  return kYes;
}

int cmd_stabilize(const Flags& fl) {
  if (fl.sign != "+" && fl.sign != "-") throw UsageError("--sign must be + or -");
  const FrontWord f = load_front(fl.file);
  const FrontWord g = stabilize_front(f, fl.sign == "+" ? Sign::Plus : Sign::Minus, fl.height, fl.slot);
  write_output(fl.out, print_lfront(g));
  return kYes;
}

int cmd_move(const Flags& fl) {
  const FrontWord f = load_front(fl.file);
  if (fl.list) {
    const auto moves = legal_moves(f);
    if (fl.json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& m : moves) arr.push_back(to_string(m));
      std::cout << arr.dump() << "\n";
    } else {
      for (const auto& m : moves) std::cout << to_string(m) << "\n";
    }
    return kYes;
  }
  if (fl.apply.empty()) throw UsageError("move needs --apply RULE@POS or --list");
  write_output(fl.out, print_lfront(apply_move(f, parse_move(fl.apply))));
  return kYes;
}

int cmd_certify(const Flags& fl) {
  const FrontWord a = load_front(fl.file);
  const FrontWord b = load_front(fl.file2);
  SearchOptions opts;
  opts.budget = fl.budget;
  opts.slack = fl.slack;
  opts.parallel = !fl.serial;
  const Certificate c = certify_isotopic(a, b, opts);
  nlohmann::json j;
  std::ostringstream os;
  int code = kUnknown;
  if (const auto* eq = std::get_if<Equivalent>(&c)) {
    std::vector<std::string> path;
    for (const auto& m : eq->path) path.push_back(to_string(m));
    j = {{"verdict", "equivalent"}, {"explored", eq->explored}, {"path", path}};
    os << "equivalent (" << path.size() << " moves, " << eq->explored << " states)\n";
    for (const auto& m : path) os << m << "\n";
    code = kYes;
  } else if (const auto* d = std::get_if<DistinctInvariants>(&c)) {
    j = {{"verdict", "distinct"}, {"witness", d->witness}};
    os << "distinct: " << d->witness << "\n";
    code = kNo;
  } else {
    const auto& in = std::get<Inconclusive>(c);
    j = {{"verdict", "inconclusive"}, {"explored", in.explored}};
    os << "inconclusive after " << in.explored << " states\n";
  }
  std::cout << (fl.json ? j.dump() + "\n" : os.str());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian torus knots: invariants, classification, atlases, front moves"};
  app.require_subcommand(1);
  Flags fl;
  app.add_flag("--json", fl.json, "Machine-readable output");
  app.fallthrough();

  auto* inv = app.add_subcommand("invariants", "Classical invariants of a front");
  inv->add_option("file", fl.file, ".lfront file")->required();
  inv->add_option("--svg", fl.svg, "Also draw the front to this SVG file");

  auto* gen = app.add_subcommand("generate", "Write a canonical front");
  gen->add_option("--kind", fl.kind, "braid | negpeak | zero | unknot")->required();
  gen->add_option("--p", fl.p);
  gen->add_option("--q", fl.q);
  gen->add_option("--variant", fl.variant, "up | down (negpeak)");
  gen->add_option("-o,--output", fl.out);

  auto* iso = app.add_subcommand("isotopic", "Legendrian isotopy of two classes");
  iso->add_option("--ambient", fl.ambient, "jet | torus | s1s2")->required();
  iso->add_option("--class", fl.classes, "p,q[,tw],rot")->required();

  auto* top = app.add_subcommand("topiso", "Topological isotopy of two knot types");
  top->add_option("--ambient", fl.ambient)->required();
  top->add_option("--type", fl.types, "p,q")->required();

  for (const char* name : {"peaks", "atlas"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "peaks" ? "Maximal classes"
                                                                      : "Mountain range");
    sub->add_option("--ambient", fl.ambient)->required();
    sub->add_option("--type", fl.types, "p,q")->required();
    sub->add_option("--window", fl.window, "Rotation window |rot| <= R");
    if (std::string(name) == "atlas") {
      sub->add_option("--depth", fl.depth, "Stabilization depth");
      sub->add_option("--svg", fl.svg, "Draw the mountain range to this SVG file");
    } else {
      sub->add_option("--depth", fl.depth, "Ignored for peaks");
    }
  }

  auto* stab = app.add_subcommand("stabilize", "Add a stabilization zigzag");
  stab->add_option("file", fl.file)->required();
  stab->add_option("--sign", fl.sign, "+ | -")->required();
  stab->add_option("--height", fl.height, "Strand height in the slot");
  stab->add_option("--slot", fl.slot, "Event position");
  stab->add_option("-o,--output", fl.out);

  auto* mv = app.add_subcommand("move", "Apply or list front moves");
  mv->add_option("file", fl.file)->required();
  mv->add_option("--apply", fl.apply, "RULE@POS or RULE@POS:HEIGHT");
  mv->add_flag("--list", fl.list, "List legal moves");
  mv->add_option("-o,--output", fl.out);

  auto* cert = app.add_subcommand("certify", "Search for a move sequence between two fronts");
  cert->add_option("first", fl.file)->required();
  cert->add_option("second", fl.file2)->required();
  cert->add_option("--budget", fl.budget, "Maximum number of states");
  cert->add_option("--slack", fl.slack, "Extra events allowed beyond the longer input");
  cert->add_flag("--serial", fl.serial, "Single-threaded expansion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    if (*inv) return cmd_invariants(fl);
    if (*gen) return cmd_generate(fl);
    if (*iso) return cmd_isotopic(fl);
    if (*top) return cmd_topiso(fl);
    if (app.got_subcommand("peaks")) return cmd_peaks(fl);
    if (app.got_subcommand("atlas")) return cmd_atlas(fl);
    if (*stab) return cmd_stabilize(fl);
    if (*mv) return cmd_move(fl);
    if (*cert) return cmd_certify(fl);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
