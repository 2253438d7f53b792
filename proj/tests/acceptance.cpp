// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "legtorus/search.hpp"
#include "legtorus/textio.hpp"
#include "support.hpp"

using namespace legtorus;
using legtorus::testing::coprime_pairs;

namespace {

// Collects the first few failures of a criterion.
struct Report {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  std::size_t failed = 0;
};

LegendrianClass cls(Ambient a, std::int64_t p, std::int64_t q, std::optional<std::int64_t> tw,
                    std::int64_t rot) {
  return {{a, p, q}, tw, rot};
}

void example_reproduction(Report& r) {
  const auto l0 = cls(Ambient::S1xS2, 1, 2, -1, 0);
  const auto lm = cls(Ambient::S1xS2, -1, 2, 0, -1);
  const auto lp = cls(Ambient::S1xS2, -1, 2, 0, 1);
  for (const auto& a : {l0, lm, lp}) {
    for (const auto& b : {l0, lm, lp}) {
      r.expect(topologically_isotopic(a.type, b.type), to_string(a) + " ~top " + to_string(b));
    }
  }
  r.expect(legendrian_isotopic(l0, stabilize_class(lm, Sign::Plus)), "L0 ~ S+(L-1)");
  r.expect(legendrian_isotopic(l0, stabilize_class(lp, Sign::Minus)), "L0 ~ S-(L1)");
  r.expect(!legendrian_isotopic(lm, lp), "L-1 !~ L1");
}

void maximal_generators(Report& r) {
  for (auto [p, q] : coprime_pairs(1, 6, 2, 5)) {
    const auto inv = front_invariants(positive_braid(p, q));
    r.expect(inv.tb == p * (q - 1) && inv.rot == 0 && inv.winding == q && inv.components == 1,
             "braid " + std::to_string(p) + "," + std::to_string(q));
  }
  for (auto [p, q] : coprime_pairs(-6, -1, 2, 5)) {
    for (auto v : {PeakVariant::Down, PeakVariant::Up}) {
      const auto inv = front_invariants(negative_peak(p, q, v));
      const std::int64_t rot = v == PeakVariant::Down ? -p : p;
      r.expect(inv.tb == p * q && inv.rot == rot && inv.winding == q && inv.components == 1,
               "negpeak " + std::to_string(p) + "," + std::to_string(q));
    }
  }
}

void peak_sets(Report& r) {
  const auto a = peaks({Ambient::Jet, -5, 2});
  r.expect(a.level == -10, "Jet (-5,2) level");
  r.expect(a.window(100) == std::vector<std::int64_t>{-5, -3, -1, 1, 3, 5}, "Jet (-5,2) rots");
  const auto b = peaks({Ambient::Jet, 2, 3});
  r.expect(b.level == 4 && b.window(100) == std::vector<std::int64_t>{0}, "Jet (2,3)");
  std::vector<std::int64_t> odd;
  for (std::int64_t x = -9; x <= 9; x += 2) odd.push_back(x);
  r.expect(peaks({Ambient::S1xS2, 1, 2}).window(9) == odd, "S1xS2 (1,2) window 9");
}

void cone_realizability(Report& r) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto c = legtorus::testing::random_realizable(rng, static_cast<Ambient>(i % 3));
    const std::string name = to_string(c);
    r.expect(is_realizable(c), name + " realizable");
    r.expect(is_realizable(stabilize_class(c, Sign::Plus)), "S+ " + name);
    r.expect(is_realizable(stabilize_class(c, Sign::Minus)), "S- " + name);
    const auto ps = peaks(c.type);
    if (ps.level && *c.twist < *ps.level) {
      r.expect(is_realizable(cls(c.type.ambient, c.type.p, c.type.q, *c.twist + 1, c.rot + 1)) ||
                   is_realizable(cls(c.type.ambient, c.type.p, c.type.q, *c.twist + 1, c.rot - 1)),
               "parent of " + name);
    }
  }
  r.expect(!is_realizable(cls(Ambient::Jet, -5, 2, -10, 0)), "Jet((-5,2),-10,0) rejected");
  r.expect(!is_realizable(cls(Ambient::Jet, 2, 3, 5, 0)), "Jet((2,3),5,0) rejected");
}

// Orbit of p mod 2q under r -> r + 2q and r -> -r, on residues.
std::vector<bool> residue_orbit(std::int64_t p, std::int64_t q) {
  const std::int64_t m = 2 * q;
  std::vector<bool> seen(m, false);
  std::vector<std::int64_t> stack{floor_mod(p, m)};
  seen[stack[0]] = true;
  while (!stack.empty()) {
    const std::int64_t x = stack.back();
    stack.pop_back();
    for (std::int64_t y : {floor_mod(x + 2 * q, m), floor_mod(-x, m)}) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

void congruence_oracle(Report& r) {
  for (std::int64_t q = 2; q <= 6; ++q) {
    for (auto [p, q1] : coprime_pairs(-12, 12, q, q)) {
      const auto orbit = residue_orbit(p, q);
      for (auto [p2, q2] : coprime_pairs(-12, 12, q, q)) {
        const bool oracle = orbit[floor_mod(p2, 2 * q)];
        r.expect(topologically_isotopic({Ambient::S1xS2, p, q}, {Ambient::S1xS2, p2, q}) == oracle,
                 std::to_string(p) + " vs " + std::to_string(p2) + " mod " + std::to_string(2 * q));
      }
    }
  }
}

void contact_maps(Report& r) {
  std::mt19937 rng(77);
  std::vector<LegendrianClass> sample;
  for (int i = 0; i < 100; ++i) {
    sample.push_back(legtorus::testing::random_realizable(rng, Ambient::S1xS2));
  }
  for (const auto& c : sample) {
    r.expect(legendrian_isotopic(c, act(ContactMap::g(), c)), "G fixes " + to_string(c));
    for (std::int64_t k = 0; k <= 3; ++k) {
      r.expect(legendrian_isotopic(c, act(ContactMap::h(k), c)), "H fixes " + to_string(c));
    }
    r.expect(act(ContactMap::rc(), c).rot == c.rot + c.type.q, "RC shift " + to_string(c));
  }
  for (const auto& a : sample) {
    for (const auto& b : sample) {
      r.expect(legendrian_isotopic(a, b) ==
                   legendrian_isotopic(act(ContactMap::rc(), a), act(ContactMap::rc(), b)),
               "RC pairing " + to_string(a) + " " + to_string(b));
    }
  }
}

void peak_union(Report& r) {
  const std::int64_t window = 30;
  for (auto [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {1, 2}, {1, 3}, {2, 3}, {3, 4}}) {
    std::set<std::int64_t> uni;
    for (std::int64_t pp = -1; pp >= -40; --pp) {
      if (floor_mod(pp - p, 2 * q) != 0 && floor_mod(pp + p, 2 * q) != 0) continue;
      for (std::int64_t x : peaks({Ambient::SolidTorus, pp, q}).window(window)) uni.insert(x);
    }
    const auto row = mountain_range({Ambient::S1xS2, p, q}, 0, window).front();
    r.expect(row.twist == 0 && row.rots == std::vector<std::int64_t>(uni.begin(), uni.end()),
             "union for (" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
}

void front_calculus(Report& r) {
  std::vector<FrontWord> fronts = legtorus::testing::generated_fronts();
  for (auto [p, q] : coprime_pairs(1, 6, 2, 5)) fronts.push_back(positive_braid(p, q));
  for (auto [p, q] : coprime_pairs(-6, -1, 2, 5)) {
    fronts.push_back(negative_peak(p, q, PeakVariant::Down));
    fronts.push_back(negative_peak(p, q, PeakVariant::Up));
  }
  std::mt19937 rng(99);
  for (int i = 0; i < 500; ++i) fronts.push_back(legtorus::testing::fuzz_front(rng, 12));

  for (const FrontWord& f : fronts) {
    const auto a = analyze(f);
    const auto inv = front_counts(f, a);
    for (const MoveInstance& m : legal_moves(f)) {
      const FrontWord g = apply_move(f, m);
      const auto b = analyze(g);
      const auto ginv = front_counts(g, b);
      r.expect(ginv.winding == inv.winding && ginv.tb == inv.tb && ginv.rot == inv.rot &&
                   b.components == a.components,
               to_string(m) + " on\n" + print_lfront(f));
    }
    if (a.components != 1) continue;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto st = front_invariants(stabilize_front(f, s, 1, 0));
      r.expect(st.tb == inv.tb - 1 && st.rot == inv.rot + static_cast<int>(s) &&
                   st.winding == inv.winding,
               "stabilization deltas");
    }
    const auto mi = front_invariants(mirror_z(f));
    r.expect(mi.tb == inv.tb && mi.rot == -inv.rot && mi.winding == inv.winding, "mirror");
    const auto ri = front_invariants(reverse_orientation(f));
    r.expect(ri.tb == inv.tb && ri.rot == -inv.rot && ri.winding == -inv.winding, "reversal");
  }
}

void certification(Report& r) {
  std::mt19937 rng(4242);
  for (int i = 0; i < 1000; ++i) {
    const auto a = legtorus::testing::fuzz_front(rng, 5, 10);
    const auto b = legtorus::testing::fuzz_front(rng, 5, 10);
    const auto ia = front_invariants(a);
    const auto ib = front_invariants(b);
    const bool same = ia.winding == ib.winding && ia.tb == ib.tb && ia.rot == ib.rot;
    const auto c = certify_isotopic(a, b, 100);
    if (const auto* eq = std::get_if<Equivalent>(&c)) {
      r.expect(same, "Equivalent across distinct invariants");
      r.expect(canonical_key(replay(a, eq->path)) == canonical_key(b), "path replays");
    }
    if (!same) r.expect(std::holds_alternative<DistinctInvariants>(c), "distinct detected");
  }

  for (const FrontWord& f : legtorus::testing::generated_fronts()) {
    MoveInstance turn{Rule::RotL, 0, 0};
    if (!is_legal(f, turn)) turn.rule = Rule::RotR;
    if (f.events.size() < 2 || !is_legal(f, turn)) continue;
    const FrontWord g = apply_move(f, turn);
    r.expect(std::holds_alternative<Equivalent>(certify_isotopic(f, g, 100000)), "seam rotation");
  }

  const FrontWord looped = apply_move(zero_section(), {Rule::R1aAdd, 0, 1});
  const FrontWord a = stabilize_front(looped, Sign::Plus, 1, 0);
  const FrontWord b = stabilize_front(looped, Sign::Plus, 3, 1);
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = certify_isotopic(a, b, 100000);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto* eq = std::get_if<Equivalent>(&c);
  r.expect(eq != nullptr, "S+ placements equivalent");
  r.expect(eq && canonical_key(replay(a, eq->path)) == canonical_key(b), "S+ path replays");
  r.expect(secs < 10.0, "S+ placement search under 10 s");
}

void round_trip(Report& r) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(LEGTORUS_CORPUS_DIR)) {
    if (entry.path().extension() == ".lfront") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  r.expect(files.size() >= 50, "corpus has " + std::to_string(files.size()) + " files");
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    const FrontWord f = parse_lfront(ss.str());
    const std::string printed = print_lfront(f);
    r.expect(parse_lfront(printed) == f, "parse(print) " + path.filename().string());
    r.expect(print_lfront(parse_lfront(printed)) == printed, "print stable " + path.filename().string());
    r.expect(render_front_svg(f) == render_front_svg(parse_lfront(printed)), "svg " + path.string());
    const auto a = analyze(f);
    if (a.components == 1) {
      const auto inv = front_invariants(f);
      r.expect(invariants_json(inv) == invariants_json(front_invariants(parse_lfront(printed))),
               "json " + path.filename().string());
    }
  }
  for (auto [p, q] : coprime_pairs(-7, 7, 1, 5)) {
    for (Ambient amb : {Ambient::Jet, Ambient::SolidTorus, Ambient::S1xS2}) {
      const TorusKnotType t{amb, p, q};
      const auto w = natural_window(t, 4);
      const auto once = mountain_json(t, mountain_range(t, 4, w));
      r.expect(once == mountain_json(t, mountain_range_serial(t, 4, w)), "atlas json");
      r.expect(render_mountain_svg(t, mountain_range(t, 4, w)) ==
                   render_mountain_svg(t, mountain_range_serial(t, 4, w)),
               "atlas svg");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Report&)>>> criteria{
      {"example reproduction", example_reproduction},
      {"maximal-invariant generators", maximal_generators},
      {"peak sets", peak_sets},
      {"cone and realizability", cone_realizability},
      {"congruence oracle vs brute-force orbits", congruence_oracle},
      {"contactomorphism consistency", contact_maps},
      {"peak-set union cross-check", peak_union},
      {"front calculus properties", front_calculus},
      {"certification soundness and completeness sample", certification},
      {"round trip and byte stability", round_trip},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Report r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(r);
    } catch (const std::exception& e) {
      r.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (r.failed ? "FAIL" : "PASS") << "  " << (i + 1) << ". " << criteria[i].first << " ("
         << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& f : r.failures) std::cout << "      " << f << "\n";
    if (r.failed) ++failed;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << "(" << total << " s)\n";
  return failed ? 1 : 0;
}
