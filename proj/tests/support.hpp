#pragma once

// Shared fixtures and independent oracles for the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "legtorus/front.hpp"
#include "legtorus/invariants.hpp"
#include "legtorus/moves.hpp"

namespace legtorus::testing {

inline std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t p_lo,
                                                                        std::int64_t p_hi,
                                                                        std::int64_t q_lo,
                                                                        std::int64_t q_hi) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t p = p_lo; p <= p_hi; ++p) {
    for (std::int64_t q = q_lo; q <= q_hi; ++q) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

/// Every generator output at small sizes, plus the unknot.
inline std::vector<FrontWord> generated_fronts() {
  std::vector<FrontWord> out{zero_section(), unknot_front()};
  for (auto [p, q] : coprime_pairs(1, 4, 2, 4)) out.push_back(positive_braid(p, q));
  for (auto [p, q] : coprime_pairs(-3, -1, 2, 4)) {
    out.push_back(negative_peak(p, q, PeakVariant::Down));
    out.push_back(negative_peak(p, q, PeakVariant::Up));
  }
  return out;
}

/// Random walk: stabilizations and legal moves starting from a generator.
inline FrontWord fuzz_front(std::mt19937& rng, int steps, std::size_t max_events = 16) {
  auto fronts = generated_fronts();
  fronts.erase(fronts.begin() + 1);  // unknot has no meta; keep it out of the pool
  FrontWord f = fronts[rng() % fronts.size()];
  for (int s = 0; s < steps; ++s) {
    if (rng() % 4 == 0 && f.events.size() + 2 <= max_events) {
      const FrontAnalysis a = analyze(f);
      const int slot = static_cast<int>(rng() % (f.events.size() + 1));
      const int gap = f.events.empty() ? 0 : slot % static_cast<int>(f.events.size());
      const int height = 1 + static_cast<int>(rng() % a.counts[gap]);
      f = stabilize_front(f, rng() % 2 ? Sign::Plus : Sign::Minus, height, slot);
      continue;
    }
    const auto moves = legal_moves(f, max_events);
    if (moves.empty()) continue;
    f = apply_move(f, moves[rng() % moves.size()]);
  }
  return f;
}

/// Orbit of p under x -> x + 2q, x -> -x, enumerated over |x| <= bound.
inline std::set<std::int64_t> brute_orbit(std::int64_t p, std::int64_t q, std::int64_t bound) {
  std::set<std::int64_t> seen{p};
  std::vector<std::int64_t> stack{p};
  while (!stack.empty()) {
    const std::int64_t x = stack.back();
    stack.pop_back();
    for (std::int64_t y : {x + 2 * q, x - 2 * q, -x}) {
      if (y < -bound || y > bound || seen.count(y)) continue;
      seen.insert(y);
      stack.push_back(y);
    }
  }
  return seen;
}

/// Jet peak rotations as {r : |r| <= |p|, r = +-p mod 2q} for p < 0.
inline std::vector<std::int64_t> jet_peak_rots_oracle(std::int64_t p, std::int64_t q) {
  if (p >= 0 || q == 1) return {0};
  std::vector<std::int64_t> out;
  const std::int64_t m = 2 * q;
  for (std::int64_t r = p; r <= -p; ++r) {
    if (((r - p) % m + m) % m == 0 || ((r + p) % m + m) % m == 0) out.push_back(r);
  }
  return out;
}

/// Rows of a finite mountain range by repeated one-step stabilization.
inline std::vector<std::vector<std::int64_t>> cone_rows_oracle(std::vector<std::int64_t> top,
                                                               std::int64_t depth,
                                                               std::int64_t window) {
  std::vector<std::vector<std::int64_t>> rows;
  std::set<std::int64_t> cur(top.begin(), top.end());
  for (std::int64_t k = 0; k <= depth; ++k) {
    std::vector<std::int64_t> row;
    for (std::int64_t r : cur) {
      if (r >= -window && r <= window) row.push_back(r);
    }
    rows.push_back(row);
    std::set<std::int64_t> next;
    for (std::int64_t r : cur) {
      next.insert(r - 1);
      next.insert(r + 1);
    }
    cur = std::move(next);
  }
  return rows;
}

/// Random realizable class: a random peak followed by random stabilizations.
inline LegendrianClass random_realizable(std::mt19937& rng, Ambient ambient) {
  for (;;) {
    std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 6);
    std::int64_t p = static_cast<std::int64_t>(rng() % 25) - 12;
    if (ambient == Ambient::S1xS2 && q == 1) q = 2;
    if (std::gcd(p, q) != 1) continue;
    const TorusKnotType t = normalize_type({ambient, p, q});
    const PeakSet ps = peaks(t);
    const auto tops = ps.window(2 * q + 6);
    if (tops.empty()) continue;
    LegendrianClass c{t, ps.level, tops[rng() % tops.size()]};
    const int n = static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) c = stabilize_class(c, rng() % 2 ? Sign::Plus : Sign::Minus);
    return c;
  }
}

}  // namespace legtorus::testing
