#pragma once

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "skyring/chow_ring.hpp"
#include "skyring/error.hpp"
#include "skyring/expr.hpp"
#include "skyring/presentation.hpp"
#include "skyring/sequence.hpp"
#include "skyring/sequence_io.hpp"

namespace skyring::test {

inline std::string data_path(const std::string& name) {
  return std::string(SKYRING_TEST_DATA) + "/" + name;
}

struct Sky {
  BlowUpSequence seq;
  std::vector<CenterIR> irs;
  ChowRing ring;
};

inline Sky make_sky(BlowUpSequence seq) {
  Sky sky;
  sky.irs = lower(seq);
  sky.ring = build_ring(sky.irs);
  sky.seq = std::move(seq);
  return sky;
}

inline Sky load_sky(const std::string& name) { return make_sky(load_sequence(data_path(name))); }

inline CenterSpec point(int index, std::vector<int> on = {}) {
  return {index, CenterKind::point, AmbientPoint{std::move(on)}};
}

inline CenterSpec curve(int index, Placement p) { return {index, CenterKind::curve, std::move(p)}; }

inline BlowUpSequence sequence_of(std::vector<CenterSpec> centers) {
  BlowUpSequence seq;
  seq.centers = std::move(centers);
  return seq;
}

/// One random center at position alpha on top of `seq`, any placement the
/// earlier centers allow.
inline CenterSpec random_center(std::mt19937_64& rng, const BlowUpSequence& seq, int alpha) {
  auto uniform = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  std::vector<int> points, curves;
  for (int b = 1; b < alpha; ++b)
    (seq.center(b).kind == CenterKind::point ? points : curves).push_back(b);
  auto pick = [&](const std::vector<int>& v) { return v[uniform(0, Int(v.size()) - 1)]; };

  if (coin(0.35)) {
    std::vector<int> on;
    for (int b = 1; b < alpha; ++b)
      if (coin(0.3)) on.push_back(b);
    return point(alpha, on);
  }
  for (;;) {
    switch (uniform(0, 4)) {
      case 0: {
        AmbientCurve c;
        c.degree = uniform(1, 7);
        for (int b = 1; b < alpha; ++b)
          if (coin(0.4)) c.meets.push_back({b, uniform(1, 3)});
        if (c.degree >= 4 && coin(0.5)) c.splitting = uniform(-(c.degree - 4), c.degree - 4);
        return curve(alpha, c);
      }
      case 1:
        if (curves.empty()) continue;
        return curve(alpha, ExceptionalSection{pick(curves), uniform(-2, 9)});
      case 2:
        if (points.empty()) continue;
        return curve(alpha, ExceptionalPlaneCurve{pick(points), uniform(1, 2)});
      case 3:
        if (curves.empty()) continue;
        return curve(alpha, ExceptionalFiber{pick(curves)});
      default: {
        RawMu r;
        r.mu.push_back(uniform(0, 6));
        for (int b = 1; b < alpha; ++b) r.mu.push_back(uniform(-3, 4));
        return curve(alpha, r);
      }
    }
  }
}

/// Random sequence of length s that passes validate().
inline BlowUpSequence random_sequence(std::mt19937_64& rng, int s) {
  for (;;) {
    BlowUpSequence seq;
    for (int alpha = 1; alpha <= s; ++alpha) seq.centers.push_back(random_center(rng, seq, alpha));
    if (validate(seq).ok()) return seq;
  }
}

}  // namespace skyring::test

namespace skyring::test {

/// Lines of a golden relation file ('#' comments and blank lines skipped).
inline std::vector<std::string> golden_lines(const std::string& name) {
  std::ifstream in(data_path("golden/" + name));
  if (!in) throw Error(ErrorCode::file_not_found, "missing golden file " + name);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

/// Golden relations that do not occur verbatim among the emitted ones.
inline std::vector<std::string> missing_golden(const Sky& sky, const std::string& name) {
  const Presentation p = build_presentation(sky.ring, sky.irs);
  std::vector<std::string> missing;
  for (const std::string& line : golden_lines(name)) {
    const Polynomial want = expand(parse_expr(line), p.generators);
    bool found = false;
    for (const auto& rel : p.relations) found = found || rel.poly == want;
    if (!found) missing.push_back(line);
  }
  return missing;
}

}  // namespace skyring::test
