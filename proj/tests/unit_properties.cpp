#include <doctest.h>

#include "skyring/oracle.hpp"
#include "support.hpp"

using namespace skyring;
using namespace skyring::test;

namespace {

constexpr int kInstances = 200;

std::vector<Sky> random_skies(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Sky> out;
  for (int k = 0; k < kInstances; ++k) out.push_back(make_sky(random_sequence(rng, 1 + k % 4)));
  return out;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("random skies are associative") {
    for (const Sky& sky : random_skies(101)) {
      const auto rep = exhaustive_associativity(sky.ring);
      CHECK_MESSAGE(rep.ok(), to_json(sky.seq, -1));
    }
  }

  TEST_CASE("intersection pairing is unimodular") {
    for (const Sky& sky : random_skies(102)) {
      const Int det = determinant(pairing_matrix(sky.ring));
      CHECK_MESSAGE((det == 1 || det == -1), to_json(sky.seq, -1));
    }
  }

  TEST_CASE("presentation relations vanish") {
    for (const Sky& sky : random_skies(103)) {
      const Presentation p = build_presentation(sky.ring, sky.irs);
      for (const auto& rel : p.relations)
        CHECK_MESSAGE(evaluate_polynomial(sky.ring, p.generators, rel.poly).is_zero(),
                      rel.family << " in " << to_json(sky.seq, -1));
    }
  }

  TEST_CASE("betti numbers and exceptional cubes") {
    for (const Sky& sky : random_skies(104)) {
      const int s = sky.ring.num_centers();
      CHECK(betti(sky.ring) == std::array<int, 4>{1, s + 1, s + 1, 1});
      for (int a = 1; a <= s; ++a) {
        const ClassVector e = sky.ring.e(a);
        const Int cube = degree(sky.ring, multiply(sky.ring, multiply(sky.ring, e, e), e));
        if (sky.irs[a - 1].kind == CenterKind::point)
          CHECK(cube == 1);
        else
          CHECK(cube == -sky.irs[a - 1].c1);
      }
    }
  }
}
