#include <doctest.h>

#include "skyring/error.hpp"
#include "skyring/finality.hpp"
#include "support.hpp"

using namespace skyring;
using namespace skyring::test;

namespace {

ComponentGraph two_components(Proximity forward, Proximity backward) {
  ComponentGraph g{ProximityMatrix(2), {}, {}};
  if (backward != Proximity::none) g.prox.set(2, 1, backward);
  if (forward != Proximity::none) g.declared.push_back({1, 2, forward});
  return g;
}

}  // namespace

TEST_SUITE("finality") {
  TEST_CASE("the three configurations") {
    using P = Proximity;
    const auto pp = pair_finality(two_components(P::proximate, P::proximate), 1, 2);
    CHECK_FALSE(pp.admissible);
    CHECK(pp.configuration == SwapConfiguration::both_proximate);
    const auto tt = pair_finality(two_components(P::t_proximate, P::t_proximate), 1, 2);
    CHECK_FALSE(tt.admissible);
    CHECK(tt.configuration == SwapConfiguration::both_t_proximate);
    const auto tp = pair_finality(two_components(P::proximate, P::t_proximate), 1, 2);
    CHECK(tp.admissible);
    CHECK(tp.configuration == SwapConfiguration::mixed);
    const auto one_sided = pair_finality(two_components(P::none, P::proximate), 1, 2);
    CHECK_FALSE(one_sided.admissible);
    CHECK_FALSE(one_sided.configuration.has_value());
  }

  TEST_CASE("verdicts are symmetric") {
    using P = Proximity;
    for (P f : {P::none, P::proximate, P::t_proximate})
      for (P b : {P::none, P::proximate, P::t_proximate}) {
        if (f == P::none && b == P::none) continue;
        const ComponentGraph g = two_components(f, b);
        const auto ij = pair_finality(g, 1, 2), ji = pair_finality(g, 2, 1);
        CHECK(ij.admissible == ji.admissible);
        CHECK(ij.configuration == ji.configuration);
      }
  }

  TEST_CASE("disjoint components") {
    ComponentGraph g{ProximityMatrix(2), {}, {}};
    try {
      pair_finality(g, 1, 2);
      FAIL("expected NotIntersecting");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_intersecting);
    }
    g.intersections.emplace_back(2, 1);
    CHECK_FALSE(pair_finality(g, 1, 2).admissible);
  }

  TEST_CASE("reports for the worked examples") {
    const auto ex1 = finality_report(load_sequence(data_path("ex1.json")));
    REQUIRE(ex1.pairs.size() == 1);
    CHECK_FALSE(ex1.pairs[0].admissible);
    CHECK(ex1.final_admissible == std::vector<bool>{false, true});

    const auto ex2 = finality_report(load_sequence(data_path("ex2.json")));
    REQUIRE(ex2.pairs.size() == 1);
    CHECK_FALSE(ex2.pairs[0].admissible);
    CHECK(ex2.pairs[0].configuration == SwapConfiguration::both_t_proximate);

    const auto ex3 = finality_report(load_sequence(data_path("ex3a.json")));
    REQUIRE(ex3.pairs.size() == 1);
    CHECK(ex3.pairs[0].admissible);
    CHECK(ex3.final_admissible == std::vector<bool>{true, true});

    const auto single = finality_report(sequence_of({point(1)}));
    CHECK(single.final_admissible == std::vector<bool>{true});
    CHECK(single.pairs.empty());
  }

  TEST_CASE("verdicts survive re-indexing") {
    // Swapping which pair member is declared first leaves the verdict alone.
    const auto a = finality_report(load_sequence(data_path("ex3a.json")));
    const auto b = finality_report(load_sequence(data_path("ex3b.json")));
    CHECK(a.pairs[0].admissible == b.pairs[0].admissible);
    CHECK(a.pairs[0].configuration == b.pairs[0].configuration);
  }

  TEST_CASE("admissible pair is linked by the mixed swap map") {
    const Sky z = load_sky("ex3a.json");
    const Sky zp = load_sky("ex3b.json");
    const auto verdict = pair_finality(ComponentGraph::from_sequence(z.seq), 2, 1);
    REQUIRE(verdict.admissible);
    REQUIRE(verdict.configuration == SwapConfiguration::mixed);
    // List the second sky's components in the first sky's order: its fiber
    // component plays the point's role.
    const ChowRing target = relabel(zp.ring, {2, 1});
    const GradedHom phi = canonical_swap_hom(z.ring, target, 2, 1, SwapConfiguration::mixed);
    CHECK(check_hom(z.ring, target, phi).ok());
    CHECK_FALSE(
        check_hom(z.ring, target,
                  canonical_swap_hom(z.ring, target, 2, 1, SwapConfiguration::both_proximate))
            .ok());
  }
}
