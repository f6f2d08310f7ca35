#include <catch2/catch_amalgamated.hpp>

#include "apx/ap.hpp"
#include "apx/dataset.hpp"
#include "apx/decision.hpp"
#include "oracles.hpp"

namespace {

apx::EngineParams default_params(double preference) {
    apx::EngineParams p;
    p.preference = preference;
    return p;
}

}  // namespace

TEST_CASE("engine parameters are validated", "[ap]") {
    apx::EngineParams p;
    REQUIRE_NOTHROW(p.validate());
    p.damping = 1.0;
    REQUIRE_THROWS_AS(p.validate(), std::invalid_argument);
    p.damping = 0.5;
    p.convergence_window = 0;
    REQUIRE_THROWS_AS(p.validate(), std::invalid_argument);
    p.convergence_window = 50;
    p.max_iters = 49;
    REQUIRE_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("mismatched state dimensions are rejected", "[ap]") {
    apx::SimilarityMatrix s(3, -1.0);
    apx::ApMessageState st(2);
    REQUIRE_THROWS_AS(apx::ap_iterate(s, st, 0.5), std::invalid_argument);
}

TEST_CASE("one sweep on the symmetric 2-point instance", "[ap]") {
    // s = [[-1,-3],[-3,-1]], zero start, no damping. Working the message
    // equations once by hand: eta = [[3,1],[1,3]], rho = [[2,-2],[-2,2]],
    // and every alpha entry stays 0.
    apx::SimilarityMatrix s(2);
    s(0, 0) = -1;
    s(0, 1) = -3;
    s(1, 0) = -3;
    s(1, 1) = -1;
    apx::ApMessageState st(2);
    apx::ap_iterate(s, st, 0.0);
    REQUIRE(st.eta(0, 0) == 3.0);
    REQUIRE(st.eta(0, 1) == 1.0);
    REQUIRE(st.eta(1, 0) == 1.0);
    REQUIRE(st.eta(1, 1) == 3.0);
    REQUIRE(st.alpha(0, 0) == 0.0);
    REQUIRE(st.alpha(0, 1) == 0.0);
    REQUIRE(st.alpha(1, 0) == 0.0);
    REQUIRE(st.alpha(1, 1) == 0.0);
    REQUIRE(st.iteration == 1);
}

TEST_CASE("single point keeps its own preference as belief", "[ap]") {
    apx::SimilarityMatrix s(1);
    s(0, 0) = 1.0;
    apx::ApMessageState st(1);
    apx::ap_iterate(s, st, 0.0);
    const auto b = apx::ap_beliefs(s, st);
    REQUIRE(b(0, 0) == 1.0);

    auto run = apx::ap_run(s, default_params(1.0));
    REQUIRE(run.status.converged);
    const auto res = apx::ap_decide(s, run.beliefs);
    REQUIRE(res.exemplars == std::vector<int>{0});

    s(0, 0) = -1.0;
    run = apx::ap_run(s, default_params(-1.0));
    REQUIRE(run.beliefs(0, 0) == -1.0);
    // promoted at decision time even with a negative self-belief
    REQUIRE(apx::ap_decide(s, run.beliefs).exemplars == std::vector<int>{0});
}

TEST_CASE("full damping leaves the state unchanged", "[ap]") {
    apx::Rng rng(2);
    const auto s = oracle::random_similarity(6, rng, -4.0, -0.5, -1.0);
    apx::ApMessageState st(6);
    apx::ap_iterate(s, st, 0.5);
    apx::ap_iterate(s, st, 0.5);
    const apx::Matrix alpha = st.alpha;
    const apx::Matrix eta = st.eta;
    apx::ap_iterate(s, st, 1.0);
    REQUIRE(st.alpha == alpha);
    REQUIRE(st.eta == eta);
}

TEST_CASE("alpha sign structure holds after every sweep", "[ap]") {
    apx::Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 7;
        const auto s = oracle::random_similarity(n, rng, -6.0, 2.0, rng.uniform(-4.0, 1.0));
        apx::ApMessageState st(n);
        const double lambda = trial % 2 ? 0.5 : 0.0;
        for (int sweep = 0; sweep < 30; ++sweep) {
            apx::ap_iterate(s, st, lambda);
            REQUIRE_NOTHROW(apx::verify_ap_invariants(st));
        }
    }
}

TEST_CASE("identical runs produce identical beliefs", "[ap]") {
    apx::Rng rng(4);
    const auto s = oracle::random_similarity(12, rng, -9.0, -0.1, -3.0);
    const auto a = apx::ap_run(s, default_params(-3.0));
    const auto b = apx::ap_run(s, default_params(-3.0));
    REQUIRE(a.beliefs.b == b.beliefs.b);
    REQUIRE(a.status.iterations_run == b.status.iterations_run);
}

TEST_CASE("two far-apart pairs land on an exhaustive co-optimum", "[ap]") {
    // With p equal to the within-pair similarity the instance is degenerate:
    // one-exemplar-per-pair and all-points-self tie at objective -4 (and a
    // symmetric pair never separates its two members, so the noise-free
    // messages cannot prefer either). The decided result must still attain
    // the optimum value.
    apx::PointSet ps;
    ps.points = {{0, 0}, {0, 1}, {10, 10}, {10, 11}};
    const auto s = apx::similarity_from_points(ps, -1.0);
    const auto search = oracle::exhaustive_objective(s);
    REQUIRE(search.best == -4.0);
    REQUIRE(search.margin == 0.0);

    const auto run = apx::ap_run(s, default_params(-1.0));
    const auto res = apx::ap_decide(s, run.beliefs);
    REQUIRE(oracle::objective_of(s, res) == -4.0);
}

TEST_CASE("two far-apart triples yield one exemplar per triple", "[ap]") {
    apx::PointSet ps;
    ps.points = {{0, 0}, {0, 1}, {1, 0}, {10, 10}, {10, 11}, {11, 10}};
    const auto s = apx::similarity_from_points(ps, -2.0);
    const auto run = apx::ap_run(s, default_params(-2.0));
    const auto res = apx::ap_decide(s, run.beliefs);

    REQUIRE(res.exemplars.size() == 2);
    REQUIRE(res.exemplars[0] < 3);
    REQUIRE(res.exemplars[1] >= 3);
    REQUIRE(res.num_clusters() == 2);
    REQUIRE(res.cluster_ids == std::vector<int>{0, 0, 0, 1, 1, 1});
    REQUIRE(oracle::objective_of(s, res) == oracle::best_objective(s));
}

TEST_CASE("a very negative preference forces a single exemplar", "[ap]") {
    apx::PointSet ps;
    ps.points = {{0, 0}, {1, 0}, {0, 1}, {2, 2}, {3, 1}};
    const auto s = apx::similarity_from_points(ps, -1e6);
    const auto run = apx::ap_run(s, default_params(-1e6));
    const auto res = apx::ap_decide(s, run.beliefs);
    REQUIRE(res.exemplars.size() == 1);
    REQUIRE(oracle::objective_of(s, res) == oracle::best_objective(s));
}

TEST_CASE("decided assignments reach the exhaustive optimum on separated instances", "[ap]") {
    // n <= 5, groups 40 apart versus a spread of at most 4
    apx::Rng rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 0;
        const auto s = oracle::separated_instance(rng, trial, &n);
        const auto run = apx::ap_run(s, default_params(-12.0));
        const auto res = apx::ap_decide(s, run.beliefs);
        INFO("trial " << trial << ", n " << n);
        REQUIRE(oracle::objective_of(s, res) == Catch::Approx(oracle::best_objective(s)).epsilon(0).margin(1e-9));
    }
}

TEST_CASE("ap_decide rules", "[ap]") {
    SECTION("non-exemplars join the most similar exemplar") {
        apx::SimilarityMatrix s(2);
        s(1, 0) = -2.0;
        apx::BeliefMatrix b{apx::Matrix(2, 2)};
        b.b(0, 0) = 0.5;
        b.b(1, 1) = -1.0;
        const auto res = apx::ap_decide(s, b);
        REQUIRE(res.exemplars == std::vector<int>{0});
        REQUIRE(res.cluster_ids == std::vector<int>{0, 0});
        REQUIRE(res.exemplar_lists[1] == std::vector<int>{0});
    }
    SECTION("two positive self-beliefs give two singletons") {
        apx::SimilarityMatrix s(2);
        s(0, 1) = -50.0;
        s(1, 0) = -50.0;
        apx::BeliefMatrix b{apx::Matrix(2, 2)};
        b.b(0, 0) = 0.5;
        b.b(1, 1) = 0.7;
        const auto res = apx::ap_decide(s, b);
        REQUIRE(res.exemplars == std::vector<int>{0, 1});
        REQUIRE(res.cluster_ids == std::vector<int>{0, 1});
    }
    SECTION("similarity ties break toward the lowest exemplar index") {
        apx::SimilarityMatrix s(6, -9.0);
        s(0, 2) = -1.0;
        s(0, 5) = -1.0;
        apx::BeliefMatrix b{apx::Matrix(6, 6)};
        for (int k : {2, 5}) b.b(k, k) = 1.0;
        const auto res = apx::ap_decide(s, b);
        REQUIRE(res.exemplar_lists[0] == std::vector<int>{2});
    }
}
