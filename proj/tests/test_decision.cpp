#include <catch2/catch_amalgamated.hpp>

#include "apx/decision.hpp"
#include "oracles.hpp"

namespace {

apx::BeliefMatrix beliefs_from(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    apx::BeliefMatrix b{apx::Matrix(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.b(i, j) = rows[i][j];
    return b;
}

}  // namespace

TEST_CASE("thresholding links a shared point into one component", "[decision]") {
    apx::SimilarityMatrix s(2, -1.0);
    const auto res = apx::decide(s, beliefs_from({{1.0, 0.5}, {-1.0, 2.0}}));
    REQUIRE(res.exemplars == std::vector<int>{0, 1});
    REQUIRE(res.h(0, 0) == 1);
    REQUIRE(res.h(0, 1) == 1);
    REQUIRE(res.h(1, 0) == 0);
    REQUIRE(res.h(1, 1) == 1);
    REQUIRE(res.num_clusters() == 1);
    REQUIRE(res.cluster_ids == std::vector<int>{0, 0});
}

TEST_CASE("positive diagonal with non-positive off-diagonal gives singletons", "[decision]") {
    apx::SimilarityMatrix s(3, -1.0);
    const auto res = apx::decide(s, beliefs_from({{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}));
    REQUIRE(res.exemplars == std::vector<int>{0, 1, 2});
    REQUIRE(res.num_clusters() == 3);
    REQUIRE(res.cluster_ids == std::vector<int>{0, 1, 2});
}

TEST_CASE("empty exemplar set promotes the best diagonal and attaches the rest", "[decision]") {
    apx::SimilarityMatrix s(2);
    s(1, 0) = -2.0;
    s(0, 1) = -2.0;
    // diagonal tie at -1; the lower index is promoted, and the off-diagonal
    // positive entry is wiped by the consistency pass since 1 is not an exemplar
    const auto res = apx::decide(s, beliefs_from({{-1.0, 3.0}, {-2.0, -1.0}}));
    REQUIRE(res.exemplars == std::vector<int>{0});
    REQUIRE(res.exemplar_lists[1] == std::vector<int>{0});
    REQUIRE(res.num_clusters() == 1);
}

TEST_CASE("non-exemplar columns are zeroed before component extraction", "[decision]") {
    apx::SimilarityMatrix s(3, -1.0);
    // column 2 has positive beliefs but 2 is not an exemplar
    const auto res = apx::decide(s, beliefs_from({{1, -1, 5}, {-1, 1, 5}, {-1, -1, -1}}));
    REQUIRE(res.exemplars == std::vector<int>{0, 1});
    REQUIRE(res.h(0, 2) == 0);
    REQUIRE(res.h(1, 2) == 0);
    // point 2 was left out and joins its most similar exemplar (tie -> index 0)
    REQUIRE(res.exemplar_lists[2] == std::vector<int>{0});
    REQUIRE(res.cluster_ids[2] == res.cluster_ids[0]);
}

TEST_CASE("every exemplar appears in its own list", "[decision]") {
    apx::Rng rng(40);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 8;
        apx::BeliefMatrix b{apx::Matrix(n, n)};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b.b(i, j) = rng.uniform(-2.0, 1.0);
        const auto s = oracle::random_similarity(n, rng, -5.0, -0.5, -1.0);
        const auto res = apx::decide(s, b);
        for (int k : res.exemplars) {
            REQUIRE(res.h(k, k) == 1);
            REQUIRE(std::binary_search(res.exemplar_lists[k].begin(), res.exemplar_lists[k].end(), k));
        }
        for (int i = 0; i < n; ++i) {
            REQUIRE(!res.exemplar_lists[i].empty());
            for (int k : res.exemplar_lists[i]) REQUIRE(res.is_exemplar(k));
        }
        // clusters partition the points
        const int k = res.num_clusters();
        for (int id : res.cluster_ids) {
            REQUIRE(id >= 0);
            REQUIRE(id < k);
        }
    }
}

TEST_CASE("consistency and component extraction are idempotent", "[decision]") {
    apx::Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + trial;
        apx::BeliefMatrix b{apx::Matrix(n, n)};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b.b(i, j) = rng.uniform(-2.0, 1.5);
        const auto s = oracle::random_similarity(n, rng, -5.0, -0.5, -1.0);
        auto res = apx::decide(s, b);
        auto again = res;
        apx::detail::extract_components(again);
        REQUIRE(again.H == res.H);
        REQUIRE(again.exemplar_lists == res.exemplar_lists);
        REQUIRE(again.cluster_ids == res.cluster_ids);
    }
}

TEST_CASE("connected_components labels by lowest member", "[decision]") {
    auto adj = [](int n, const std::vector<std::pair<int, int>>& edges) {
        std::vector<uint8_t> m(n * n, 0);
        for (auto [a, b] : edges) {
            m[a * n + b] = 1;
            m[b * n + a] = 1;
        }
        return m;
    };
    REQUIRE(apx::connected_components(adj(4, {{0, 1}, {1, 2}}), 4) == std::vector<int>{0, 0, 0, 1});
    REQUIRE(apx::connected_components(adj(4, {}), 4) == std::vector<int>{0, 1, 2, 3});
    REQUIRE(apx::connected_components(adj(3, {{0, 1}, {0, 2}, {1, 2}}), 3) == std::vector<int>{0, 0, 0});
}

TEST_CASE("asymmetric adjacency is rejected", "[decision]") {
    std::vector<uint8_t> adj(4, 0);
    adj[1] = 1;  // edge 0->1 without 1->0
    REQUIRE_THROWS_AS(apx::connected_components(adj, 2), std::invalid_argument);
}
