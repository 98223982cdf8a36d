#pragma once

#include <random>

#include "pathset/graph.hpp"
#include "pathset/set_function.hpp"

namespace fixtures {

/// The eight-edge two-route example graph with delay, cost, capacity, and
/// probability properties.
pathset::DirectedGraph fig2_graph();
/// Its three A-to-G paths.
pathset::PathSet fig2_path_set(const pathset::DirectedGraph& g);

/// Five-vertex graph with three unit-capacity paths whose capacity table is
/// neither submodular nor supermodular.
pathset::DirectedGraph capacity_counterexample_graph();
pathset::PathSet capacity_counterexample_path_set(const pathset::DirectedGraph& g);

struct RandomFixture {
    pathset::DirectedGraph graph;
    pathset::PathSet path_set;
};

struct RandomFixtureOptions {
    int max_paths = 4;
    std::size_t max_union_edges = 10;
    bool disjoint = false;
};

/// Random small graph carrying all four builtin properties plus a path set.
/// Delay/cost/capacity weights are integers so that fold results are exact.
RandomFixture random_fixture(std::mt19937& rng, const RandomFixtureOptions& options = {});

/// rho(X) = sum of nonnegative pair terms c_ab [a in X][b in X] plus
/// nonnegative singleton terms: normalized, monotone, supermodular.
pathset::SetFunctionTable random_supermodular_table(std::mt19937& rng);

/// Arbitrary nonnegative values with rho(empty) = 0.
pathset::SetFunctionTable random_normalized_table(std::mt19937& rng);

} // namespace fixtures
