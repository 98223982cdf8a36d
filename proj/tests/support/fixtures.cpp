#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace fixtures {

using namespace pathset;

DirectedGraph fig2_graph() {
    std::vector<std::string> vertices{"A", "B", "C", "D", "E", "F", "G"};
    std::vector<Edge> edges{
        {"AB", "A", "B"}, {"AC", "A", "C"}, {"BD", "B", "D"}, {"CD", "C", "D"},
        {"DE", "D", "E"}, {"DF", "D", "F"}, {"EG", "E", "G"}, {"FG", "F", "G"},
    };
    auto values = [&](std::initializer_list<double> list) {
        std::map<std::string, double> out;
        auto it = list.begin();
        for (const auto& e : edges) {
            out[e.id] = *it++;
        }
        return out;
    };
    std::vector<EdgePropertyVector> properties;
    properties.emplace_back("delay", "µs", PropertyDomain::NonnegativeReal,
                            values({50, 75, 70, 40, 115, 45, 105, 65}));
    properties.emplace_back("cost", "", PropertyDomain::NonnegativeReal,
                            values({100, 150, 300, 200, 500, 100, 450, 100}));
    properties.emplace_back("capacity", "Gbps", PropertyDomain::NonnegativeReal,
                            values({25, 10, 25, 25, 10, 25, 10, 100}));
    properties.emplace_back(
        "probability", "", PropertyDomain::Probability,
        values({0.0050, 0.0075, 0.0070, 0.0040, 0.0115, 0.0045, 0.0105, 0.0065}));
    return DirectedGraph(std::move(vertices), std::move(edges), std::move(properties));
}

PathSet fig2_path_set(const DirectedGraph& g) {
    std::vector<DirectedPath> paths;
    paths.push_back(validate_path(g, {"AB", "BD", "DE", "EG"}));
    paths.push_back(validate_path(g, {"AB", "BD", "DF", "FG"}));
    paths.push_back(validate_path(g, {"AC", "CD", "DF", "FG"}));
    return validate_path_set(std::move(paths));
}

DirectedGraph capacity_counterexample_graph() {
    std::vector<std::string> vertices{"a", "b", "c", "d", "e"};
    std::vector<Edge> edges{
        {"ab", "a", "b"}, {"be", "b", "e"}, {"bc", "b", "c"},
        {"ce", "c", "e"}, {"ad", "a", "d"}, {"dc", "d", "c"},
    };
    std::map<std::string, double> capacity;
    std::map<std::string, double> probability;
    for (const auto& e : edges) {
        capacity[e.id] = 1.0;
        probability[e.id] = 0.01;
    }
    std::vector<EdgePropertyVector> properties;
    properties.emplace_back("capacity", "Gbps", PropertyDomain::NonnegativeReal,
                            std::move(capacity));
    properties.emplace_back("probability", "", PropertyDomain::Probability,
                            std::move(probability));
    return DirectedGraph(std::move(vertices), std::move(edges), std::move(properties));
}

PathSet capacity_counterexample_path_set(const DirectedGraph& g) {
    std::vector<DirectedPath> paths;
    paths.push_back(validate_path(g, {"ab", "bc", "ce"}));
    paths.push_back(validate_path(g, {"ab", "be"}));
    paths.push_back(validate_path(g, {"ad", "dc", "ce"}));
    return validate_path_set(std::move(paths));
}

namespace {

std::string edge_id(const std::string& from, const std::string& to) {
    return from + ">" + to;
}

struct PathDraft {
    std::vector<std::string> vertices; // S, mids..., D
};

std::vector<std::string> draft_edges(const PathDraft& draft) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i + 1 < draft.vertices.size(); ++i) {
        ids.push_back(edge_id(draft.vertices[i], draft.vertices[i + 1]));
    }
    return ids;
}

RandomFixture assemble(std::mt19937& rng, const std::vector<PathDraft>& drafts,
                       const std::vector<std::string>& mids, bool add_unused_edge) {
    std::set<std::string> vertex_set{"S", "D"};
    std::map<std::string, Edge> edge_map;
    for (const auto& draft : drafts) {
        for (const auto& v : draft.vertices) {
            vertex_set.insert(v);
        }
        for (std::size_t i = 0; i + 1 < draft.vertices.size(); ++i) {
            const std::string& from = draft.vertices[i];
            const std::string& to = draft.vertices[i + 1];
            edge_map.emplace(edge_id(from, to), Edge{edge_id(from, to), from, to});
        }
    }
    for (const auto& m : mids) {
        vertex_set.insert(m);
    }
    if (add_unused_edge) {
        vertex_set.insert("x1");
        vertex_set.insert("x2");
        edge_map.emplace(edge_id("x1", "x2"), Edge{edge_id("x1", "x2"), "x1", "x2"});
    }

    std::vector<Edge> edges;
    edges.reserve(edge_map.size());
    for (auto& [id, e] : edge_map) {
        (void)id;
        edges.push_back(e);
    }
    std::shuffle(edges.begin(), edges.end(), rng);

    std::map<std::string, double> delay, cost, capacity, probability;
    for (const auto& e : edges) {
        delay[e.id] = static_cast<double>(1 + rng() % 100);
        cost[e.id] = static_cast<double>(1 + rng() % 100);
        capacity[e.id] = static_cast<double>(1 + rng() % 100);
        probability[e.id] = static_cast<double>(1 + rng() % 500) / 10000.0;
    }
    std::vector<EdgePropertyVector> properties;
    properties.emplace_back("delay", "µs", PropertyDomain::NonnegativeReal, std::move(delay));
    properties.emplace_back("cost", "", PropertyDomain::NonnegativeReal, std::move(cost));
    properties.emplace_back("capacity", "Gbps", PropertyDomain::NonnegativeReal,
                            std::move(capacity));
    properties.emplace_back("probability", "", PropertyDomain::Probability,
                            std::move(probability));

    DirectedGraph graph(std::vector<std::string>(vertex_set.begin(), vertex_set.end()),
                        std::move(edges), std::move(properties));
    std::vector<DirectedPath> paths;
    for (const auto& draft : drafts) {
        paths.push_back(validate_path(graph, draft_edges(draft)));
    }
    PathSet path_set = validate_path_set(std::move(paths));
    return {std::move(graph), std::move(path_set)};
}

} // namespace

RandomFixture random_fixture(std::mt19937& rng, const RandomFixtureOptions& options) {
    const int n_paths = 1 + static_cast<int>(rng() % options.max_paths);

    if (options.disjoint) {
        std::vector<PathDraft> drafts;
        for (int i = 0; i < n_paths; ++i) {
            PathDraft draft;
            draft.vertices.push_back("S");
            const int hops = 1 + static_cast<int>(rng() % 3);
            for (int h = 0; h < hops; ++h) {
                draft.vertices.push_back("p" + std::to_string(i) + "v" + std::to_string(h));
            }
            draft.vertices.push_back("D");
            drafts.push_back(std::move(draft));
        }
        return assemble(rng, drafts, {}, false);
    }

    // Shared intermediate pool; paths visit mids in increasing index order,
    // which keeps every draft simple and the union acyclic.
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int n_mids = 2 + static_cast<int>(rng() % 5);
        std::vector<std::string> mids;
        for (int i = 0; i < n_mids; ++i) {
            mids.push_back("m" + std::to_string(i));
        }
        std::vector<PathDraft> drafts;
        std::set<std::vector<std::string>> seen;
        for (int tries = 0; tries < 200 && static_cast<int>(drafts.size()) < n_paths; ++tries) {
            PathDraft draft;
            draft.vertices.push_back("S");
            for (int i = 0; i < n_mids; ++i) {
                if (rng() % 100 < 40) {
                    draft.vertices.push_back(mids[i]);
                }
            }
            draft.vertices.push_back("D");
            auto ids = draft_edges(draft);
            std::sort(ids.begin(), ids.end());
            if (seen.insert(ids).second) {
                drafts.push_back(std::move(draft));
            }
        }
        if (static_cast<int>(drafts.size()) < n_paths) {
            continue;
        }
        std::set<std::string> union_edges;
        for (const auto& draft : drafts) {
            for (const auto& id : draft_edges(draft)) {
                union_edges.insert(id);
            }
        }
        if (union_edges.size() > options.max_union_edges) {
            continue;
        }
        return assemble(rng, drafts, mids, rng() % 100 < 30);
    }
    throw std::runtime_error("random_fixture: could not satisfy constraints");
}

SetFunctionTable random_supermodular_table(std::mt19937& rng) {
    const std::size_t n = 2 + rng() % 4;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("E" + std::to_string(i + 1));
    }
    struct Term {
        std::uint32_t mask;
        double coefficient;
    };
    std::vector<Term> terms;
    for (std::size_t a = 0; a < n; ++a) {
        if (rng() % 2) {
            terms.push_back({std::uint32_t{1} << a, static_cast<double>(rng() % 50) / 4.0});
        }
        for (std::size_t b = a + 1; b < n; ++b) {
            if (rng() % 2) {
                terms.push_back({(std::uint32_t{1} << a) | (std::uint32_t{1} << b),
                                 static_cast<double>(1 + rng() % 100) / 4.0});
            }
        }
    }
    if (terms.empty()) {
        terms.push_back({3, 1.0});
    }
    std::vector<double> values(std::size_t{1} << n, 0.0);
    for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
        double v = 0.0;
        for (const auto& term : terms) {
            if ((mask & term.mask) == term.mask) {
                v += term.coefficient;
            }
        }
        values[mask] = v;
    }
    return SetFunctionTable(std::move(labels), std::move(values));
}

SetFunctionTable random_normalized_table(std::mt19937& rng) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("E" + std::to_string(i + 1));
    }
    std::vector<double> values(std::size_t{1} << n, 0.0);
    for (std::uint32_t mask = 1; mask < values.size(); ++mask) {
        values[mask] = static_cast<double>(rng() % 10000) / 100.0;
    }
    return SetFunctionTable(std::move(labels), std::move(values));
}

} // namespace fixtures
