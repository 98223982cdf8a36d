#include "pathset/transforms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

namespace pathset {

namespace {

std::vector<std::size_t> path_rows(const DirectedGraph& g, const DirectedPath& p) {
    std::vector<std::size_t> rows;
    rows.reserve(p.edge_ids().size());
    for (const auto& id : p.edge_ids()) {
        rows.push_back(g.edge_row(id));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

std::vector<std::size_t> union_rows(const DirectedGraph& g, const PathSet& p) {
    std::vector<std::size_t> rows;
    for (const auto& path : p.paths()) {
        for (const auto& id : path.edge_ids()) {
            rows.push_back(g.edge_row(id));
        }
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

} // namespace

std::string to_string(TransformKind kind) {
    switch (kind) {
    case TransformKind::Identity: return "identity";
    case TransformKind::Union: return "union";
    case TransformKind::Cuts: return "cuts";
    }
    return "?";
}

std::optional<TransformKind> transform_kind_from_string(std::string_view text) {
    if (text == "identity") return TransformKind::Identity;
    if (text == "union") return TransformKind::Union;
    if (text == "cuts") return TransformKind::Cuts;
    return std::nullopt;
}

Hypergraph identity_transform(const DirectedGraph& g, const PathSet& p) {
    std::vector<Hyperedge> hyperedges;
    hyperedges.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        hyperedges.push_back({"P" + std::to_string(i + 1), path_rows(g, p.paths()[i])});
    }
    return Hypergraph(g.edge_order(), std::move(hyperedges));
}

Hypergraph union_transform(const DirectedGraph& g, const PathSet& p) {
    std::vector<Hyperedge> hyperedges;
    hyperedges.push_back({"Union", union_rows(g, p)});
    return Hypergraph(g.edge_order(), std::move(hyperedges));
}

Hypergraph cuts_transform(const DirectedGraph& g, const PathSet& p, std::size_t union_limit) {
    if (union_limit == 0 || union_limit > kMaxCutUnionLimit) {
        throw ValidationError("cut union limit must be between 1 and " +
                              std::to_string(kMaxCutUnionLimit));
    }
    const std::vector<std::size_t> universe = union_rows(g, p);
    if (universe.size() > union_limit) {
        throw LimitError("path set union has " + std::to_string(universe.size()) +
                         " edges, exceeding the cut enumeration limit of " +
                         std::to_string(union_limit));
    }

    // Bit i of a mask stands for universe[i]; universe is sorted by row, so
    // mask order agrees with row order.
    std::map<std::size_t, std::size_t> bit_of_row;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        bit_of_row[universe[i]] = i;
    }
    std::vector<std::uint64_t> path_masks;
    path_masks.reserve(p.size());
    for (const auto& path : p.paths()) {
        std::uint64_t mask = 0;
        for (std::size_t row : path_rows(g, path)) {
            mask |= std::uint64_t{1} << bit_of_row[row];
        }
        path_masks.push_back(mask);
    }

    // Incremental transversal construction: keep the minimal transversals of
    // the paths processed so far, extend by one edge of the next path where
    // needed, and drop candidates that contain another candidate.
    std::vector<std::uint64_t> transversals{0};
    for (std::uint64_t path_mask : path_masks) {
        std::vector<std::uint64_t> extended;
        for (std::uint64_t t : transversals) {
            if (t & path_mask) {
                extended.push_back(t);
            } else {
                for (std::uint64_t bits = path_mask; bits != 0; bits &= bits - 1) {
                    extended.push_back(t | (bits & ~(bits - 1)));
                }
            }
        }
        std::sort(extended.begin(), extended.end());
        extended.erase(std::unique(extended.begin(), extended.end()), extended.end());
        std::vector<std::uint64_t> minimal;
        for (std::uint64_t t : extended) {
            bool dominated = false;
            for (std::uint64_t other : extended) {
                if (other != t && (other & t) == other) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) {
                minimal.push_back(t);
            }
        }
        transversals = std::move(minimal);
    }

    std::vector<std::vector<std::size_t>> cuts;
    cuts.reserve(transversals.size());
    for (std::uint64_t t : transversals) {
        std::vector<std::size_t> rows;
        for (std::uint64_t bits = t; bits != 0; bits &= bits - 1) {
            unsigned bit = static_cast<unsigned>(std::countr_zero(bits));
            rows.push_back(universe[bit]);
        }
        cuts.push_back(std::move(rows));
    }
    std::sort(cuts.begin(), cuts.end());

    std::vector<Hyperedge> hyperedges;
    hyperedges.reserve(cuts.size());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        hyperedges.push_back({"C" + std::to_string(i + 1), std::move(cuts[i])});
    }
    return Hypergraph(g.edge_order(), std::move(hyperedges));
}

Hypergraph apply_transform(TransformKind kind, const DirectedGraph& g, const PathSet& p,
                           std::size_t cut_union_limit) {
    switch (kind) {
    case TransformKind::Identity: return identity_transform(g, p);
    case TransformKind::Union: return union_transform(g, p);
    case TransformKind::Cuts: return cuts_transform(g, p, cut_union_limit);
    }
    throw ValidationError("unknown transform kind");
}

std::string to_string(CutVerdict verdict) {
    switch (verdict) {
    case CutVerdict::NotACut: return "not-a-cut";
    case CutVerdict::CutNotMinimal: return "cut-not-minimal";
    case CutVerdict::MinimalCut: return "minimal-cut";
    }
    return "?";
}

CutVerdict is_minimal_cut(const DirectedGraph& g, const PathSet& p,
                          const std::set<std::string>& edge_ids) {
    std::set<std::size_t> cut_rows;
    for (const auto& id : edge_ids) {
        cut_rows.insert(g.edge_row(id));
    }
    std::vector<std::vector<std::size_t>> paths;
    paths.reserve(p.size());
    for (const auto& path : p.paths()) {
        paths.push_back(path_rows(g, path));
    }

    auto hits_all = [&paths](const std::set<std::size_t>& rows) {
        for (const auto& path : paths) {
            bool hit = false;
            for (std::size_t row : path) {
                if (rows.count(row)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                return false;
            }
        }
        return true;
    };

    if (!hits_all(cut_rows)) {
        return CutVerdict::NotACut;
    }
    for (std::size_t row : cut_rows) {
        std::set<std::size_t> reduced = cut_rows;
        reduced.erase(row);
        if (hits_all(reduced)) {
            return CutVerdict::CutNotMinimal;
        }
    }
    return CutVerdict::MinimalCut;
}

} // namespace pathset
