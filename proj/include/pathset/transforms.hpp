#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "pathset/graph.hpp"
#include "pathset/hypergraph.hpp"

namespace pathset {

enum class TransformKind { Identity, Union, Cuts };

std::string to_string(TransformKind kind);
std::optional<TransformKind> transform_kind_from_string(std::string_view text);

/// Default bound on the size of the path-set edge union before cut
/// enumeration refuses to run. Cut sets are tracked as single machine
/// words, so the limit can be raised at most to 64.
inline constexpr std::size_t kDefaultCutUnionLimit = 24;
inline constexpr std::size_t kMaxCutUnionLimit = 64;

/// One hyperedge per path, labeled P1..Pn in path order.
Hypergraph identity_transform(const DirectedGraph& g, const PathSet& p);

/// A single hyperedge holding the union of all path edges. The union of an
/// empty path set is one empty hyperedge.
Hypergraph union_transform(const DirectedGraph& g, const PathSet& p);

/// All minimal transversals of the path edge sets, labeled C1..Ck in
/// lexicographic order of their sorted row indices. An empty path set has
/// exactly one empty cut. Throws LimitError when the edge union exceeds
/// union_limit.
Hypergraph cuts_transform(const DirectedGraph& g, const PathSet& p,
                          std::size_t union_limit = kDefaultCutUnionLimit);

Hypergraph apply_transform(TransformKind kind, const DirectedGraph& g, const PathSet& p,
                           std::size_t cut_union_limit = kDefaultCutUnionLimit);

enum class CutVerdict { NotACut, CutNotMinimal, MinimalCut };

std::string to_string(CutVerdict verdict);

/// Classifies an edge set against a path set: does it hit every path, and is
/// it inclusion-minimal doing so?
CutVerdict is_minimal_cut(const DirectedGraph& g, const PathSet& p,
                          const std::set<std::string>& edge_ids);

} // namespace pathset
