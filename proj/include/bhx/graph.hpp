#pragma once

#include "bhx/vertex_set.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bhx {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..N-1.
///
/// Edges are kept as a sorted list of (u, v) with u < v. Neighbourhoods are
/// sorted vectors; graphs up to kDenseLimit vertices also carry one bit row
/// per vertex so adjacency tests and neighbourhood intersections are word ops.
class Graph
{
public:
    static constexpr std::size_t kDenseLimit = 4096;

    Graph() = default;

    auto vertex_count() const -> std::size_t { return adjacency_.size(); }
    auto edge_count() const -> std::size_t { return edges_.size(); }
    auto edges() const -> std::span<const Edge> { return edges_; }
    auto neighbors(Vertex v) const -> std::span<const Vertex> { return adjacency_[v]; }
    auto degree(Vertex v) const -> std::size_t { return adjacency_[v].size(); }
    auto adjacent(Vertex u, Vertex v) const -> bool;

    auto has_rows() const -> bool { return ! rows_.empty(); }
    /// Bit row of N(v); only available when has_rows().
    auto row(Vertex v) const -> const VertexSet & { return rows_[v]; }

    /// Returns k if every vertex has degree k.
    auto regular_degree() const -> std::optional<std::size_t>;
    auto max_degree() const -> std::size_t;

    /// Low 64 bits of N(v) as a mask; requires vertex_count() <= 64.
    auto row_mask(Vertex v) const -> std::uint64_t;

    friend auto build_graph(std::size_t vertex_count, std::span<const Edge> edge_list) -> Graph;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> rows_;
};

/// Builds a graph from an edge list, deduplicating and symmetrising.
/// Throws InputError on an out-of-range endpoint or a self-loop.
auto build_graph(std::size_t vertex_count, std::span<const Edge> edge_list) -> Graph;

inline auto build_graph(std::size_t vertex_count, std::initializer_list<Edge> edge_list) -> Graph
{
    return build_graph(vertex_count, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

/// Components as sorted vertex lists, ordered by smallest member.
auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>>;

struct Bipartition
{
    std::vector<Vertex> part_x;
    std::vector<Vertex> part_y;
};

/// Closed walk v0 v1 ... v_{k-1} (v_{k-1} ~ v0) of odd length k.
struct OddCycle
{
    std::vector<Vertex> walk;
};

/// 2-colours each component, putting the lowest id of every component in
/// part_x; returns an odd closed walk instead when the graph is not bipartite.
auto bipartition(const Graph & g) -> std::variant<Bipartition, OddCycle>;

struct Cycle
{
    std::vector<Vertex> vertices;   ///< v0..v_{k-1}, consecutive ones adjacent, v_{k-1} ~ v0.
    auto length() const -> std::size_t { return vertices.size(); }
};

/// Shortest cycle, minimum over components; nullopt for a forest.
/// The witness is lexicographically smallest among shortest cycles once
/// rotated to start at its minimum vertex and oriented with the smaller
/// second vertex.
auto girth(const Graph & g) -> std::optional<Cycle>;

struct InducedSubgraph
{
    Graph graph;
    std::vector<Vertex> old_ids;    ///< new id i corresponds to old_ids[i] (sorted)
};

auto induced_subgraph(const Graph & g, std::span<const Vertex> subset) -> InducedSubgraph;

/// |E(G[U])| without materialising the subgraph.
auto induced_edge_count(const Graph & g, std::span<const Vertex> subset) -> std::size_t;

struct LexProduct
{
    Graph graph;
    std::size_t h_order = 0;
    /// Vertex id of the pair (u, v).
    auto id(Vertex u, Vertex v) const -> Vertex { return static_cast<Vertex>(u * h_order + v); }
};

/// G ∘ H: (u1,v1) ~ (u2,v2) iff u1 ~ u2 in G, or u1 = u2 and v1 ~ v2 in H.
auto lexicographic_product(const Graph & g, const Graph & h) -> LexProduct;

/// Graph with n vertices and no edges.
auto empty_graph(std::size_t n) -> Graph;

auto common_neighbors(const Graph & g, Vertex u, Vertex v) -> std::vector<Vertex>;

struct K33Witness
{
    std::array<Vertex, 3> x;
    std::array<Vertex, 3> y;
};

/// Finds a K_{3,3} subgraph (not necessarily induced). The witness has the
/// lexicographically smallest x triple, and the three smallest common
/// neighbours of that triple as y.
auto find_k33(const Graph & g) -> std::optional<K33Witness>;

/// Part sizes (smaller first) when g is a complete bipartite graph; K1 is (1, 0).
auto is_complete_bipartite(const Graph & g) -> std::optional<std::pair<std::size_t, std::size_t>>;

struct Boundary
{
    std::size_t value = 0;
    std::vector<Edge> edges;        ///< (inside, outside) pairs
};

/// ∂(U) and [U, V∖U]. Throws InputError if U is empty or all of V.
auto boundary(const Graph & g, std::span<const Vertex> subset) -> Boundary;

struct EdgeOrbitReport
{
    std::size_t orbit_count = 0;
    std::vector<std::vector<Edge>> orbits;
    std::vector<std::vector<Vertex>> generator_witnesses;
};

/// Orbits of Aut(G) on edges. Throws Refusal above size_limit vertices.
auto edge_orbits(const Graph & g, std::size_t size_limit = 64) -> EdgeOrbitReport;

/// True when perm is a bijection mapping every edge to an edge.
auto is_automorphism(const Graph & g, std::span<const Vertex> perm) -> bool;

/// "p <N> <M>" then one "u v" per line; lines starting with 'c' are comments.
void write_edge_list(std::ostream & out, const Graph & g, const std::string & comment = {});
auto read_edge_list(std::istream & in) -> Graph;

} // namespace bhx
