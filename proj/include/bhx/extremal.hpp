#pragma once

#include "bhx/balanced_hypercube.hpp"
#include "bhx/graph.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bhx {

enum class Certification
{
    exact,
    lower_bound,
    upper_bound_only,
};

auto to_string(Certification c) -> std::string;
auto parse_certification(const std::string & text) -> Certification;

/// Limits for the enumeration solvers. Exceeding one degrades the
/// certification of the result; it never produces a wrong "exact".
struct SearchBudget
{
    std::uint64_t subset_budget = 100'000'000;
    std::chrono::duration<double> wall = std::chrono::seconds(60);
    std::size_t top_k = 16;
};

/// A (g+1)-vertex set with its induced edge count.
struct SubgraphWitness
{
    std::vector<Vertex> vertices;               ///< sorted
    std::size_t induced_edge_count = 0;
    Certification certification = Certification::lower_bound;
    /// Proven upper bound on e_g when the witness alone does not settle it.
    std::optional<std::size_t> upper_bound;
    std::string construction;
    std::string note;
};

/// True when |vertices| = g+1, the ids are distinct, and the stored count
/// matches a recount in g.
auto revalidate(const Graph & g, const SubgraphWitness & w, int extra) -> bool;
auto revalidate(const ImplicitBh & bh, const SubgraphWitness & w, int extra) -> bool;

/// e_g by enumerating every (g+1)-subset in lexicographic order. Throws
/// Refusal when C(N, g+1) exceeds the subset budget.
auto eg_exhaustive(const Graph & g, int extra, const SearchBudget & budget = {}) -> SubgraphWitness;

/// Best connected induced subgraphs of one size.
struct ConnectedMax
{
    std::size_t size = 0;
    /// Max edge count; nullopt when no connected set of this size exists.
    std::optional<std::size_t> edges;
    /// Up to top_k lexicographically smallest sets attaining `edges`.
    std::vector<std::vector<Vertex>> witnesses;
    Certification certification = Certification::exact;
};

/// Max edges over connected induced s-vertex subgraphs. Each connected set is
/// generated once from its minimum vertex; branches are cut against the
/// running best, the caller's edge_bound, and floor(s/2)*ceil(s/2) when g is
/// bipartite. On timeout the entry is downgraded to lower_bound.
auto max_edges_connected(const Graph & g, std::size_t s, std::optional<std::size_t> edge_bound = std::nullopt,
                         const SearchBudget & budget = {}) -> ConnectedMax;

struct ConnectedMaxTable
{
    std::vector<ConnectedMax> entries;          ///< entries[s-1] for s = 1..g+1
};

auto connected_max_table(const Graph & g, int extra, const SearchBudget & budget = {}) -> ConnectedMaxTable;

/// e_g from the connected-size table: the best sum over integer partitions of
/// g+1 bounds e_g from above, and a vertex-disjoint placement of component
/// witnesses reaching it makes the answer exact. Otherwise the best witness
/// found is returned as a lower bound together with the upper bound.
auto eg_exact(const Graph & g, int extra, const SearchBudget & budget = {}) -> SubgraphWitness;

/// Lower bound on e_g(BH_n) from sets made of equivalent-vertex pairs plus at
/// most one unpaired vertex in each colour class. The paired part is a
/// connected set of X_n classes containing class 0.
auto eg_paired_search(int n, int extra, const SearchBudget & budget = {}) -> SubgraphWitness;

/// {u, u'} with u = (0,...,0) plus the g-1 smallest common neighbours of the
/// pair; induces K_{2,g-1}. Requires 2 <= g and g-1 <= 2n.
auto construct_k2_star(int n, int extra) -> SubgraphWitness;

/// Dense (g+1)-sets for 9 <= g <= 2n-1 (n >= 3) built from fibre expansions
/// of a 6-cycle of X_n and of unicyclic extensions of it.
auto construct_dense_witness(int n, int extra) -> SubgraphWitness;

/// An induced 6-cycle of X_n through class 0 (lexicographically first).
auto find_xn_hexagon(int n) -> std::vector<Vertex>;

struct EgBoundsOptions
{
    SearchBudget budget;
    /// BH_n is handed to eg_exact only when 4^n is at most this.
    std::size_t exact_max_vertices = 64;
};

struct EgBounds
{
    int n = 0;
    int g = 0;
    std::size_t lower = 0;
    std::optional<std::size_t> upper;
    std::vector<SubgraphWitness> witnesses;     ///< every construction that ran
    /// For 2 <= g <= 8 with a known upper bound: lower == upper == 2g-2.
    std::optional<bool> matches_2g_minus_2;

    auto best() const -> const SubgraphWitness &;
};

auto eg_bounds(int n, int extra, const EgBoundsOptions & options = {}) -> EgBounds;

} // namespace bhx
