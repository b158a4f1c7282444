#pragma once

#include "bhx/extremal.hpp"
#include "bhx/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bhx {

enum class CutKind
{
    beta_g,
    gamma_g,
    lambda_g,
};

auto to_string(CutKind k) -> std::string;

/// A vertex set U together with the edge cut [U, V∖U] it defines.
struct CutWitness
{
    std::vector<Vertex> side_u;                 ///< sorted
    std::vector<Edge> cut_edges;                ///< (in U, outside U)
    std::size_t cut_size = 0;
    std::size_t min_component_u = 0;
    std::size_t min_component_ubar = 0;
    CutKind certifies = CutKind::lambda_g;
    int g = 0;
};

/// Recomputes the cut, the component sizes of both sides, and the size
/// condition for the certified quantity, from scratch.
auto revalidate(const Graph & graph, const CutWitness & w) -> bool;

/// Builds a witness for side U (boundary and component sizes computed).
auto make_cut_witness(const Graph & graph, std::vector<Vertex> side_u, CutKind kind, int g) -> CutWitness;

/// Default size ceiling for the full subset sweeps.
inline constexpr std::size_t kBruteForceMaxVertices = 24;

/// β_g = min ∂(U) over |U| = g+1. For a k-regular graph with
/// use_regular_shortcut the value k(g+1) - 2e_g is used and checked against
/// the e_g witness; otherwise every (g+1)-subset is scanned.
auto beta_g(const Graph & graph, int g, bool use_regular_shortcut = true, const SearchBudget & budget = {})
    -> CutWitness;

/// γ_g = min ∂(U) over |U|, |V∖U| >= g+1, by a Gray-code sweep of every
/// subset containing vertex 0. nullopt when |V| < 2(g+1).
auto gamma_g_bruteforce(const Graph & graph, int g, std::size_t max_vertices = kBruteForceMaxVertices)
    -> std::optional<CutWitness>;

/// λ_g as the minimum ∂(U) over U such that every component of G[U] and of
/// G[V∖U] has at least g+1 vertices. A minimum g-extra cut F always has this
/// form (take U as a union of components of G - F, and F ⊇ [U, V∖U] with
/// equality at the minimum). nullopt when G is not λ_g-connected.
auto lambda_g_bruteforce(const Graph & graph, int g, std::size_t max_vertices = kBruteForceMaxVertices)
    -> std::optional<CutWitness>;

/// 2(g+1)n - 4g + 4.
auto conjecture_value(int n, int g) -> long long;

enum class Condition
{
    holds,
    fails,
    unknown,
};

auto to_string(Condition c) -> std::string;

enum class Verdict
{
    equals_conjecture,
    below_conjecture,
    inconclusive,
};

auto to_string(Verdict v) -> std::string;

struct PipelineReport
{
    int n = 0;
    int g = 0;
    /// |V(BH_n)| = 4^n >= 3(g+1): with edge-transitivity, λ_g = γ_g.
    bool cond_order = false;
    /// 2n >= 6 e_g / (g+1): γ_g = β_g. "holds" is only concluded from the
    /// upper bound on e_g, "fails" only from the lower bound.
    Condition cond_degree = Condition::unknown;
    std::size_t eg_lower = 0;
    std::optional<std::size_t> eg_upper;
    /// Interval for λ_g. The upper end 2n(g+1) - 2 eg_lower needs only
    /// cond_order (γ_g <= β_g always); the lower end needs cond_degree too.
    std::optional<long long> lambda_low;
    std::optional<long long> lambda_high;
    long long conjecture_value = 0;
    Verdict verdict = Verdict::inconclusive;
    std::string edge_transitivity;
    std::vector<std::string> reasons;
    std::vector<SubgraphWitness> eg_witnesses;
    /// The best e_g witness viewed as a cut; its size is the λ_g upper end.
    std::optional<CutWitness> beta_witness;

    auto lambda_exact() const -> std::optional<long long>
    {
        if (lambda_low && lambda_high && *lambda_low == *lambda_high)
            return lambda_low;
        return std::nullopt;
    }
};

/// Evaluates the edge-transitive reduction λ_g = γ_g and the γ_g-optimality
/// condition for BH_n, and compares the resulting value or interval with
/// 2(g+1)n - 4g + 4.
auto theorem_pipeline(int n, int g, const EgBoundsOptions & options = {}) -> PipelineReport;

struct KnownValueRow
{
    int n = 0;
    int g = 0;
    std::string quantity;       ///< "lambda", "gamma", ...
    std::string relation;       ///< "=" or "<"
    long long expected = 0;
    std::optional<long long> computed;
    std::string method;
    bool pass = false;
};

/// Brute-force λ_g / γ_g on BH_2 against reference values and the
/// pipeline grid; failures are rows, never exceptions.
auto known_values_suite(const EgBoundsOptions & options = {}) -> std::vector<KnownValueRow>;

} // namespace bhx
