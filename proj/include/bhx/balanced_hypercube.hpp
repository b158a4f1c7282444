#pragma once

#include "bhx/graph.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bhx {

/// Vertex id in BH_n: sum of a_i * 4^i.
using BhId = std::uint64_t;

/// Largest dimension addressable by a 64-bit id.
inline constexpr int kMaxDimension = 31;

/// Digits (a_0, ..., a_{n-1}) of a BH_n vertex, each in {0,1,2,3}.
struct BhVertex
{
    std::vector<std::uint8_t> digits;

    auto dimension() const -> int { return static_cast<int>(digits.size()); }
    friend auto operator<=>(const BhVertex &, const BhVertex &) = default;
};

auto bh_encode(const BhVertex & v) -> BhId;
auto bh_decode(BhId id, int n) -> BhVertex;

/// "2,0,1" <-> BhVertex; a_0 first.
auto parse_bh_vertex(std::string_view text) -> BhVertex;
auto format_bh_vertex(const BhVertex & v) -> std::string;
auto format_bh_id(BhId id, int n) -> std::string;

/// The 2n neighbours of v, sorted by id.
auto bh_neighbors(int n, const BhVertex & v) -> std::vector<BhVertex>;
auto bh_neighbor_ids(int n, BhId id) -> std::vector<BhId>;

/// The vertex sharing all 2n neighbours with v: a_0 shifted by 2.
auto equivalent_vertex(int n, const BhVertex & v) -> BhVertex;
inline auto equivalent_id(BhId id) -> BhId { return id ^ 2U; }

/// BH_n without materialised storage; neighbourhoods are computed on demand.
class ImplicitBh
{
public:
    explicit ImplicitBh(int n);

    auto dimension() const -> int { return n_; }
    auto vertex_count() const -> BhId { return BhId{1} << (2 * n_); }
    auto neighbors(BhId id) const -> std::vector<BhId> { return bh_neighbor_ids(n_, id); }
    auto adjacent(BhId u, BhId v) const -> bool;
    auto induced_edge_count(std::span<const BhId> subset) const -> std::size_t;

private:
    int n_;
};

inline constexpr std::size_t kDefaultMaterializeLimit = std::size_t{1} << 20;

/// Materialised BH_n. Throws Refusal when 4^n exceeds materialize_limit; use
/// ImplicitBh for those sizes.
auto build_bh(int n, std::size_t materialize_limit = kDefaultMaterializeLimit) -> Graph;

/// Histogram of |N(u) ∩ N(v)| over unordered pairs u != v.
struct CommonNeighborSpectrum
{
    int n = 0;
    std::map<std::size_t, std::size_t> histogram;
    /// For each vertex, the vertices sharing exactly 2n neighbours with it.
    std::vector<std::vector<Vertex>> full_partners;

    /// Every value in {0, 2, 2n} and every vertex has exactly one full partner.
    auto holds() const -> bool;
};

auto common_neighbor_spectrum(int n, std::size_t materialize_limit = 4096) -> CommonNeighborSpectrum;

/// X_n class of a BH vertex: fibres {v, v'} numbered (a_0 mod 2) + 2 * (id / 4).
inline auto quotient_class(BhId id) -> BhId { return (id & 1U) | ((id >> 2) << 1); }
/// Fibre member with index 0 (a_0 in {0,1}) and index 1 (a_0 in {2,3}).
inline auto fiber_member(BhId cls, int index) -> BhId
{
    return ((cls & 1U) | ((cls >> 1) << 2)) + (index ? 2U : 0U);
}
inline auto fiber_index(BhId id) -> int { return static_cast<int>((id >> 1) & 1U); }

struct QuotientMap
{
    std::vector<Vertex> class_of;
    std::vector<std::array<Vertex, 2>> fiber_of;
};

struct Quotient
{
    Graph graph;
    QuotientMap map;
};

/// X_n as the quotient of BH_n by equivalent-vertex pairs. The pairs are found
/// from neighbourhoods and checked against the closed form; classes are
/// adjacent iff all four representative pairs are adjacent.
auto build_xn(int n, std::size_t materialize_limit = kDefaultMaterializeLimit) -> Quotient;

/// X_n adjacency on demand, for dimensions too large to materialise.
class ImplicitXn
{
public:
    explicit ImplicitXn(int n) : bh_(n) {}

    auto dimension() const -> int { return bh_.dimension(); }
    auto vertex_count() const -> BhId { return bh_.vertex_count() / 2; }
    auto neighbors(BhId cls) const -> std::vector<BhId>;
    auto adjacent(BhId a, BhId b) const -> bool { return bh_.adjacent(fiber_member(a, 0), fiber_member(b, 0)); }
    /// Colour class of the bipartition inherited from BH_n (parity of a_0).
    static auto part(BhId cls) -> int { return static_cast<int>(cls & 1U); }
    auto bh() const -> const ImplicitBh & { return bh_; }

private:
    ImplicitBh bh_;
};

struct IsoWitness
{
    int n = 0;
    /// BH vertex id -> (X_n class, fibre index).
    std::vector<std::pair<Vertex, int>> bijection;
    std::size_t bh_edges_checked = 0;
    std::size_t product_edges_checked = 0;
};

/// Exhibits BH_n ≅ X_n ∘ 2K_1 and checks edges both ways. Throws
/// VerificationFailure naming the first mismatching edge.
auto verify_lex_decomposition(int n, std::size_t materialize_limit = kDefaultMaterializeLimit) -> IsoWitness;

} // namespace bhx
