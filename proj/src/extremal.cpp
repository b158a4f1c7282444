#include "bhx/extremal.hpp"

#include "bhx/errors.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <unordered_map>
#include <variant>

namespace bhx {

namespace {

using Clock = std::chrono::steady_clock;

/// Polled wall-clock limit; checks the clock every 1024 calls.
class Deadline
{
public:
    explicit Deadline(std::chrono::duration<double> wall) :
        end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(wall))
    {
    }

    auto expired() -> bool
    {
        if (! expired_ && (++ticks_ & 1023U) == 0 && Clock::now() > end_)
            expired_ = true;
        return expired_;
    }

    auto hit() const -> bool { return expired_; }

private:
    Clock::time_point end_;
    std::uint64_t ticks_ = 0;
    bool expired_ = false;
};

/// C(n, k), saturating at cap + 1.
auto binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) -> std::uint64_t
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    long double c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (c > static_cast<long double>(cap))
            return cap + 1;
    }
    return static_cast<std::uint64_t>(c + 0.5L);
}

auto bipartite_ceiling(std::size_t s) -> std::size_t { return (s / 2) * ((s + 1) / 2); }

/// Most edges that growing a set from `have` to `target` vertices can add
/// when every vertex has degree at most max_degree.
auto growth_bound(std::size_t have, std::size_t target, std::size_t max_degree) -> std::size_t
{
    std::size_t b = 0;
    for (auto j = have; j < target; ++j)
        b += std::min(max_degree, j);
    return b;
}

auto is_bipartite(const Graph & g) -> bool
{
    return std::holds_alternative<Bipartition>(bipartition(g));
}

void check_extra(int extra, std::size_t order)
{
    if (extra < 0)
        throw InputError("g must be non-negative");
    if (static_cast<std::size_t>(extra) + 1 > order)
        throw InputError("g+1 = " + std::to_string(extra + 1) + " exceeds the graph order " + std::to_string(order));
}

void check_bh_dimension(int n)
{
    // witness ids are 32-bit graph vertex ids
    if (n < 1 || n > 15)
        throw InputError("dimension n must be in 1..15 for witness constructions, got " + std::to_string(n));
}

auto to_vertices(std::vector<BhId> ids) -> std::vector<Vertex>
{
    std::sort(ids.begin(), ids.end());
    return {ids.begin(), ids.end()};
}

/// Keeps the top_k lexicographically smallest sets attaining the best value.
class BestSets
{
public:
    explicit BestSets(std::size_t top_k) : top_k_(std::max<std::size_t>(top_k, 1)) {}

    auto value() const -> long long { return best_; }

    void offer(long long value, std::vector<Vertex> set)
    {
        if (value < best_)
            return;
        std::sort(set.begin(), set.end());
        if (value > best_) {
            best_ = value;
            sets_.clear();
        }
        auto pos = std::lower_bound(sets_.begin(), sets_.end(), set);
        if (pos != sets_.end() && *pos == set)
            return;
        if (sets_.size() == top_k_ && pos == sets_.end())
            return;
        sets_.insert(pos, std::move(set));
        if (sets_.size() > top_k_)
            sets_.pop_back();
    }

    auto sets() && -> std::vector<std::vector<Vertex>> { return std::move(sets_); }

private:
    std::size_t top_k_;
    long long best_ = -1;
    std::vector<std::vector<Vertex>> sets_;
};

/// Rooted enumeration of connected vertex sets: every set is produced once,
/// from its minimum vertex, by growing an extension frontier of vertices that
/// are larger than the root and not yet adjacent to the set.
template <typename Neighbors, typename Visit, typename Prune>
class ConnectedSetEnumerator
{
public:
    ConnectedSetEnumerator(Neighbors neighbors, std::size_t target, Visit visit, Prune prune, Deadline & deadline) :
        neighbors_(std::move(neighbors)), target_(target), visit_(std::move(visit)), prune_(std::move(prune)),
        deadline_(deadline)
    {
    }

    void run_from(BhId root)
    {
        set_.assign(1, root);
        cover_.clear();
        bump(root, +1);
        std::vector<BhId> frontier;
        for (auto u : neighbors_(root))
            if (u > root)
                frontier.push_back(u);
        extend(frontier, root, 0);
        bump(root, -1);
    }

private:
    auto covered(BhId v) const -> bool
    {
        auto it = cover_.find(v);
        return it != cover_.end() && it->second > 0;
    }

    void bump(BhId v, int delta)
    {
        cover_[v] += delta;
        for (auto u : neighbors_(v))
            cover_[u] += delta;
    }

    void extend(const std::vector<BhId> & frontier, BhId root, std::size_t edges)
    {
        if (deadline_.expired())
            return;
        if (set_.size() == target_) {
            visit_(set_, edges);
            return;
        }
        if (prune_(set_.size(), edges))
            return;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            auto w = frontier[i];
            std::vector<BhId> next(frontier.begin() + static_cast<std::ptrdiff_t>(i) + 1, frontier.end());
            std::size_t gained = 0;
            for (auto u : neighbors_(w)) {
                if (u > root && ! covered(u))
                    next.push_back(u);
                if (std::find(set_.begin(), set_.end(), u) != set_.end())
                    ++gained;
            }
            set_.push_back(w);
            bump(w, +1);
            extend(next, root, edges + gained);
            bump(w, -1);
            set_.pop_back();
        }
    }

    Neighbors neighbors_;
    std::size_t target_;
    Visit visit_;
    Prune prune_;
    Deadline & deadline_;
    std::vector<BhId> set_;
    std::unordered_map<BhId, int> cover_;
};

template <typename Neighbors, typename Visit, typename Prune>
auto make_enumerator(Neighbors n, std::size_t target, Visit v, Prune p, Deadline & d)
{
    return ConnectedSetEnumerator<Neighbors, Visit, Prune>(std::move(n), target, std::move(v), std::move(p), d);
}

/// Partitions of total into nonincreasing parts.
void integer_partitions(std::size_t total, std::size_t max_part, std::vector<std::size_t> & current,
                        std::vector<std::vector<std::size_t>> & out)
{
    if (total == 0) {
        out.push_back(current);
        return;
    }
    for (auto p = std::min(total, max_part); p >= 1; --p) {
        current.push_back(p);
        integer_partitions(total - p, p, current, out);
        current.pop_back();
    }
}

/// Branch and bound over k-subsets in lexicographic order. Starts from a
/// seeded best, stops as soon as `stop_at` edges are reached, and reports
/// whether the whole space was covered before the deadline.
struct SubsetSearch
{
    long long best = -1;
    std::vector<Vertex> set;
    bool complete = true;
};

auto subset_search(const Graph & g, std::size_t k, long long seed, std::vector<Vertex> seed_set, std::size_t stop_at,
                   Deadline * deadline) -> SubsetSearch
{
    SubsetSearch out{seed, std::move(seed_set), true};
    if (out.best >= static_cast<long long>(stop_at))
        return out;
    auto order = g.vertex_count();
    auto max_degree = g.max_degree();
    std::vector<char> chosen(order, 0);
    std::vector<Vertex> current;
    bool done = false;

    // lexicographic order with strict improvement keeps the smallest witness
    auto recurse = [&](auto && self, Vertex start, std::size_t edges) -> void {
        if (done)
            return;
        if (deadline && deadline->expired()) {
            out.complete = false;
            done = true;
            return;
        }
        if (current.size() == k) {
            if (static_cast<long long>(edges) > out.best) {
                out.best = static_cast<long long>(edges);
                out.set = current;
                if (edges >= stop_at)
                    done = true;
            }
            return;
        }
        if (out.best >= 0 && static_cast<long long>(edges + growth_bound(current.size(), k, max_degree)) <= out.best)
            return;
        for (Vertex v = start; v + (k - current.size()) <= order; ++v) {
            std::size_t gained = 0;
            for (auto w : g.neighbors(v))
                gained += static_cast<std::size_t>(chosen[w]);
            chosen[v] = 1;
            current.push_back(v);
            self(self, v + 1, edges + gained);
            current.pop_back();
            chosen[v] = 0;
            if (done)
                return;
        }
    };
    recurse(recurse, 0, 0);
    return out;
}

} // namespace

auto to_string(Certification c) -> std::string
{
    switch (c) {
    case Certification::exact:
        return "exact";
    case Certification::lower_bound:
        return "lower_bound";
    case Certification::upper_bound_only:
        return "upper_bound_only";
    }
    return "unknown";
}

auto parse_certification(const std::string & text) -> Certification
{
    if (text == "exact")
        return Certification::exact;
    if (text == "lower_bound")
        return Certification::lower_bound;
    if (text == "upper_bound_only")
        return Certification::upper_bound_only;
    throw InputError("unknown certification \"" + text + "\"");
}

auto revalidate(const Graph & g, const SubgraphWitness & w, int extra) -> bool
{
    if (extra < 0 || w.vertices.size() != static_cast<std::size_t>(extra) + 1)
        return false;
    auto sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    if (! sorted.empty() && sorted.back() >= g.vertex_count())
        return false;
    return induced_edge_count(g, sorted) == w.induced_edge_count;
}

auto revalidate(const ImplicitBh & bh, const SubgraphWitness & w, int extra) -> bool
{
    if (extra < 0 || w.vertices.size() != static_cast<std::size_t>(extra) + 1)
        return false;
    std::vector<BhId> ids(w.vertices.begin(), w.vertices.end());
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        return false;
    if (! ids.empty() && ids.back() >= bh.vertex_count())
        return false;
    return bh.induced_edge_count(ids) == w.induced_edge_count;
}

auto eg_exhaustive(const Graph & g, int extra, const SearchBudget & budget) -> SubgraphWitness
{
    auto order = g.vertex_count();
    check_extra(extra, order);
    auto k = static_cast<std::size_t>(extra) + 1;
    if (binomial_capped(order, k, budget.subset_budget) > budget.subset_budget)
        throw Refusal("eg_exhaustive: C(" + std::to_string(order) + ", " + std::to_string(k)
                      + ") subsets exceed the enumeration budget of " + std::to_string(budget.subset_budget)
                      + "; use eg_exact");

    auto ceiling = is_bipartite(g) ? bipartite_ceiling(k) : k * (k - 1) / 2;
    auto found = subset_search(g, k, -1, {}, ceiling, nullptr);
    auto best = found.best;
    auto best_set = std::move(found.set);

    SubgraphWitness w;
    w.vertices = std::move(best_set);
    w.induced_edge_count = static_cast<std::size_t>(best);
    w.certification = Certification::exact;
    w.construction = "exhaustive";
    return w;
}

auto max_edges_connected(const Graph & g, std::size_t s, std::optional<std::size_t> edge_bound,
                         const SearchBudget & budget) -> ConnectedMax
{
    if (s == 0)
        throw InputError("max_edges_connected: size must be at least 1");
    ConnectedMax result;
    result.size = s;
    if (s > g.vertex_count())
        return result;

    auto ceiling = is_bipartite(g) ? bipartite_ceiling(s) : s * (s - 1) / 2;
    if (edge_bound)
        ceiling = std::min(ceiling, *edge_bound);
    auto max_degree = g.max_degree();

    BestSets best(budget.top_k);
    Deadline deadline(budget.wall);
    auto neighbors = [&g](BhId v) { return g.neighbors(static_cast<Vertex>(v)); };
    auto visit = [&](const std::vector<BhId> & set, std::size_t edges) {
        best.offer(static_cast<long long>(edges), std::vector<Vertex>(set.begin(), set.end()));
    };
    // ties are kept so the smallest witnesses survive: only strictly worse branches are cut
    auto prune = [&](std::size_t have, std::size_t edges) {
        auto bound = std::min(ceiling, edges + growth_bound(have, s, max_degree));
        return static_cast<long long>(bound) < best.value();
    };
    auto enumerator = make_enumerator(neighbors, s, visit, prune, deadline);
    for (Vertex root = 0; root < g.vertex_count() && ! deadline.hit(); ++root)
        enumerator.run_from(root);

    if (best.value() >= 0) {
        result.edges = static_cast<std::size_t>(best.value());
        result.witnesses = std::move(best).sets();
    }
    result.certification = deadline.hit() ? Certification::lower_bound : Certification::exact;
    return result;
}

auto connected_max_table(const Graph & g, int extra, const SearchBudget & budget) -> ConnectedMaxTable
{
    check_extra(extra, g.vertex_count());
    ConnectedMaxTable table;
    for (std::size_t s = 1; s <= static_cast<std::size_t>(extra) + 1; ++s)
        table.entries.push_back(max_edges_connected(g, s, std::nullopt, budget));
    return table;
}

auto eg_exact(const Graph & g, int extra, const SearchBudget & budget) -> SubgraphWitness
{
    check_extra(extra, g.vertex_count());
    auto k = static_cast<std::size_t>(extra) + 1;
    auto table = connected_max_table(g, extra, budget);
    bool table_exact = std::all_of(table.entries.begin(), table.entries.end(),
                                   [](const ConnectedMax & e) { return e.certification == Certification::exact; });

    std::vector<std::vector<std::size_t>> partitions;
    std::vector<std::size_t> scratch;
    integer_partitions(k, k, scratch, partitions);

    auto partition_value = [&](const std::vector<std::size_t> & parts) -> std::optional<std::size_t> {
        std::size_t sum = 0;
        for (auto p : parts) {
            const auto & entry = table.entries[p - 1];
            if (! entry.edges)
                return std::nullopt;
            sum += *entry.edges;
        }
        return sum;
    };

    std::size_t upper = 0;
    for (const auto & parts : partitions)
        if (auto v = partition_value(parts))
            upper = std::max(upper, *v);

    // fallback witness: the k smallest ids
    std::vector<Vertex> best_set(k);
    for (std::size_t i = 0; i < k; ++i)
        best_set[i] = static_cast<Vertex>(i);
    auto best_count = induced_edge_count(g, best_set);

    std::vector<char> used(g.vertex_count(), 0);
    std::vector<Vertex> placed;
    std::size_t attempts = 0;
    constexpr std::size_t kMaxAttempts = 200'000;

    auto consider = [&](std::vector<Vertex> set) {
        std::sort(set.begin(), set.end());
        auto count = induced_edge_count(g, set);
        if (count > best_count || (count == best_count && set < best_set)) {
            best_count = count;
            best_set = std::move(set);
        }
    };

    // vertex-disjoint placement of one witness per part, with backtracking
    auto place = [&](auto && self, const std::vector<std::size_t> & parts, std::size_t idx) -> void {
        if (attempts >= kMaxAttempts)
            return;
        if (idx == parts.size()) {
            ++attempts;
            consider(placed);
            return;
        }
        for (const auto & candidate : table.entries[parts[idx] - 1].witnesses) {
            if (std::any_of(candidate.begin(), candidate.end(), [&](Vertex v) { return used[v] != 0; }))
                continue;
            for (auto v : candidate) {
                used[v] = 1;
                placed.push_back(v);
            }
            self(self, parts, idx + 1);
            for (auto v : candidate) {
                used[v] = 0;
                placed.pop_back();
            }
            if (attempts >= kMaxAttempts)
                return;
        }
    };

    for (const auto & parts : partitions) {
        auto v = partition_value(parts);
        if (v && *v == upper)
            place(place, parts, 0);
    }

    if (table_exact && best_count > upper)
        throw VerificationFailure("eg_exact: witness with " + std::to_string(best_count)
                                  + " edges exceeds the partition bound " + std::to_string(upper));

    // the bound is not always attained by disjoint component witnesses;
    // settle the value by a search seeded with the best placement
    bool settled = table_exact && best_count == upper;
    if (table_exact && ! settled) {
        Deadline deadline(budget.wall);
        auto found = subset_search(g, k, static_cast<long long>(best_count), best_set, upper, &deadline);
        best_count = static_cast<std::size_t>(found.best);
        best_set = std::move(found.set);
        settled = found.complete || best_count == upper;
    }

    SubgraphWitness w;
    w.vertices = std::move(best_set);
    w.induced_edge_count = best_count;
    w.construction = "exact";
    if (settled) {
        w.certification = Certification::exact;
    }
    else if (table_exact) {
        w.certification = Certification::lower_bound;
        w.upper_bound = upper;
        w.note = "search hit the wall budget below the partition bound";
    }
    else {
        w.certification = Certification::lower_bound;
        w.note = "connected-size table hit the wall budget; no upper bound";
    }
    return w;
}

namespace {

/// Cached neighbourhoods of an implicit X_n.
class XnNeighbors
{
public:
    explicit XnNeighbors(int n) : xn_(n) {}

    auto operator()(BhId cls) -> const std::vector<BhId> &
    {
        auto it = cache_.find(cls);
        if (it == cache_.end())
            it = cache_.emplace(cls, xn_.neighbors(cls)).first;
        return it->second;
    }

    auto xn() const -> const ImplicitXn & { return xn_; }

private:
    ImplicitXn xn_;
    std::unordered_map<BhId, std::vector<BhId>> cache_;
};

/// Expands X_n classes into both fibre members.
auto expand_fibers(const std::vector<BhId> & classes) -> std::vector<BhId>
{
    std::vector<BhId> out;
    for (auto c : classes) {
        out.push_back(fiber_member(c, 0));
        out.push_back(fiber_member(c, 1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

auto eg_paired_search(int n, int extra, const SearchBudget & budget) -> SubgraphWitness
{
    check_bh_dimension(n);
    ImplicitBh bh(n);
    check_extra(extra, static_cast<std::size_t>(bh.vertex_count()));
    auto k = static_cast<std::size_t>(extra) + 1;
    auto class_count = static_cast<std::size_t>(bh.vertex_count() / 2);
    auto degree = static_cast<std::size_t>(n);

    XnNeighbors nbrs(n);
    Deadline deadline(budget.wall);

    long long best = -1;
    std::vector<BhId> best_set;
    auto offer = [&](long long value, std::vector<BhId> set) {
        std::sort(set.begin(), set.end());
        if (value > best || (value == best && set < best_set)) {
            best = value;
            best_set = std::move(set);
        }
    };

    auto smallest_free_in_part = [&](const std::vector<BhId> & taken, int part) -> std::optional<BhId> {
        for (BhId c = static_cast<BhId>(part); c < class_count; c += 2)
            if (std::find(taken.begin(), taken.end(), c) == taken.end())
                return c;
        return std::nullopt;
    };

    // S: paired classes; adds `singles` unpaired vertices (at most one per colour class)
    auto evaluate = [&](const std::vector<BhId> & paired, std::size_t paired_edges, std::size_t singles) {
        auto base = static_cast<long long>(4 * paired_edges);
        auto members = expand_fibers(paired);
        if (singles == 0) {
            offer(base, members);
            return;
        }
        // d(c) = |N(c) ∩ S| for classes outside S
        std::vector<std::pair<BhId, std::size_t>> touch;
        for (auto s : paired)
            for (auto c : nbrs(s)) {
                if (std::find(paired.begin(), paired.end(), c) != paired.end())
                    continue;
                auto it = std::find_if(touch.begin(), touch.end(), [&](const auto & p) { return p.first == c; });
                if (it == touch.end())
                    touch.emplace_back(c, 1);
                else
                    ++it->second;
            }
        auto d_of = [&](BhId c) -> std::size_t {
            auto it = std::find_if(touch.begin(), touch.end(), [&](const auto & p) { return p.first == c; });
            return it == touch.end() ? 0 : it->second;
        };
        auto with_singles = [&](std::initializer_list<BhId> classes) {
            auto set = members;
            for (auto c : classes)
                set.push_back(fiber_member(c, 0));
            return set;
        };

        if (singles == 1) {
            for (auto [c, d] : touch)
                offer(base + 2 * static_cast<long long>(d), with_singles({c}));
            if (touch.empty())
                for (int part : {0, 1})
                    if (auto c = smallest_free_in_part(paired, part))
                        offer(base, with_singles({*c}));
            return;
        }

        // two singles, one per colour class
        std::array<std::optional<std::pair<BhId, std::size_t>>, 2> top;
        for (auto [c, d] : touch) {
            auto & slot = top[static_cast<std::size_t>(ImplicitXn::part(c))];
            if (! slot || d > slot->second || (d == slot->second && c < slot->first))
                slot = std::pair{c, d};
        }
        for (int part : {0, 1})
            if (! top[static_cast<std::size_t>(part)])
                if (auto c = smallest_free_in_part(paired, part))
                    top[static_cast<std::size_t>(part)] = std::pair{*c, std::size_t{0}};
        if (top[0] && top[1]) {
            auto [c0, d0] = *top[0];
            auto [c1, d1] = *top[1];
            auto bonus = nbrs.xn().adjacent(c0, c1) ? 1 : 0;
            offer(base + 2 * static_cast<long long>(d0 + d1) + bonus, with_singles({c0, c1}));
        }
        // an adjacent pair of singles gains one more edge
        std::vector<BhId> firsts;
        for (auto [c, d] : touch)
            firsts.push_back(c);
        if (paired.empty())
            firsts.push_back(0);
        for (auto c0 : firsts) {
            auto d0 = d_of(c0);
            for (auto c1 : nbrs(c0)) {
                if (std::find(paired.begin(), paired.end(), c1) != paired.end())
                    continue;
                offer(base + 2 * static_cast<long long>(d0 + d_of(c1)) + 1, with_singles({c0, c1}));
            }
        }
    };

    auto m_max = k / 2;
    auto m_min = (k >= 2) ? (k - 1) / 2 : 0;
    for (auto m = m_max + 1; m-- > m_min;) {
        auto singles = k - 2 * m;
        if (m > class_count || singles > 2)
            continue;
        if (m == 0) {
            evaluate({}, 0, singles);
            continue;
        }
        auto single_gain = singles == 0 ? 0 : (singles == 1 ? 2 * std::min(degree, m) : 4 * std::min(degree, m) + 1);
        auto visit = [&](const std::vector<BhId> & set, std::size_t edges) {
            auto sorted = set;
            std::sort(sorted.begin(), sorted.end());
            evaluate(sorted, edges, singles);
        };
        auto prune = [&](std::size_t have, std::size_t edges) {
            auto bound = 4 * (edges + growth_bound(have, m, degree)) + single_gain;
            return static_cast<long long>(bound) < best;
        };
        auto neighbors = [&nbrs](BhId c) -> const std::vector<BhId> & { return nbrs(c); };
        auto enumerator = make_enumerator(neighbors, m, visit, prune, deadline);
        enumerator.run_from(0);
    }

    SubgraphWitness w;
    w.vertices = to_vertices(best_set);
    w.induced_edge_count = static_cast<std::size_t>(best);
    w.certification = Certification::lower_bound;
    w.construction = "paired";
    if (deadline.hit())
        w.note = "wall budget reached; best paired set so far";
    if (! revalidate(bh, w, extra))
        throw VerificationFailure("eg_paired_search: witness edge count does not recount");
    return w;
}

auto construct_k2_star(int n, int extra) -> SubgraphWitness
{
    check_bh_dimension(n);
    if (extra < 2)
        throw InputError("construct_k2_star needs g >= 2");
    if (extra - 1 > 2 * n)
        throw Refusal("construct_k2_star: g-1 = " + std::to_string(extra - 1) + " exceeds the " + std::to_string(2 * n)
                         + " common neighbours of an equivalent pair in BH_" + std::to_string(n));
    ImplicitBh bh(n);
    BhId u = 0;
    auto pair_common = bh.neighbors(u);       // N(u) = N(u') for the equivalent pair
    std::vector<BhId> ids{u, equivalent_id(u)};
    ids.insert(ids.end(), pair_common.begin(), pair_common.begin() + (extra - 1));

    SubgraphWitness w;
    w.vertices = to_vertices(ids);
    w.induced_edge_count = bh.induced_edge_count(ids);
    w.certification = Certification::lower_bound;
    w.construction = "A_g";

    std::vector<Edge> local;
    for (std::size_t i = 0; i < w.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
            if (bh.adjacent(w.vertices[i], w.vertices[j]))
                local.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    auto parts = is_complete_bipartite(build_graph(w.vertices.size(), local));
    auto expected = std::pair<std::size_t, std::size_t>{std::min(2, extra - 1), std::max(2, extra - 1)};
    if (! parts || *parts != expected || w.induced_edge_count != static_cast<std::size_t>(2 * extra - 2))
        throw VerificationFailure("construct_k2_star: BH_" + std::to_string(n) + " witness for g = "
                                  + std::to_string(extra) + " is not K_{2,g-1}");
    return w;
}

namespace {

/// Shortest cycle length through root in an implicit graph, searching up to
/// max_len; 0 if none.
template <typename Neighbors>
auto shortest_cycle_through_root(Neighbors & nbrs, BhId root, std::size_t max_len) -> std::size_t
{
    std::unordered_map<BhId, std::pair<std::size_t, BhId>> info;   // dist, branch
    std::unordered_map<BhId, BhId> parent;
    std::queue<BhId> q;
    info[root] = {0, root};
    parent[root] = root;
    q.push(root);
    std::size_t best = 0;
    while (! q.empty()) {
        auto u = q.front();
        q.pop();
        auto [du, bu] = info[u];
        if (2 * du + 1 > max_len || (best && 2 * du + 1 >= best))
            break;
        for (auto w : nbrs(u)) {
            auto it = info.find(w);
            if (it == info.end()) {
                info[w] = {du + 1, u == root ? w : bu};
                parent[w] = u;
                q.push(w);
            }
            else if (w != parent[u] && parent[w] != u && it->second.second != bu) {
                auto len = du + it->second.first + 1;
                if (! best || len < best)
                    best = len;
            }
        }
    }
    return best;
}

} // namespace

auto find_xn_hexagon(int n) -> std::vector<Vertex>
{
    check_bh_dimension(n);
    if (n < 3)
        throw InputError("X_n has girth 6 only for n >= 3");
    XnNeighbors nbrs(n);
    auto shortest = shortest_cycle_through_root(nbrs, 0, 6);
    if (shortest != 6)
        throw VerificationFailure("X_" + std::to_string(n) + ": shortest cycle through class 0 has length "
                                  + std::to_string(shortest) + ", expected 6");

    // depths up to 3 suffice for a 6-cycle through the root
    std::unordered_map<BhId, std::size_t> dist{{0, 0}};
    std::vector<BhId> layer{0};
    for (std::size_t d = 1; d <= 3; ++d) {
        std::vector<BhId> next;
        for (auto u : layer)
            for (auto w : nbrs(u))
                if (dist.emplace(w, d).second)
                    next.push_back(w);
        layer = std::move(next);
    }

    std::vector<BhId> path{0};
    auto extend = [&](auto && self) -> bool {
        if (path.size() == 6)
            return nbrs.xn().adjacent(path.back(), 0) && path[1] < path.back();
        for (auto w : nbrs(path.back())) {
            if (w == 0 || std::find(path.begin(), path.end(), w) != path.end())
                continue;
            auto it = dist.find(w);
            if (it == dist.end() || it->second > 6 - path.size())
                continue;
            path.push_back(w);
            if (self(self))
                return true;
            path.pop_back();
        }
        return false;
    };
    if (! extend(extend))
        throw VerificationFailure("X_" + std::to_string(n) + ": no 6-cycle through class 0");

    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 2; j < 6; ++j)
            if (! (i == 0 && j == 5) && nbrs.xn().adjacent(path[i], path[j]))
                throw VerificationFailure("X_" + std::to_string(n) + ": 6-cycle has a chord");
    return {path.begin(), path.end()};
}

auto construct_dense_witness(int n, int extra) -> SubgraphWitness
{
    check_bh_dimension(n);
    if (n < 3 || extra < 9 || extra > 2 * n - 1)
        throw InputError("construct_dense_witness needs n >= 3 and 9 <= g <= 2n-1, got n = " + std::to_string(n)
                         + ", g = " + std::to_string(extra));
    ImplicitBh bh(n);
    XnNeighbors nbrs(n);
    auto hexagon = find_xn_hexagon(n);
    std::vector<BhId> cycle(hexagon.begin(), hexagon.end());

    SubgraphWitness w;
    w.certification = Certification::lower_bound;
    std::vector<BhId> ids;
    std::size_t required = 0;

    if (extra == 9 || extra == 10) {
        auto h0 = expand_fibers(cycle);
        if (extra == 9) {
            // drop the endpoints of the smallest edge of H_0
            std::optional<std::pair<BhId, BhId>> drop;
            for (std::size_t i = 0; i < h0.size() && ! drop; ++i)
                for (std::size_t j = i + 1; j < h0.size() && ! drop; ++j)
                    if (bh.adjacent(h0[i], h0[j]))
                        drop = std::pair{h0[i], h0[j]};
            for (auto v : h0)
                if (v != drop->first && v != drop->second)
                    ids.push_back(v);
            required = 2 * static_cast<std::size_t>(extra) - 1;
            w.construction = "c6-fibres-minus-edge";
        }
        else {
            ids.assign(h0.begin() + 1, h0.end());
            required = 2 * static_cast<std::size_t>(extra);
            w.construction = "c6-fibres-minus-vertex";
        }
    }
    else {
        auto t = static_cast<std::size_t>(extra % 2 == 1 ? (extra + 1) / 2 : extra / 2);
        std::vector<BhId> grown = cycle;
        bool chord_free = true;
        while (grown.size() < t) {
            std::optional<BhId> pick;
            std::optional<BhId> fallback;
            for (auto u : grown)
                for (auto c : nbrs(u)) {
                    if (std::find(grown.begin(), grown.end(), c) != grown.end())
                        continue;
                    std::size_t touching = 0;
                    for (auto x : nbrs(c))
                        touching += std::find(grown.begin(), grown.end(), x) != grown.end() ? 1 : 0;
                    if (touching == 1 && (! pick || c < *pick))
                        pick = c;
                    if (! fallback || c < *fallback)
                        fallback = c;
                }
            if (! pick) {
                if (! fallback)
                    throw VerificationFailure("construct_dense_witness: X_" + std::to_string(n)
                                              + " has no room to grow a unicyclic set");
                pick = fallback;
                chord_free = false;
            }
            grown.push_back(*pick);
        }
        ids = expand_fibers(grown);
        if (extra % 2 == 1) {
            required = 2 * static_cast<std::size_t>(extra) + 2;
            w.construction = "unicyclic-fibres";
        }
        else {
            BhId extra_vertex = 0;
            while (std::binary_search(ids.begin(), ids.end(), extra_vertex))
                ++extra_vertex;
            ids.push_back(extra_vertex);
            required = 2 * static_cast<std::size_t>(extra);
            w.construction = "unicyclic-fibres-plus-vertex";
        }
        if (! chord_free)
            w.note = "unicyclic growth needed a chord; the induced count only increases";
    }

    w.vertices = to_vertices(ids);
    w.induced_edge_count = bh.induced_edge_count(ids);
    if (w.vertices.size() != static_cast<std::size_t>(extra) + 1 || w.induced_edge_count < required)
        throw VerificationFailure("construct_dense_witness: BH_" + std::to_string(n) + ", g = " + std::to_string(extra)
                                  + " produced " + std::to_string(w.vertices.size()) + " vertices and "
                                  + std::to_string(w.induced_edge_count) + " edges, needed "
                                  + std::to_string(required));
    return w;
}

auto EgBounds::best() const -> const SubgraphWitness &
{
    if (witnesses.empty())
        throw InputError("EgBounds has no witnesses");
    const SubgraphWitness * top = &witnesses.front();
    for (const auto & w : witnesses)
        if (w.induced_edge_count > top->induced_edge_count)
            top = &w;
    return *top;
}

auto eg_bounds(int n, int extra, const EgBoundsOptions & options) -> EgBounds
{
    check_bh_dimension(n);
    ImplicitBh bh(n);
    check_extra(extra, static_cast<std::size_t>(bh.vertex_count()));

    EgBounds b;
    b.n = n;
    b.g = extra;
    if (extra >= 2 && extra - 1 <= 2 * n)
        b.witnesses.push_back(construct_k2_star(n, extra));
    if (n >= 3 && extra >= 9 && extra <= 2 * n - 1)
        b.witnesses.push_back(construct_dense_witness(n, extra));
    b.witnesses.push_back(eg_paired_search(n, extra, options.budget));

    if (bh.vertex_count() <= options.exact_max_vertices) {
        auto exact = eg_exact(build_bh(n), extra, options.budget);
        if (exact.certification == Certification::exact)
            b.upper = exact.induced_edge_count;
        else if (exact.upper_bound)
            b.upper = exact.upper_bound;
        b.witnesses.push_back(std::move(exact));
    }
    for (const auto & w : b.witnesses)
        b.lower = std::max(b.lower, w.induced_edge_count);
    if (b.upper && *b.upper < b.lower)
        throw VerificationFailure("eg_bounds: lower bound exceeds upper bound");
    if (extra >= 2 && extra <= 8 && b.upper)
        b.matches_2g_minus_2 = b.lower == *b.upper && *b.upper == static_cast<std::size_t>(2 * extra - 2);
    return b;
}

} // namespace bhx
