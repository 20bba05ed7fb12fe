#include <boxcert/oracle.hh>
#include <boxcert/errors.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>

using std::size_t;
using std::span;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace boxcert
{
    namespace
    {
        using Mask = uint32_t;

        auto bit(int v) -> Mask
        {
            return Mask(1) << v;
        }

        // Adjacency masks plus, for every vertex subset P, the members of P whose whole
        // neighbourhood already lies inside P.
        struct Lattice
        {
            int n;
            Mask full;
            vector<Mask> neighbours;
            vector<Mask> closed;

            explicit Lattice(const Graph & g) :
                n(g.size()),
                full(n == 32 ? ~Mask(0) : bit(n) - 1),
                neighbours(n, 0),
                closed(size_t(1) << n, 0)
            {
                for (int v = 0 ; v < n ; ++v)
                    for (int w : g.neighbours(v))
                        neighbours[v] |= bit(w);
                for (Mask p = 0 ; p <= full ; ++p) {
                    Mask c = 0;
                    for (int u = 0 ; u < n ; ++u)
                        if ((p >> u & 1) && (neighbours[u] & ~p) == 0)
                            c |= bit(u);
                    closed[p] = c;
                    if (p == full)
                        break;
                }
            }
        };

        // Vertex orders in which placing w is allowed once every forbidden partner of w
        // already placed has all its neighbours placed. Such an order exists iff an interval
        // supergraph avoiding the forbidden pairs exists.
        struct IntervalOrderSearch
        {
            const Lattice & lattice;
            span<const Mask> forbidden;
            vector<char> dead;
            vector<int> order;

            IntervalOrderSearch(const Lattice & l, span<const Mask> f) :
                lattice(l),
                forbidden(f),
                dead(size_t(1) << l.n, 0)
            {
            }

            auto run(Mask placed) -> bool
            {
                if (placed == lattice.full)
                    return true;
                if (dead[placed])
                    return false;
                Mask closed = lattice.closed[placed];
                for (int w = 0 ; w < lattice.n ; ++w) {
                    if (placed >> w & 1)
                        continue;
                    if ((placed & forbidden[w]) & ~closed)
                        continue;
                    order.push_back(w);
                    if (run(placed | bit(w)))
                        return true;
                    order.pop_back();
                }
                dead[placed] = 1;
                return false;
            }
        };

        // Proper interval orders: left endpoints and right endpoints appear in the same order,
        // so vertices leave the active window first-in first-out, each as soon as all of its
        // neighbours have been placed.
        struct UnitOrderSearch
        {
            struct Key
            {
                uint64_t placed, queue;
                auto operator== (const Key &) const -> bool = default;
            };

            struct KeyHash
            {
                auto operator() (const Key & k) const -> size_t
                {
                    return std::hash<uint64_t>()(k.placed * 0x9e3779b97f4a7c15ULL ^ k.queue);
                }
            };

            const Lattice & lattice;
            span<const Mask> forbidden;
            std::unordered_set<Key, KeyHash> dead;
            vector<int> order;

            UnitOrderSearch(const Lattice & l, span<const Mask> f) :
                lattice(l),
                forbidden(f)
            {
            }

            auto run(Mask placed, const vector<int> & active) -> bool
            {
                if (placed == lattice.full)
                    return true;

                Key key{ uint64_t(placed) | (uint64_t(active.size()) << 32), 0 };
                for (int v : active)
                    key.queue = key.queue << 4 | uint64_t(v);
                if (dead.count(key))
                    return false;

                Mask active_mask = 0;
                for (int v : active)
                    active_mask |= bit(v);

                for (int w = 0 ; w < lattice.n ; ++w) {
                    if (placed >> w & 1)
                        continue;
                    if (active_mask & forbidden[w])
                        continue;
                    Mask next = placed | bit(w);
                    vector<int> queue = active;
                    queue.push_back(w);
                    size_t front = 0;
                    while (front < queue.size() && (lattice.neighbours[queue[front]] & ~next) == 0)
                        ++front;
                    queue.erase(queue.begin(), queue.begin() + front);
                    order.push_back(w);
                    if (run(next, queue))
                        return true;
                    order.pop_back();
                }
                dead.insert(key);
                return false;
            }
        };

        auto forbidden_masks(int n, span<const Edge> forbidden) -> vector<Mask>
        {
            vector<Mask> result(n, 0);
            for (auto [u, v] : forbidden) {
                if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                    throw InvalidArgument("sandwich: forbidden pair out of range");
                result[u] |= bit(v);
                result[v] |= bit(u);
            }
            return result;
        }

        auto require_small(const Graph & g, int limit) -> void
        {
            if (g.size() > std::min(limit, oracle_hard_limit))
                throw SizeLimitError("oracle limited to " + std::to_string(std::min(limit, oracle_hard_limit))
                        + " vertices, got " + std::to_string(g.size()));
        }

        // Interval [pos, last position among later neighbours] for each vertex of the order.
        auto interval_model(const Graph & g, const vector<int> & order) -> BoxRepresentation
        {
            int n = g.size();
            vector<int> position(n);
            for (int i = 0 ; i < n ; ++i)
                position[order[i]] = i;
            BoxRepresentation model(n, 1);
            for (int v = 0 ; v < n ; ++v) {
                int right = position[v];
                for (int w : g.neighbours(v))
                    right = std::max(right, position[w]);
                model.set(v, 0, Interval(position[v], right));
            }
            return model;
        }

        // Origins for the proper interval graph defined by the order, via difference constraints
        // at scale 2^e until feasible.
        auto unit_model(const Graph & g, const vector<int> & order) -> CubeRepresentation
        {
            int n = g.size();
            Mask full = n == 32 ? ~Mask(0) : bit(n) - 1;
            vector<Mask> neighbours(n, 0);
            for (int v = 0 ; v < n ; ++v)
                for (int w : g.neighbours(v))
                    neighbours[v] |= bit(w);

            // reach[i] = last position placed while order[i] was active.
            vector<int> reach(n, 0);
            vector<int> active;
            Mask placed = 0;
            for (int j = 0 ; j < n ; ++j) {
                placed |= bit(order[j]);
                active.push_back(j);
                for (int i : active)
                    reach[i] = j;
                size_t front = 0;
                while (front < active.size() && (neighbours[order[active[front]]] & ~placed & full) == 0)
                    ++front;
                active.erase(active.begin(), active.begin() + front);
            }

            struct Arc { int from, to; long weight; };
            for (int e = 0 ; e <= 20 ; ++e) {
                long scale = long(1) << e;
                vector<Arc> arcs;
                for (int i = 0 ; i + 1 < n ; ++i)
                    arcs.push_back({ i + 1, i, 0 });
                for (int i = 0 ; i < n ; ++i)
                    for (int j = i + 1 ; j < n ; ++j) {
                        if (j <= reach[i])
                            arcs.push_back({ i, j, scale });
                        else
                            arcs.push_back({ j, i, -(scale + 1) });
                    }

                vector<long> dist(n, 0);
                bool changed = true;
                for (int round = 0 ; round <= n && changed ; ++round) {
                    changed = false;
                    for (auto & a : arcs)
                        if (dist[a.from] + a.weight < dist[a.to]) {
                            dist[a.to] = dist[a.from] + a.weight;
                            changed = true;
                        }
                }
                if (changed)
                    continue;

                long low = n ? *std::min_element(dist.begin(), dist.end()) : 0;
                CubeRepresentation model(n, 1);
                for (int i = 0 ; i < n ; ++i)
                    model.set(order[i], 0, Dyadic::from_parts(dist[i] - low, e));
                return model;
            }
            throw VerificationError("unit interval model: difference constraints infeasible at every scale");
        }
    }

    auto interval_sandwich(const Graph & g, span<const Edge> forbidden) -> std::optional<BoxRepresentation>
    {
        require_small(g, oracle_hard_limit);
        Lattice lattice(g);
        auto masks = forbidden_masks(g.size(), forbidden);
        IntervalOrderSearch search(lattice, masks);
        if (! search.run(0))
            return std::nullopt;
        return interval_model(g, search.order);
    }

    auto unit_interval_sandwich(const Graph & g, span<const Edge> forbidden) -> std::optional<CubeRepresentation>
    {
        require_small(g, oracle_hard_limit);
        Lattice lattice(g);
        auto masks = forbidden_masks(g.size(), forbidden);
        UnitOrderSearch search(lattice, masks);
        if (! search.run(0, {}))
            return std::nullopt;
        return unit_model(g, search.order);
    }

    auto interval_recognition(const Graph & g) -> std::optional<BoxRepresentation>
    {
        auto forbidden = g.non_edges();
        return interval_sandwich(g, forbidden);
    }

    auto unit_interval_recognition(const Graph & g) -> std::optional<CubeRepresentation>
    {
        if (has_induced_claw(g) || ! interval_recognition(g))
            return std::nullopt;
        auto forbidden = g.non_edges();
        auto model = unit_interval_sandwich(g, forbidden);
        if (! model)
            throw VerificationError("claw-free interval graph without a unit model");
        return model;
    }

    auto is_chordal(const Graph & g) -> bool
    {
        int n = g.size();
        vector<char> removed(n, 0);
        for (int round = 0 ; round < n ; ++round) {
            bool found = false;
            for (int v = 0 ; v < n && ! found ; ++v) {
                if (removed[v])
                    continue;
                vector<int> live;
                for (int w : g.neighbours(v))
                    if (! removed[w])
                        live.push_back(w);
                bool simplicial = true;
                for (size_t a = 0 ; a < live.size() && simplicial ; ++a)
                    for (size_t b = a + 1 ; b < live.size() ; ++b)
                        if (! g.adjacent(live[a], live[b])) {
                            simplicial = false;
                            break;
                        }
                if (simplicial) {
                    removed[v] = 1;
                    found = true;
                }
            }
            if (! found)
                return false;
        }
        return true;
    }

    auto is_asteroidal_triple_free(const Graph & g) -> bool
    {
        int n = g.size();
        // component[c][v]: component label of v in g minus N[c], -1 inside N[c].
        vector<vector<int>> component(n, vector<int>(n, -1));
        for (int c = 0 ; c < n ; ++c) {
            vector<char> blocked(n, 0);
            blocked[c] = 1;
            for (int w : g.neighbours(c))
                blocked[w] = 1;
            int label = 0;
            for (int s = 0 ; s < n ; ++s) {
                if (blocked[s] || component[c][s] != -1)
                    continue;
                vector<int> stack{ s };
                component[c][s] = label;
                while (! stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    for (int y : g.neighbours(x))
                        if (! blocked[y] && component[c][y] == -1) {
                            component[c][y] = label;
                            stack.push_back(y);
                        }
                }
                ++label;
            }
        }

        auto joined = [&] (int a, int b, int avoiding) {
            return component[avoiding][a] != -1 && component[avoiding][a] == component[avoiding][b];
        };
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b)
                for (int c = b + 1 ; c < n ; ++c)
                    if (joined(a, b, c) && joined(a, c, b) && joined(b, c, a))
                        return false;
        return true;
    }

    auto has_induced_claw(const Graph & g) -> bool
    {
        for (int v = 0 ; v < g.size() ; ++v) {
            auto & nb = g.neighbours(v);
            for (size_t a = 0 ; a < nb.size() ; ++a)
                for (size_t b = a + 1 ; b < nb.size() ; ++b) {
                    if (g.adjacent(nb[a], nb[b]))
                        continue;
                    for (size_t c = b + 1 ; c < nb.size() ; ++c)
                        if (! g.adjacent(nb[a], nb[c]) && ! g.adjacent(nb[b], nb[c]))
                            return true;
                }
        }
        return false;
    }

    auto has_induced_four_cycle(const Graph & g) -> bool
    {
        for (auto [a, c] : g.non_edges()) {
            vector<int> common;
            for (int b : g.neighbours(a))
                if (g.adjacent(b, c))
                    common.push_back(b);
            for (size_t i = 0 ; i < common.size() ; ++i)
                for (size_t j = i + 1 ; j < common.size() ; ++j)
                    if (! g.adjacent(common[i], common[j]))
                        return true;
        }
        return false;
    }

    namespace
    {
        struct PairSet
        {
            uint64_t lo = 0, hi = 0;

            auto add(int i) -> void
            {
                if (i < 64)
                    lo |= uint64_t(1) << i;
                else
                    hi |= uint64_t(1) << (i - 64);
            }

            auto operator== (const PairSet &) const -> bool = default;
        };

        struct PairSetHash
        {
            auto operator() (const PairSet & s) const -> size_t
            {
                return std::hash<uint64_t>()(s.lo * 0x9e3779b97f4a7c15ULL ^ s.hi);
            }
        };

        // Assigns every non-edge to one dimension class; a class is viable iff some (unit)
        // interval supergraph of g avoids all its non-edges. Viability is monotone, so a
        // failing class prunes every extension of it. Each unassigned non-edge keeps the set
        // of classes it could still join; the one with fewest options is branched on next.
        template <bool unit_>
        struct CoverSearch
        {
            const Graph & g;
            const Lattice & lattice;
            const vector<Edge> & non_edges;
            int k;
            std::unordered_map<PairSet, bool, PairSetHash> & memo;
            vector<vector<Mask>> forbidden;
            vector<PairSet> members;
            vector<int> owner;
            long nodes = 0;

            CoverSearch(const Graph & gr, const Lattice & l, const vector<Edge> & ne, int dims,
                    std::unordered_map<PairSet, bool, PairSetHash> & m) :
                g(gr),
                lattice(l),
                non_edges(ne),
                k(dims),
                memo(m),
                forbidden(dims, vector<Mask>(gr.size(), 0)),
                members(dims),
                owner(ne.size(), -1)
            {
            }

            auto viable(const PairSet & key, const vector<Mask> & masks) -> bool
            {
                auto found = memo.find(key);
                if (found != memo.end())
                    return found->second;
                bool ok;
                if constexpr (unit_) {
                    UnitOrderSearch search(lattice, masks);
                    ok = search.run(0, {});
                }
                else {
                    IntervalOrderSearch search(lattice, masks);
                    ok = search.run(0);
                }
                memo.emplace(key, ok);
                return ok;
            }

            // Would class t stay viable with non-edge i added?
            auto fits(int t, size_t i) -> bool
            {
                auto [u, v] = non_edges[i];
                if (forbidden[t][u] >> v & 1)
                    return true;
                PairSet key = members[t];
                key.add(int(i));
                auto masks = forbidden[t];
                masks[u] |= bit(v);
                masks[v] |= bit(u);
                return viable(key, masks);
            }

            // options[i]: classes non-edge i may still join; classes >= used are interchangeable
            // and tracked by bit `used` alone.
            auto assign(int used, vector<uint32_t> options) -> bool
            {
                ++nodes;
                int best = -1, best_count = 0;
                for (size_t i = 0 ; i < non_edges.size() ; ++i) {
                    if (owner[i] != -1)
                        continue;
                    int count = std::popcount(options[i]);
                    if (count == 0)
                        return false;
                    if (best == -1 || count < best_count) {
                        best = int(i);
                        best_count = count;
                    }
                }
                if (best == -1)
                    return true;

                auto [u, v] = non_edges[best];
                for (int t = 0 ; t < std::min(used + 1, k) ; ++t) {
                    if (! (options[best] >> t & 1))
                        continue;
                    auto saved_members = members[t];
                    auto saved_u = forbidden[t][u], saved_v = forbidden[t][v];
                    members[t].add(best);
                    forbidden[t][u] |= bit(v);
                    forbidden[t][v] |= bit(u);
                    owner[best] = t;

                    int next_used = std::max(used, t + 1);
                    auto next = options;
                    bool alive = true;
                    for (size_t i = 0 ; i < non_edges.size() && alive ; ++i) {
                        if (owner[i] != -1)
                            continue;
                        if (next_used > used && next_used < k && (options[i] >> used & 1))
                            next[i] |= uint32_t(1) << next_used;
                        if ((next[i] >> t & 1) && ! fits(t, i))
                            next[i] &= ~(uint32_t(1) << t);
                        if (next[i] == 0)
                            alive = false;
                    }
                    if (alive && assign(next_used, std::move(next)))
                        return true;

                    members[t] = saved_members;
                    forbidden[t][u] = saved_u;
                    forbidden[t][v] = saved_v;
                    owner[best] = -1;
                }
                return false;
            }

            auto run() -> bool
            {
                // Initially only class 0 is distinguishable; a fresh class accepts any single non-edge
                // that some supergraph avoids on its own.
                vector<uint32_t> options(non_edges.size(), 0);
                for (size_t i = 0 ; i < non_edges.size() ; ++i)
                    if (fits(0, i))
                        options[i] = 1;
                return assign(0, std::move(options));
            }
        };

        // Non-edges grouped by their earlier endpoint in a smallest-last (degeneracy) order.
        auto ordered_non_edges(const Graph & g) -> vector<Edge>
        {
            int n = g.size();
            vector<int> degree(n), rank(n, -1);
            for (int v = 0 ; v < n ; ++v)
                degree[v] = g.degree(v);
            vector<int> order;
            for (int step = 0 ; step < n ; ++step) {
                int best = -1;
                for (int v = 0 ; v < n ; ++v)
                    if (rank[v] == -1 && (best == -1 || degree[v] < degree[best]))
                        best = v;
                rank[best] = step;
                order.push_back(best);
                for (int w : g.neighbours(best))
                    if (rank[w] == -1)
                        --degree[w];
            }
            auto result = g.non_edges();
            std::stable_sort(result.begin(), result.end(), [&] (const Edge & a, const Edge & b) {
                auto ka = std::minmax(rank[a.first], rank[a.second]);
                auto kb = std::minmax(rank[b.first], rank[b.second]);
                return ka < kb;
            });
            return result;
        }

        template <bool unit_>
        auto exact_dimension(const Graph & g, int kmax, int max_vertices) -> OracleResult
        {
            if (kmax < 0)
                throw InvalidArgument("kmax must be non-negative");
            require_small(g, max_vertices);

            OracleResult result;
            int n = g.size();
            if (g.is_complete()) {
                result.value = 0;
                result.optimal = true;
                if constexpr (unit_)
                    result.witness = CubeRepresentation(n, 0);
                else
                    result.witness = BoxRepresentation(n, 0);
                return result;
            }

            int lower = 1;
            if (has_induced_four_cycle(g))
                lower = 2;
            if constexpr (unit_)
                if (has_induced_claw(g))
                    lower = 2;

            Lattice lattice(g);
            auto non_edges = ordered_non_edges(g);
            std::unordered_map<PairSet, bool, PairSetHash> memo;

            for (int k = lower ; k <= kmax ; ++k) {
                CoverSearch<unit_> search(g, lattice, non_edges, k, memo);
                bool found = search.run();
                result.nodes += search.nodes;
                if (! found)
                    continue;

                vector<vector<Edge>> classes(k);
                for (size_t i = 0 ; i < non_edges.size() ; ++i)
                    classes[search.owner[i]].push_back(non_edges[i]);

                if constexpr (unit_) {
                    vector<CubeRepresentation> parts;
                    for (auto & c : classes)
                        parts.push_back(*unit_interval_sandwich(g, c));
                    result.witness = concat_cubes(parts);
                }
                else {
                    vector<BoxRepresentation> parts;
                    for (auto & c : classes)
                        parts.push_back(*interval_sandwich(g, c));
                    result.witness = normalize(concat_reps(parts));
                }
                if (! verify(g, *result.witness).ok)
                    throw VerificationError("oracle witness fails verification");
                result.value = k;
                result.optimal = true;
                return result;
            }

            result.value = kmax + 1;
            result.exceeded = true;
            result.optimal = true;
            return result;
        }
    }

    auto exact_boxicity(const Graph & g, int kmax, int max_vertices) -> OracleResult
    {
        return exact_dimension<false>(g, kmax, max_vertices);
    }

    auto exact_cubicity(const Graph & g, int kmax, int max_vertices) -> OracleResult
    {
        return exact_dimension<true>(g, kmax, max_vertices);
    }
}
