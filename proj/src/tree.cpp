#include "qtflows/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qtflows {

std::vector<int> SpanningTree::descendants(int i) const {
    const int nv = static_cast<int>(parent.size());
    // children lists are small; repeated scans are fine at desk scale
    std::vector<int> out{i};
    for (size_t k = 0; k < out.size(); ++k)
        for (int v = 1; v < nv; ++v)
            if (parent[v] == out[k]) out.push_back(v);
    return out;
}

bool SpanningTree::is_increasing() const {
    for (int v = 1; v < static_cast<int>(parent.size()); ++v)
        if (parent[v] > v) return false;
    return true;
}

namespace {

std::vector<std::vector<int>> neighbor_lists(const ThresholdGraph& g) {
    std::vector<std::vector<int>> nb(g.num_vertices());
    for (int i = 1; i <= g.n(); ++i)
        for (int j = 0; j < g.bar_d(i); ++j) {
            nb[i].push_back(j);
            nb[j].push_back(i);
        }
    for (auto& l : nb) std::sort(l.begin(), l.end());
    return nb;
}

bool parent_array_is_tree(const std::vector<int>& parent) {
    const int nv = static_cast<int>(parent.size());
    std::vector<int> state(nv, 0);  // 0 unseen, 1 on path, 2 reaches root
    state[0] = 2;
    for (int v = 1; v < nv; ++v) {
        int u = v;
        while (state[u] == 0) {
            state[u] = 1;
            u = parent[u];
        }
        if (state[u] == 1) return false;  // cycle
        u = v;
        while (state[u] == 1) {
            state[u] = 2;
            u = parent[u];
        }
    }
    return true;
}

}  // namespace

void for_each_spanning_tree(const ThresholdGraph& g, const TreeVisitor& visit) {
    if (!g.connected()) return;
    const int nv = g.num_vertices();
    const auto nb = neighbor_lists(g);
    SpanningTree t;
    t.host = &g;
    t.parent.assign(nv, -1);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == nv) {
            if (parent_array_is_tree(t.parent)) visit(t);
            return;
        }
        for (int p : nb[v]) {
            t.parent[v] = p;
            self(self, v + 1);
        }
        t.parent[v] = -1;
    };
    rec(rec, 1);
}

std::vector<SpanningTree> enumerate_spanning_trees(const ThresholdGraph& g) {
    std::vector<SpanningTree> out;
    for_each_spanning_tree(g, [&out](const SpanningTree& t) { out.push_back(t); });
    return out;
}

long long count_spanning_trees(const ThresholdGraph& g) {
    long long c = 0;
    for_each_spanning_tree(g, [&c](const SpanningTree&) { ++c; });
    return c;
}

std::vector<std::pair<int, int>> inversion_pairs(const SpanningTree& t) {
    std::vector<std::pair<int, int>> out;
    const int nv = static_cast<int>(t.parent.size());
    for (int i = 1; i < nv; ++i)
        for (int j : t.descendants(i))
            if (j < i) out.emplace_back(i, j);
    return out;
}

long inv(const SpanningTree& t) { return static_cast<long>(inversion_pairs(t).size()); }

long kappa(const SpanningTree& t) {
    long k = 0;
    for (const auto& [i, j] : inversion_pairs(t))
        if (t.host->adjacent(j, t.parent[i])) ++k;
    return k;
}

QTPolynomial inversion_enumerator(const ThresholdGraph& g) {
    QTPolynomial sum;
    for_each_spanning_tree(g, [&sum](const SpanningTree& t) {
        sum.add_term(static_cast<int>(inv(t)), 0, 1);
    });
    return sum;
}

QTPolynomial inversion_enumerator_increasing(const ThresholdGraph& g) {
    if (!g.connected()) return {};
    const int nv = g.num_vertices();
    // Increasing trees: each vertex picks a parent among 0..bar_d(i)-1, and
    // every such choice is acyclic.
    SpanningTree t;
    t.host = &g;
    t.parent.assign(nv, -1);
    QTPolynomial sum;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == nv) {
            std::vector<int> size(nv, 1);
            for (int i = nv - 1; i >= 1; --i) size[t.parent[i]] += size[i];
            QTPolynomial prod(1);
            for (int i = 1; i < nv; ++i) prod *= q_bracket(size[i]);
            sum += prod;
            return;
        }
        for (int p = 0; p < g.bar_d(v); ++p) {
            t.parent[v] = p;
            self(self, v + 1);
        }
    };
    rec(rec, 1);
    return sum;
}

std::vector<long> subtree_netflows(const SpanningTree& t, const std::vector<long>& a) {
    const int nv = static_cast<int>(t.parent.size());
    std::vector<long> out(nv, 0);
    for (int i = 1; i < nv; ++i)
        for (int j : t.descendants(i)) out[i] += a[j - 1];
    return out;
}

QTPolynomial tree_weight(const SpanningTree& t, const std::vector<long>& a) {
    const int nv = static_cast<int>(t.parent.size());
    QTPolynomial w(1);
    for (int i = 1; i < nv; ++i) w *= q_bracket(a[std::max(i, t.parent[i]) - 1]);
    for (const auto& [i, j] : inversion_pairs(t)) {
        const int m = std::max(t.parent[i], j);
        w *= QTPolynomial::monomial(1, static_cast<int>(a[m - 1]), 0);
    }
    return w;
}

namespace {

// Canonical key of a loopless multigraph: the lexicographically least
// upper-triangular multiplicity list over relabelings that respect the
// iterated degree refinement. Returns an empty key when the search budget
// is exceeded; such nodes are not memoized.
using CanonKey = std::vector<long>;

std::vector<int> refine_colors(const Multigraph& m) {
    const int nv = m.num_vertices();
    std::vector<long> color(nv);
    for (int v = 0; v < nv; ++v) {
        long d = 0;
        for (const auto& [e, k] : m.edge_classes())
            if (e.first == v || e.second == v) d += k;
        color[v] = d;
    }
    for (int round = 0; round < nv; ++round) {
        std::vector<std::vector<std::pair<long, long>>> sig(nv);
        for (const auto& [e, k] : m.edge_classes()) {
            sig[e.first].emplace_back(k, color[e.second]);
            sig[e.second].emplace_back(k, color[e.first]);
        }
        std::vector<std::pair<long, std::vector<std::pair<long, long>>>> full(nv);
        for (int v = 0; v < nv; ++v) {
            std::sort(sig[v].begin(), sig[v].end());
            full[v] = {color[v], sig[v]};
        }
        auto sorted = full;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<long> next(nv);
        for (int v = 0; v < nv; ++v)
            next[v] = static_cast<long>(std::lower_bound(sorted.begin(), sorted.end(), full[v]) - sorted.begin());
        if (next == color) break;
        color = next;
    }
    std::vector<int> out(nv);
    for (int v = 0; v < nv; ++v) out[v] = static_cast<int>(color[v]);
    return out;
}

constexpr long kCanonBudget = 100000;

CanonKey canonical_key(const Multigraph& m) {
    const int nv = m.num_vertices();
    const std::vector<int> color = refine_colors(m);

    // Vertices grouped by color; classes ordered by color value, vertices
    // within a class freely permutable.
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < nv; ++v) classes[color[v]].push_back(v);

    long budget = 1;
    for (const auto& [c, vs] : classes) {
        for (size_t i = 2; i <= vs.size(); ++i) {
            budget *= static_cast<long>(i);
            if (budget > kCanonBudget) return {};
        }
    }

    std::vector<std::vector<int>> orders;
    for (const auto& [c, vs] : classes) orders.push_back(vs);

    CanonKey best;
    std::vector<int> placement;  // placement[pos] = original vertex
    placement.reserve(nv);
    auto key_of = [&]() {
        CanonKey key;
        key.reserve(static_cast<size_t>(nv) * (nv - 1) / 2 + 1);
        key.push_back(nv);
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j) key.push_back(m.multiplicity(placement[i], placement[j]));
        return key;
    };
    auto rec = [&](auto&& self, size_t cls) -> void {
        if (cls == orders.size()) {
            CanonKey key = key_of();
            if (best.empty() || key < best) best = std::move(key);
            return;
        }
        std::vector<int> perm = orders[cls];
        std::sort(perm.begin(), perm.end());
        do {
            for (int v : perm) placement.push_back(v);
            self(self, cls + 1);
            placement.resize(placement.size() - perm.size());
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, 0);
    return best;
}

// Deletion-contraction over whole parallel classes, with bridge and loop
// base cases. `m` is loopless and connected.
QTPolynomial tutte_rec(const Multigraph& m, std::map<CanonKey, QTPolynomial>& memo) {
    if (m.edge_classes().empty()) return QTPolynomial(1);  // single vertex

    CanonKey key = canonical_key(m);
    if (!key.empty()) {
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    // Pivot: highest-multiplicity class (collapses parallel edges in one
    // recursion layer).
    std::pair<int, int> pivot{-1, -1};
    long mult = 0;
    for (const auto& [e, k] : m.edge_classes())
        if (k > mult) {
            mult = k;
            pivot = e;
        }

    // Contracting one of the parallel edges turns the rest into loops, so
    // the class contributes y-brackets; x appears when the class is a
    // bridge.
    Multigraph contracted = m.contract(pivot.first, pivot.second);
    const QTPolynomial tc = tutte_rec(contracted, memo);

    QTPolynomial result;
    const QTPolynomial y_bracket = q_bracket(mult).swap_qt();  // 1 + y + ... + y^{mult-1}
    if (m.connected_without(pivot.first, pivot.second)) {
        result = tutte_rec(m.without_class(pivot.first, pivot.second), memo) + y_bracket * tc;
    } else {
        // x + y + y^2 + ... + y^{mult-1}
        QTPolynomial factor = QTPolynomial::q() + y_bracket - QTPolynomial(1);
        result = factor * tc;
    }

    if (!key.empty()) memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

QTPolynomial tutte(const Multigraph& m) {
    if (!m.connected()) throw std::invalid_argument("tutte: graph must be connected");
    std::map<CanonKey, QTPolynomial> memo;
    QTPolynomial result = tutte_rec(m.without_loops(), memo);
    const long loops = m.total_loops();
    if (loops > 0) result *= QTPolynomial::t().pow(static_cast<unsigned>(loops));
    return result;
}

QTPolynomial tutte_by_subsets(const Multigraph& m) {
    if (!m.connected()) throw std::invalid_argument("tutte: graph must be connected");
    const int nv = m.num_vertices();
    std::vector<std::pair<int, int>> edges;
    for (const auto& [e, k] : m.edge_classes())
        for (long i = 0; i < k; ++i) edges.push_back(e);
    for (int v = 0; v < nv; ++v)
        for (long i = 0; i < m.loops(v); ++i) edges.emplace_back(v, v);
    const size_t ne = edges.size();
    if (ne > 24) throw std::invalid_argument("tutte_by_subsets: too many edges");

    const QTPolynomial xm1 = QTPolynomial::q() - QTPolynomial(1);
    const QTPolynomial ym1 = QTPolynomial::t() - QTPolynomial(1);
    QTPolynomial sum;
    std::vector<int> dsu(nv);
    std::function<int(int)> find = [&dsu, &find](int v) { return dsu[v] == v ? v : dsu[v] = find(dsu[v]); };
    for (size_t mask = 0; mask < (size_t{1} << ne); ++mask) {
        std::iota(dsu.begin(), dsu.end(), 0);
        int comps = nv;
        int count = 0;
        for (size_t i = 0; i < ne; ++i)
            if (mask & (size_t{1} << i)) {
                ++count;
                int a = find(edges[i].first), b = find(edges[i].second);
                if (a != b) {
                    dsu[a] = b;
                    --comps;
                }
            }
        sum += xm1.pow(static_cast<unsigned>(comps - 1)) * ym1.pow(static_cast<unsigned>(comps + count - nv));
    }
    return sum;
}

long ParkingFunction::degree() const {
    long s = 0;
    for (int v : values) s += v;
    return s;
}

std::vector<ParkingFunction> enumerate_parking_functions(const ThresholdGraph& g) {
    if (!g.connected()) throw std::invalid_argument("parking functions: graph must be connected");
    const int n = g.n();

    // outdeg_to[S][i] = #{j not in S adjacent to i}, with S a bitmask over
    // vertices 1..n (vertex 0 is never in S).
    auto outside_degree = [&g, n](unsigned mask, int i) {
        int d = 0;
        for (int j = 0; j <= n; ++j) {
            if (j >= 1 && (mask & (1u << (j - 1)))) continue;
            if (g.adjacent(i, j)) ++d;
        }
        return d;
    };

    std::vector<ParkingFunction> out;
    ParkingFunction p;
    p.host = &g;
    p.values.assign(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                bool ok = false;
                for (int v = 1; v <= n && !ok; ++v)
                    if ((mask & (1u << (v - 1))) && p.value(v) < outside_degree(mask, v)) ok = true;
                if (!ok) return;
            }
            out.push_back(p);
            return;
        }
        // any value >= deg(i) already fails the singleton condition
        for (int v = 0; v < g.degree(i); ++v) {
            p.values[i - 1] = v;
            self(self, i + 1);
        }
        p.values[i - 1] = 0;
    };
    rec(rec, 1);
    return out;
}

long genus(const ThresholdGraph& g) { return g.edge_count() - g.num_vertices() + 1; }

long codeg(const ParkingFunction& p) { return genus(*p.host) - p.degree(); }

long pmaj(const ParkingFunction& p) {
    const ThresholdGraph& g = *p.host;
    const int n = g.n();
    if (g.degrees() != std::vector<int>(n + 1, n))
        throw std::invalid_argument("pmaj: host must be the complete graph");

    // Greedy parking order: fill spots 0..n-1 in increasing order, always
    // taking the largest eligible car below the previous pick, wrapping to
    // the largest eligible car when none is smaller. Eligible at spot j
    // means preferred spot <= j and not yet parked; the parking-function
    // condition keeps the eligible set nonempty. pmaj is the comajor index
    // of the resulting word: an ascent at spot j contributes n-1-j. On the
    // bijective parking functions the word is forced and the statistic is
    // equidistributed with the major index on permutations.
    std::vector<bool> parked(n, false);
    std::vector<int> word(n);
    int prev = n + 1;
    for (int j = 0; j < n; ++j) {
        int below = -1, largest = -1;
        for (int car = 0; car < n; ++car) {
            if (parked[car] || p.values[car] > j) continue;
            if (car > largest) largest = car;
            if (car < prev && car > below) below = car;
        }
        if (largest < 0) throw std::logic_error("pmaj: not a parking function");
        word[j] = below >= 0 ? below : largest;
        parked[word[j]] = true;
        prev = word[j];
    }
    long s = 0;
    for (int j = 0; j + 1 < n; ++j)
        if (word[j] < word[j + 1]) s += n - 1 - j;
    return s;
}

}  // namespace qtflows
