#include "qtflows/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace qtflows {

namespace {

using AdjMatrix = std::vector<std::vector<bool>>;

// Recovers the construction sequence of a graph given by its adjacency
// matrix: repeatedly remove a dominating or an isolated vertex. Returns
// nothing when the graph is not threshold.
std::optional<std::vector<int>> peel_beta(const AdjMatrix& adj) {
    const int nv = static_cast<int>(adj.size());
    std::vector<bool> active(nv, true);
    std::vector<int> deg(nv, 0);
    for (int u = 0; u < nv; ++u)
        for (int v = 0; v < nv; ++v)
            if (adj[u][v]) ++deg[u];

    std::vector<int> beta;
    for (int remaining = nv; remaining > 1; --remaining) {
        int pick = -1, type = -1;
        for (int v = 0; v < nv && pick < 0; ++v) {
            if (!active[v]) continue;
            if (deg[v] == remaining - 1) {
                pick = v;
                type = 1;
            } else if (deg[v] == 0) {
                pick = v;
                type = 0;
            }
        }
        if (pick < 0) return std::nullopt;
        beta.push_back(type);
        active[pick] = false;
        for (int v = 0; v < nv; ++v)
            if (active[v] && adj[pick][v]) --deg[v];
    }
    return beta;
}

AdjMatrix adjacency_from_bar_d(const std::vector<int>& bar_d) {
    const int nv = static_cast<int>(bar_d.size());
    AdjMatrix adj(nv, std::vector<bool>(nv, false));
    for (int i = 1; i < nv; ++i)
        for (int j = 0; j < bar_d[i]; ++j) adj[i][j] = adj[j][i] = true;
    return adj;
}

}  // namespace

ThresholdGraph ThresholdGraph::from_binary(const std::vector<int>& beta) {
    if (beta.empty()) throw std::invalid_argument("from_binary: empty sequence");
    for (int b : beta)
        if (b != 0 && b != 1) throw std::invalid_argument("from_binary: entries must be 0 or 1");

    const int n = static_cast<int>(beta.size());
    const int nv = n + 1;

    // Adjacency in the construction labeling: i ~ j for i < j iff beta_i = 1.
    AdjMatrix adj(nv, std::vector<bool>(nv, false));
    for (int i = 0; i < n; ++i)
        if (beta[i] == 1)
            for (int j = i + 1; j < nv; ++j) adj[i][j] = adj[j][i] = true;

    std::vector<int> deg(nv, 0);
    for (int u = 0; u < nv; ++u) deg[u] = static_cast<int>(std::count(adj[u].begin(), adj[u].end(), true));

    // Relabel by reverse degree sequence (stable on the original labels).
    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&deg](int u, int v) { return deg[u] > deg[v]; });

    ThresholdGraph g;
    g.degrees_.resize(nv);
    g.beta_to_canonical_.resize(nv);
    for (int pos = 0; pos < nv; ++pos) {
        g.degrees_[pos] = deg[order[pos]];
        g.beta_to_canonical_[order[pos]] = pos;
    }
    g.bar_d_.resize(nv);
    g.bar_d_[0] = 0;
    for (int i = 1; i < nv; ++i) g.bar_d_[i] = std::min(g.degrees_[i], i);

    // The relabeled adjacency must be the downward-closed one derived from
    // the outdegrees; equal-degree vertices are interchangeable so a stable
    // sort suffices.
    for (int u = 0; u < nv; ++u)
        for (int v = 0; v < nv; ++v)
            if (adj[u][v] != (g.adjacent(g.beta_to_canonical_[u], g.beta_to_canonical_[v])))
                throw std::logic_error("from_binary: relabeling broke downward closure");

    auto canonical_beta = peel_beta(adjacency_from_bar_d(g.bar_d_));
    if (!canonical_beta) throw std::logic_error("from_binary: peel failed on threshold graph");
    g.beta_ = *canonical_beta;
    return g;
}

ThresholdGraph ThresholdGraph::from_degree_sequence(const std::vector<int>& degrees) {
    const int nv = static_cast<int>(degrees.size());
    if (nv < 2) throw std::invalid_argument("from_degree_sequence: need at least two vertices");
    for (int i = 0; i < nv; ++i) {
        if (degrees[i] < 0 || degrees[i] > nv - 1)
            throw std::invalid_argument("from_degree_sequence: degree out of range");
        if (i > 0 && degrees[i] > degrees[i - 1])
            throw std::invalid_argument("from_degree_sequence: degrees must be weakly decreasing");
    }

    ThresholdGraph g;
    g.degrees_ = degrees;
    g.bar_d_.resize(nv);
    g.bar_d_[0] = 0;
    for (int i = 1; i < nv; ++i) g.bar_d_[i] = std::min(degrees[i], i);
    g.beta_to_canonical_.resize(nv);
    std::iota(g.beta_to_canonical_.begin(), g.beta_to_canonical_.end(), 0);

    // The candidate graph determined by the outdegrees must reproduce the
    // given degrees and must peel; otherwise the sequence is not threshold.
    const AdjMatrix adj = adjacency_from_bar_d(g.bar_d_);
    for (int v = 0; v < nv; ++v)
        if (static_cast<int>(std::count(adj[v].begin(), adj[v].end(), true)) != degrees[v])
            throw std::invalid_argument("from_degree_sequence: not a threshold degree sequence");
    auto beta = peel_beta(adj);
    if (!beta) throw std::invalid_argument("from_degree_sequence: not a threshold degree sequence");
    g.beta_ = *beta;
    return g;
}

ThresholdGraph ThresholdGraph::from_out_profile(const std::vector<int>& profile) {
    const int n = static_cast<int>(profile.size());
    if (n < 1) throw std::invalid_argument("from_out_profile: empty profile");
    ThresholdGraph g;
    g.bar_d_.resize(n + 1);
    g.bar_d_[0] = 0;
    for (int i = 1; i <= n; ++i) {
        if (profile[i - 1] < 0 || profile[i - 1] > i)
            throw std::invalid_argument("from_out_profile: need 0 <= profile[i-1] <= i");
        g.bar_d_[i] = profile[i - 1];
    }
    const AdjMatrix adj = adjacency_from_bar_d(g.bar_d_);
    g.degrees_.resize(n + 1);
    for (int v = 0; v <= n; ++v)
        g.degrees_[v] = static_cast<int>(std::count(adj[v].begin(), adj[v].end(), true));
    g.beta_to_canonical_.resize(n + 1);
    std::iota(g.beta_to_canonical_.begin(), g.beta_to_canonical_.end(), 0);
    // Nested neighborhoods make any such graph threshold, so peeling the
    // degree-sorted relabeling always succeeds.
    auto beta = peel_beta(adjacency_from_bar_d([&g, n] {
        std::vector<int> sorted = g.degrees_;
        std::stable_sort(sorted.begin(), sorted.end(), std::greater<int>());
        std::vector<int> bd(n + 1, 0);
        for (int i = 1; i <= n; ++i) bd[i] = std::min(sorted[i], i);
        return bd;
    }()));
    if (!beta) throw std::logic_error("from_out_profile: peel failed");
    g.beta_ = *beta;
    return g;
}

ThresholdGraph ThresholdGraph::complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be positive");
    return from_degree_sequence(std::vector<int>(n + 1, n));
}

bool ThresholdGraph::adjacent(int u, int v) const {
    if (u == v) return false;
    if (u < v) std::swap(u, v);
    return v < bar_d_[u];
}

bool ThresholdGraph::connected() const {
    for (int i = 1; i <= n(); ++i)
        if (bar_d_[i] == 0) return false;
    return true;
}

long long ThresholdGraph::edge_count() const {
    long long m = 0;
    for (int i = 1; i <= n(); ++i) m += bar_d_[i];
    return m;
}

std::vector<std::pair<int, int>> ThresholdGraph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= n(); ++i)
        for (int j = 0; j < bar_d_[i]; ++j) es.emplace_back(i, j);
    return es;
}

std::vector<int> ThresholdGraph::conjugate_degrees() const {
    std::vector<int> c(n());
    for (int i = 1; i <= n(); ++i)
        c[i - 1] = static_cast<int>(std::count_if(degrees_.begin(), degrees_.end(), [i](int d) { return d >= i; }));
    return c;
}

long long ThresholdGraph::spanning_tree_product() const {
    const std::vector<int> c = conjugate_degrees();
    long long prod = 1;
    for (int i = 2; i <= n(); ++i) prod *= c[i - 1];
    return prod;
}

long long ThresholdGraph::spanning_tree_product_by_degrees() const {
    long long prod = 1;
    for (int i = 1; i <= n(); ++i) {
        if (degrees_[i] > i)
            prod *= degrees_[i] + 1;
        else if (degrees_[i] < i)
            prod *= degrees_[i];
    }
    return prod;
}

std::string ThresholdGraph::beta_string() const {
    std::string s;
    for (int b : beta_) s += static_cast<char>('0' + b);
    return s;
}

void Multigraph::add_edges(int u, int v, long multiplicity) {
    if (multiplicity == 0) return;
    if (u == v) {
        loops_[u] += multiplicity;
        return;
    }
    if (u > v) std::swap(u, v);
    long& m = mult_[{u, v}];
    m += multiplicity;
    if (m == 0) mult_.erase({u, v});
}

long Multigraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = mult_.find({u, v});
    return it == mult_.end() ? 0 : it->second;
}

long Multigraph::total_loops() const {
    long s = 0;
    for (long l : loops_) s += l;
    return s;
}

long long Multigraph::edge_count() const {
    long long m = total_loops();
    for (const auto& [e, k] : mult_) m += k;
    return m;
}

namespace {

bool reachable_all(int nv, const std::map<std::pair<int, int>, long>& mult,
                   const std::pair<int, int>* skip) {
    if (nv == 0) return true;
    std::vector<bool> seen(nv, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [e, k] : mult) {
            if (skip && e == *skip) continue;
            int other = -1;
            if (e.first == u)
                other = e.second;
            else if (e.second == u)
                other = e.first;
            if (other >= 0 && !seen[other]) {
                seen[other] = true;
                ++count;
                stack.push_back(other);
            }
        }
    }
    return count == nv;
}

}  // namespace

bool Multigraph::connected() const { return reachable_all(num_vertices(), mult_, nullptr); }

bool Multigraph::connected_without(int u, int v) const {
    if (u > v) std::swap(u, v);
    const std::pair<int, int> skip{u, v};
    return reachable_all(num_vertices(), mult_, &skip);
}

Multigraph Multigraph::without_class(int u, int v) const {
    Multigraph out = *this;
    if (u > v) std::swap(u, v);
    out.mult_.erase({u, v});
    return out;
}

Multigraph Multigraph::contract(int u, int v) const {
    if (u == v) throw std::invalid_argument("contract: need distinct vertices");
    if (u > v) std::swap(u, v);
    const int nv = num_vertices();
    // v merges into u; labels above v shift down.
    auto remap = [u, v](int w) {
        if (w == v) return u;
        return w > v ? w - 1 : w;
    };
    Multigraph out(nv - 1);
    for (int w = 0; w < nv; ++w) out.loops_[remap(w)] += loops_[w];
    for (const auto& [e, k] : mult_) {
        if (e == std::pair{u, v}) continue;
        out.add_edges(remap(e.first), remap(e.second), k);
    }
    return out;
}

Multigraph Multigraph::without_loops() const {
    Multigraph out = *this;
    std::fill(out.loops_.begin(), out.loops_.end(), 0);
    return out;
}

Multigraph inflate(const ThresholdGraph& g, const std::vector<long>& a) {
    if (static_cast<int>(a.size()) != g.n()) throw std::invalid_argument("inflate: a must have length n");
    for (long x : a)
        if (x < 1) throw std::invalid_argument("inflate: entries of a must be positive");
    Multigraph m(g.num_vertices());
    for (const auto& [i, j] : g.edges()) m.add_edges(i, j, a[i - 1]);
    return m;
}

Multigraph to_multigraph(const ThresholdGraph& g) {
    Multigraph m(g.num_vertices());
    for (const auto& [i, j] : g.edges()) m.add_edges(i, j, 1);
    return m;
}

PosetPn::PosetPn(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("PosetPn: n must be positive");
    if (n > 16) throw std::invalid_argument("PosetPn: n too large");
    const int count = 1 << (n - 1);
    elements_.reserve(count);
    for (int mask = 0; mask < count; ++mask) {
        std::vector<int> beta(n, 0);
        beta[0] = 1;
        for (int i = 1; i < n; ++i) beta[i] = (mask >> (i - 1)) & 1;
        elements_.push_back(ThresholdGraph::from_binary(beta));
    }

    leq_.assign(count, std::vector<bool>(count, false));
    for (int h = 0; h < count; ++h)
        for (int g = 0; g < count; ++g) {
            bool sub = true;
            for (int i = 1; i <= n && sub; ++i)
                sub = elements_[h].bar_d(i) <= elements_[g].bar_d(i);
            leq_[h][g] = sub;
        }

    for (int h = 0; h < count; ++h)
        for (int g = 0; g < count; ++g) {
            if (h == g || !leq_[h][g]) continue;
            bool cover = true;
            for (int k = 0; k < count && cover; ++k)
                if (k != h && k != g && leq_[h][k] && leq_[k][g]) cover = false;
            if (cover) covers_.emplace_back(h, g);
        }
}

int PosetPn::index_of(const ThresholdGraph& g) const {
    for (int i = 0; i < size(); ++i)
        if (elements_[i].beta() == g.beta()) return i;
    throw std::invalid_argument("PosetPn: graph not in poset");
}

bool PosetPn::leq(int h, int g) const { return leq_[h][g]; }

long PosetPn::moebius(int h, int g) const {
    if (!leq_[h][g]) throw std::invalid_argument("moebius: incomparable pair");
    if (h == g) return 1;
    auto it = moebius_cache_.find({h, g});
    if (it != moebius_cache_.end()) return it->second;
    long mu = 0;
    for (int k = 0; k < size(); ++k)
        if (leq_[h][k] && leq_[k][g] && k != g) mu -= moebius(h, k);
    moebius_cache_[{h, g}] = mu;
    return mu;
}

}  // namespace qtflows
