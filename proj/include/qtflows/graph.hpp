#ifndef QTFLOWS_GRAPH_HPP
#define QTFLOWS_GRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qtflows {

/// Threshold graph on vertices 0..n in the canonical reverse-degree-sequence
/// labeling: degrees weakly decreasing, vertex i adjacent to exactly
/// 0, 1, ..., bar_d(i)-1 among the smaller vertices, with
/// bar_d(i) = min(d_i, i). Edges are directed i -> j for i > j.
class ThresholdGraph {
public:
    /// Builds from the binary construction sequence (beta_0..beta_{n-1}):
    /// vertex i is dominating (1) or isolated (0) with respect to vertices
    /// i+1..n. The result is relabeled canonically; beta_to_canonical()
    /// records the relabeling.
    static ThresholdGraph from_binary(const std::vector<int>& beta);

    /// Reconstructs the construction sequence by peeling dominating or
    /// isolated vertices; throws std::invalid_argument when the sequence is
    /// not the degree sequence of a threshold graph.
    static ThresholdGraph from_degree_sequence(const std::vector<int>& degrees);

    /// K_{n+1}.
    static ThresholdGraph complete(int n);

    /// Downward-closed graph given directly by its outdegrees: vertex i is
    /// adjacent to 0..profile[i-1]-1, with profile[i-1] <= i. Degrees need
    /// not be weakly decreasing, so the result may be a non-canonical
    /// labeling; the degree-indexed product formula does not apply then.
    static ThresholdGraph from_out_profile(const std::vector<int>& profile);

    int n() const { return static_cast<int>(degrees_.size()) - 1; }
    int num_vertices() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int v) const { return degrees_[v]; }
    /// Outdegree of vertex i >= 1; bar_d(0) == 0.
    int bar_d(int i) const { return bar_d_[i]; }
    const std::vector<int>& bar_d_sequence() const { return bar_d_; }

    /// Canonical construction sequence with the convention used by
    /// from_binary (equal to the input beta up to graph isomorphism).
    const std::vector<int>& beta() const { return beta_; }

    /// Maps a vertex label of the original beta-construction to its
    /// canonical label (identity when not built from a binary sequence).
    const std::vector<int>& beta_to_canonical() const { return beta_to_canonical_; }

    bool adjacent(int u, int v) const;
    bool connected() const;
    long long edge_count() const;
    /// Directed edges (i, j) with i > j, ordered by i then j.
    std::vector<std::pair<int, int>> edges() const;

    /// Conjugate degree sequence c_i = #{j : d_j >= i} for i = 1..n.
    std::vector<int> conjugate_degrees() const;
    /// Spanning-tree count c_2 * ... * c_n.
    long long spanning_tree_product() const;
    /// The same count as the per-vertex product over i with d_i != i.
    long long spanning_tree_product_by_degrees() const;

    std::string beta_string() const;

    /// Equality of the canonical labeled graph; the relabeling map recording
    /// how the graph was constructed is not part of its identity.
    friend bool operator==(const ThresholdGraph& a, const ThresholdGraph& b) {
        return a.bar_d_ == b.bar_d_;
    }

private:
    std::vector<int> beta_;
    std::vector<int> degrees_;
    std::vector<int> bar_d_;
    std::vector<int> beta_to_canonical_;
};

/// Undirected multigraph with loops, used for Tutte-polynomial computations
/// and inflations of threshold graphs.
class Multigraph {
public:
    explicit Multigraph(int num_vertices = 0) : loops_(num_vertices, 0) {}

    int num_vertices() const { return static_cast<int>(loops_.size()); }
    void add_edges(int u, int v, long multiplicity);
    void add_loops(int v, long count) { loops_[v] += count; }
    long multiplicity(int u, int v) const;
    long loops(int v) const { return loops_[v]; }
    long total_loops() const;
    long long edge_count() const;  // including loops
    const std::map<std::pair<int, int>, long>& edge_classes() const { return mult_; }

    bool connected() const;
    /// Connectivity with the (u,v) class removed.
    bool connected_without(int u, int v) const;

    /// Deletes the whole (u,v) parallel class.
    Multigraph without_class(int u, int v) const;
    /// Contracts u and v into one vertex; the (u,v) class itself is dropped
    /// (callers account for the loops it would create).
    Multigraph contract(int u, int v) const;
    Multigraph without_loops() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::map<std::pair<int, int>, long> mult_;  // key (min,max), u != v
    std::vector<long> loops_;
};

/// Parallel-edge inflation: every edge (i,j) of G gets multiplicity
/// a_{max(i,j)}. Entries of a must be positive.
Multigraph inflate(const ThresholdGraph& g, const std::vector<long>& a);

Multigraph to_multigraph(const ThresholdGraph& g);

/// The poset P_n of connected threshold graphs on vertices 0..n, ordered by
/// edge-set containment under canonical labels.
class PosetPn {
public:
    explicit PosetPn(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const ThresholdGraph& element(int idx) const { return elements_[idx]; }
    int index_of(const ThresholdGraph& g) const;

    bool leq(int h, int g) const;
    /// Cover relations as (lower, upper) index pairs.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    /// Standard Moebius recursion; throws on incomparable pairs.
    long moebius(int h, int g) const;

private:
    int n_;
    std::vector<ThresholdGraph> elements_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::pair<int, int>> covers_;
    mutable std::map<std::pair<int, int>, long> moebius_cache_;
};

}  // namespace qtflows

#endif
