#ifndef QTFLOWS_TREE_HPP
#define QTFLOWS_TREE_HPP

#include <functional>
#include <vector>

#include "qtflows/graph.hpp"
#include "qtflows/poly.hpp"

namespace qtflows {

/// Spanning tree rooted at vertex 0, stored as a parent array
/// (parent[0] == -1); every edge (i, parent[i]) lies in the host graph.
struct SpanningTree {
    const ThresholdGraph* host = nullptr;
    std::vector<int> parent;

    /// Vertices of the subtree of i, including i.
    std::vector<int> descendants(int i) const;
    bool is_increasing() const;
};

using TreeVisitor = std::function<void(const SpanningTree&)>;

/// Visits every spanning tree exactly once, ordered lexicographically by
/// parent array. Visits nothing when the host is disconnected.
void for_each_spanning_tree(const ThresholdGraph& g, const TreeVisitor& visit);
std::vector<SpanningTree> enumerate_spanning_trees(const ThresholdGraph& g);
long long count_spanning_trees(const ThresholdGraph& g);

/// Inversions: pairs (i, j) with i > j > 0 is not required on j -- j is any
/// proper descendant of i with i > j. kappa additionally requires j to be
/// host-adjacent to the parent of i.
std::vector<std::pair<int, int>> inversion_pairs(const SpanningTree& t);
long inv(const SpanningTree& t);
long kappa(const SpanningTree& t);

/// I_G(q) as the sum over all spanning trees of q^{inv(T)}.
QTPolynomial inversion_enumerator(const ThresholdGraph& g);
/// I_G(q) as the sum over increasing spanning trees of prod [delta_T(i)]_q,
/// with delta_T(i) the subtree size at i.
QTPolynomial inversion_enumerator_increasing(const ThresholdGraph& g);

/// Subtree netflow sums delta_T^a(i) = sum of a_j over descendants j of i
/// (index 0 unused).
std::vector<long> subtree_netflows(const SpanningTree& t, const std::vector<long>& a);

/// w(T) = prod over tree edges of [a_{max(i,j)}]_q times prod over
/// inversions (i,j) of q^{a_{max(parent(i), j)}}.
QTPolynomial tree_weight(const SpanningTree& t, const std::vector<long>& a);

/// Tutte polynomial with x in the q slot and y in the t slot, computed by
/// deletion-contraction over whole parallel classes with memoization on a
/// canonical form. Throws on disconnected input.
QTPolynomial tutte(const Multigraph& m);
/// Rank-nullity subset-sum definition; exponential in the edge count, kept
/// as an independent cross-check.
QTPolynomial tutte_by_subsets(const Multigraph& m);

/// G-parking function: P(i) recorded at values[i-1] for i in 1..n.
struct ParkingFunction {
    const ThresholdGraph* host = nullptr;
    std::vector<int> values;

    int value(int i) const { return values[i - 1]; }
    long degree() const;
};

std::vector<ParkingFunction> enumerate_parking_functions(const ThresholdGraph& g);

/// Genus g = |E| - |V| + 1.
long genus(const ThresholdGraph& g);
long codeg(const ParkingFunction& p);

/// pmaj on parking functions of a complete host: the ascent-sum formula on
/// maximal elements (bijections [n] -> {0..n-1}), the minimum over maximal
/// elements strictly above otherwise. Throws on non-complete hosts.
long pmaj(const ParkingFunction& p);

}  // namespace qtflows

#endif
