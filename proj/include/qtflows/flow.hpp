#ifndef QTFLOWS_FLOW_HPP
#define QTFLOWS_FLOW_HPP

#include <functional>
#include <vector>

#include "qtflows/graph.hpp"
#include "qtflows/poly.hpp"

namespace qtflows {

/// Netflow vector (a_1..a_n) at vertices 1..n; vertex 0 absorbs -sum(a).
/// Entries must be strictly positive.
std::vector<long> validate_netflow(const ThresholdGraph& g, const std::vector<long>& a);

/// Nonnegative integer flow on the directed edges of a threshold graph.
/// values[i][j] is the flow on edge i -> j for 1 <= i <= n, 0 <= j < bar_d(i).
struct IntegerFlow {
    const ThresholdGraph* host = nullptr;
    std::vector<std::vector<long>> values;

    /// Flow on edge i -> j; 0 when the edge is absent.
    long value(int i, int j) const {
        if (i <= 0 || i >= static_cast<int>(values.size())) return 0;
        if (j < 0 || j >= static_cast<int>(values[i].size())) return 0;
        return values[i][j];
    }

    int support_size() const;
};

using FlowVisitor = std::function<void(const IntegerFlow&)>;

/// Visits every lattice point of F_G(a) exactly once, in the canonical
/// order: vertices n, n-1, ..., 1; at each vertex the available amount
/// (netflow plus inflow already routed from above) is split over the
/// outgoing edges by weak compositions in ascending lexicographic order.
/// Visits nothing when a positive demand sits on a vertex with no outgoing
/// edge (empty polytope).
void for_each_flow(const ThresholdGraph& g, const std::vector<long>& a, const FlowVisitor& visit);

std::vector<IntegerFlow> enumerate_flows(const ThresholdGraph& g, const std::vector<long>& a);
long long count_flows(const ThresholdGraph& g, const std::vector<long>& a);

/// wt_{q,t}(A) = (-(1-t)(1-q))^{#nonzero - n} * prod over edges of
/// qt_weight(flow). Throws when the support has fewer than n edges.
QTPolynomial weight_qt(const IntegerFlow& flow);

/// Sum of weight_qt over all lattice points. The parallel version splits
/// the top-level composition at vertex n across OpenMP threads and merges
/// the partial sums; ehrhart_qt_serial is the reference implementation.
QTPolynomial ehrhart_qt(const ThresholdGraph& g, const std::vector<long>& a);
QTPolynomial ehrhart_qt_serial(const ThresholdGraph& g, const std::vector<long>& a);

/// Tesler-matrix image of a flow on a subgraph of K_{n+1}: b_{jj} =
/// f(n+1-j, 0), b_{ij} = f(n+1-i, n+1-j) for i < j, missing edges giving
/// zero entries. Returned as a full n x n row-major matrix.
std::vector<std::vector<long>> flow_to_tesler(const IntegerFlow& flow);

enum class GNVariant { gn, gn_threshold };

/// Per-flow Gorsky-Negut weight. The distinguished column of row i > 1 is
/// i-1 (gn) or bar_d(i)-1 (gn_threshold); a positive entry there
/// contributes wt(f+1) - wt(f), positive entries in columns strictly
/// between 0 and the distinguished one contribute -(1-t)(1-q)*wt(f), and
/// column-0 entries contribute 1. Entries on edges absent from the host
/// count as zero.
QTPolynomial gn_weight(const IntegerFlow& flow, GNVariant variant);

/// Sum of gn_weight over all lattice points of F_G(a).
QTPolynomial gn_sum(const ThresholdGraph& g, const std::vector<long>& a, GNVariant variant);

}  // namespace qtflows

#endif
