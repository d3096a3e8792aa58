#include "qtflows/flow.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qtflows {

std::vector<long> validate_netflow(const ThresholdGraph& g, const std::vector<long>& a) {
    if (static_cast<int>(a.size()) != g.n())
        throw std::invalid_argument("netflow: length must equal n");
    for (long x : a)
        if (x < 1) throw std::invalid_argument("netflow: entries must be strictly positive");
    return a;
}

int IntegerFlow::support_size() const {
    int s = 0;
    for (const auto& row : values)
        for (long v : row)
            if (v != 0) ++s;
    return s;
}

namespace {

struct FlowEnumerator {
    const ThresholdGraph& g;
    const FlowVisitor& visit;
    IntegerFlow flow;
    std::vector<long> avail;  // netflow plus inflow routed so far, per vertex

    FlowEnumerator(const ThresholdGraph& g_, const std::vector<long>& a, const FlowVisitor& v)
        : g(g_), visit(v) {
        flow.host = &g;
        flow.values.resize(g.num_vertices());
        for (int i = 1; i <= g.n(); ++i) flow.values[i].assign(g.bar_d(i), 0);
        avail.assign(g.num_vertices(), 0);
        for (int i = 1; i <= g.n(); ++i) avail[i] = a[i - 1];
    }

    void vertex(int i) {
        if (i == 0) {
            visit(flow);
            return;
        }
        const int k = g.bar_d(i);
        if (k == 0) {
            if (avail[i] > 0) return;  // positive demand, no outgoing edge
            vertex(i - 1);
            return;
        }
        compose(i, 0, avail[i]);
    }

    // Weak compositions of `remaining` into edges j..bar_d(i)-1, ascending
    // lexicographic in (b_j, b_{j+1}, ...).
    void compose(int i, int j, long remaining) {
        const int k = g.bar_d(i);
        if (j == k - 1) {
            flow.values[i][j] = remaining;
            avail[j] += remaining;
            vertex(i - 1);
            avail[j] -= remaining;
            flow.values[i][j] = 0;
            return;
        }
        for (long b = 0; b <= remaining; ++b) {
            flow.values[i][j] = b;
            avail[j] += b;
            compose(i, j + 1, remaining - b);
            avail[j] -= b;
        }
        flow.values[i][j] = 0;
    }
};

}  // namespace

void for_each_flow(const ThresholdGraph& g, const std::vector<long>& a, const FlowVisitor& visit) {
    validate_netflow(g, a);
    FlowEnumerator e(g, a, visit);
    e.vertex(g.n());
}

std::vector<IntegerFlow> enumerate_flows(const ThresholdGraph& g, const std::vector<long>& a) {
    std::vector<IntegerFlow> out;
    for_each_flow(g, a, [&out](const IntegerFlow& f) { out.push_back(f); });
    return out;
}

long long count_flows(const ThresholdGraph& g, const std::vector<long>& a) {
    long long c = 0;
    for_each_flow(g, a, [&c](const IntegerFlow&) { ++c; });
    return c;
}

QTPolynomial weight_qt(const IntegerFlow& flow) {
    const int n = flow.host->n();
    const int support = flow.support_size();
    if (support < n) throw std::invalid_argument("weight_qt: support smaller than n");
    QTPolynomial w(1);
    for (const auto& row : flow.values)
        for (long v : row)
            if (v > 1) w *= qt_weight(v);  // qt_weight(0) = qt_weight(1) = 1
    // -(1-t)(1-q) = -1 + q + t - qt
    static const QTPolynomial kPrefactor = [] {
        QTPolynomial p(-1);
        p.add_term(1, 0, 1);
        p.add_term(0, 1, 1);
        p.add_term(1, 1, -1);
        return p;
    }();
    if (support > n) w *= kPrefactor.pow(static_cast<unsigned>(support - n));
    return w;
}

QTPolynomial ehrhart_qt_serial(const ThresholdGraph& g, const std::vector<long>& a) {
    QTPolynomial sum;
    for_each_flow(g, a, [&sum](const IntegerFlow& f) { sum += weight_qt(f); });
    return sum;
}

QTPolynomial ehrhart_qt(const ThresholdGraph& g, const std::vector<long>& a) {
    validate_netflow(g, a);
    const int n = g.n();
    const int k = g.bar_d(n);
    if (k == 0) return a[n - 1] > 0 ? QTPolynomial() : ehrhart_qt_serial(g, a);

    // Materialize the top-level compositions at vertex n, then sum each
    // subtree independently.
    std::vector<std::vector<long>> tops;
    std::vector<long> comp(k, 0);
    auto rec = [&](auto&& self, int j, long remaining) -> void {
        if (j == k - 1) {
            comp[j] = remaining;
            tops.push_back(comp);
            return;
        }
        for (long b = 0; b <= remaining; ++b) {
            comp[j] = b;
            self(self, j + 1, remaining - b);
        }
        comp[j] = 0;
    };
    rec(rec, 0, a[n - 1]);

    std::vector<QTPolynomial> partial(tops.size());
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < static_cast<long>(tops.size()); ++idx) {
        const std::vector<long>& top = tops[idx];
        QTPolynomial sum;
        FlowVisitor add = [&sum](const IntegerFlow& f) { sum += weight_qt(f); };
        FlowEnumerator e(g, a, add);
        for (int j = 0; j < k; ++j) {
            e.flow.values[n][j] = top[j];
            e.avail[j] += top[j];
        }
        e.vertex(n - 1);
        partial[idx] = std::move(sum);
    }

    QTPolynomial total;
    for (const auto& p : partial) total += p;
    return total;
}

std::vector<std::vector<long>> flow_to_tesler(const IntegerFlow& flow) {
    const int n = flow.host->n();
    std::vector<std::vector<long>> b(n, std::vector<long>(n, 0));
    for (int j = 1; j <= n; ++j) b[j - 1][j - 1] = flow.value(n + 1 - j, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b[i - 1][j - 1] = flow.value(n + 1 - i, n + 1 - j);
    return b;
}

QTPolynomial gn_weight(const IntegerFlow& flow, GNVariant variant) {
    const ThresholdGraph& g = *flow.host;
    static const QTPolynomial kPrefactor = [] {
        QTPolynomial p(-1);
        p.add_term(1, 0, 1);
        p.add_term(0, 1, 1);
        p.add_term(1, 1, -1);
        return p;
    }();
    QTPolynomial w(1);
    for (int i = 2; i <= g.n(); ++i) {
        const int dcol = variant == GNVariant::gn ? i - 1 : g.bar_d(i) - 1;
        const long fd = flow.value(i, dcol);
        if (fd > 0) w *= qt_weight(fd + 1) - qt_weight(fd);
        for (int j = 1; j < dcol; ++j) {
            const long f = flow.value(i, j);
            if (f > 0) w *= kPrefactor * qt_weight(f);
        }
    }
    return w;
}

QTPolynomial gn_sum(const ThresholdGraph& g, const std::vector<long>& a, GNVariant variant) {
    QTPolynomial sum;
    for_each_flow(g, a, [&sum, variant](const IntegerFlow& f) { sum += gn_weight(f, variant); });
    return sum;
}

}  // namespace qtflows
