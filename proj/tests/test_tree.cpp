#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "qtflows/flow.hpp"
#include "qtflows/graph.hpp"
#include "qtflows/poly.hpp"
#include "qtflows/tree.hpp"

using namespace qtflows;

namespace {

std::vector<std::vector<int>> connected_beta_list(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::vector<int> beta(n, 1);
        for (int i = 1; i < n; ++i) beta[i] = (mask >> (i - 1)) & 1;
        out.push_back(beta);
    }
    return out;
}

}  // namespace

TEST_CASE("spanning tree counts") {
    CHECK(count_spanning_trees(ThresholdGraph::complete(2)) == 3);
    CHECK(count_spanning_trees(ThresholdGraph::complete(3)) == 16);
    CHECK(count_spanning_trees(ThresholdGraph::from_degree_sequence({4, 3, 2, 2, 1})) == 8);
    CHECK(count_spanning_trees(ThresholdGraph::from_binary({0, 0, 1})) == 0);
}

TEST_CASE("tree counts match both product formulas") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& beta : connected_beta_list(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            const long long trees = count_spanning_trees(g);
            CHECK(trees == g.spanning_tree_product());
            CHECK(trees == g.spanning_tree_product_by_degrees());
        }
}

TEST_CASE("inversions") {
    const ThresholdGraph k3 = ThresholdGraph::complete(2);
    std::map<long, long> hist;
    for (const auto& t : enumerate_spanning_trees(k3)) {
        if (t.is_increasing()) CHECK(inv(t) == 0);
        ++hist[inv(t)];
        // chain 0 - 2 - 1 has the single inversion (2,1)
        if (t.parent == std::vector<int>{-1, 2, 0}) {
            CHECK(inv(t) == 1);
            CHECK(inversion_pairs(t) == std::vector<std::pair<int, int>>{{2, 1}});
        }
    }
    CHECK(hist == std::map<long, long>{{0, 2}, {1, 1}});
}

TEST_CASE("kappa equals inv on threshold hosts") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& beta : connected_beta_list(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            for_each_spanning_tree(g, [](const SpanningTree& t) { CHECK(kappa(t) == inv(t)); });
        }
}

TEST_CASE("inversion enumerator two ways") {
    CHECK(inversion_enumerator(ThresholdGraph::complete(2)) == QTPolynomial::parse("q + 2"));
    for (int n = 1; n <= 7; ++n)
        for (const auto& beta : connected_beta_list(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            const QTPolynomial byinv = inversion_enumerator(g);
            CHECK(byinv == inversion_enumerator_increasing(g));
            CHECK(byinv.eval_one_one() == Coeff(static_cast<long>(g.spanning_tree_product())));
        }
}

TEST_CASE("increasing tree count is the outdegree product") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& beta : connected_beta_list(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            long long inc = 0, expected = 1;
            for_each_spanning_tree(g, [&inc](const SpanningTree& t) {
                if (t.is_increasing()) ++inc;
            });
            for (int i = 1; i <= n; ++i) expected *= g.bar_d(i);
            CHECK(inc == expected);
        }
}

TEST_CASE("tree weight") {
    const ThresholdGraph k3 = ThresholdGraph::complete(2);
    for (const auto& t : enumerate_spanning_trees(k3))
        CHECK(tree_weight(t, {1, 1}) == QTPolynomial::q().pow(static_cast<unsigned>(inv(t))));

    // weighted tree sum against the independent flow pipeline
    QTPolynomial sum;
    for (const auto& t : enumerate_spanning_trees(k3)) sum += tree_weight(t, {2, 1});
    CHECK(specialize(ehrhart_qt(k3, {2, 1}), SpecMode::t_one).to_qt() == sum);
}

TEST_CASE("increasing tree flows carry subtree netflow") {
    // The unique flow supported on an increasing tree routes delta_T^a(i)
    // into the parent edge; it must appear among the enumerated flows.
    for (int n = 1; n <= 4; ++n)
        for (const auto& beta : connected_beta_list(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            std::vector<long> a(n);
            for (int i = 0; i < n; ++i) a[i] = 1 + (i % 2);

            std::set<std::vector<std::vector<long>>> flows;
            for_each_flow(g, a, [&flows](const IntegerFlow& f) { flows.insert(f.values); });

            for (const auto& t : enumerate_spanning_trees(g)) {
                if (!t.is_increasing()) continue;
                const std::vector<long> delta = subtree_netflows(t, a);
                IntegerFlow f{&g, {}};
                f.values.resize(n + 1);
                for (int i = 1; i <= n; ++i) f.values[i].assign(g.bar_d(i), 0);
                for (int i = 1; i <= n; ++i) f.values[i][t.parent[i]] = delta[i];
                CHECK(flows.count(f.values) == 1);
            }
        }
}

TEST_CASE("tutte base cases") {
    Multigraph edge(2);
    edge.add_edges(0, 1, 1);
    CHECK(tutte(edge) == QTPolynomial::q());

    Multigraph loop(1);
    loop.add_loops(0, 1);
    CHECK(tutte(loop) == QTPolynomial::t());

    Multigraph disconnected(3);
    disconnected.add_edges(0, 1, 1);
    CHECK_THROWS_AS(tutte(disconnected), std::invalid_argument);
}

TEST_CASE("tutte of K_3 and K_4") {
    const QTPolynomial t3 = tutte(to_multigraph(ThresholdGraph::complete(2)));
    CHECK(substitute(t3, SlotValue::number(1), SlotValue::q()) == QTPolynomial::parse("q + 2"));
    const QTPolynomial t4 = tutte(to_multigraph(ThresholdGraph::complete(3)));
    CHECK(t4.eval_one_one() == 16);
    CHECK(t4 == tutte_by_subsets(to_multigraph(ThresholdGraph::complete(3))));
}

TEST_CASE("tutte deletion-contraction equals subset-sum definition") {
    // connected multigraphs on up to 4 vertices with at most 6 edges
    for (int nv = 2; nv <= 4; ++nv) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < nv; ++u)
            for (int v = u + 1; v < nv; ++v) pairs.emplace_back(u, v);
        const int np = static_cast<int>(pairs.size());
        std::vector<int> mult(np, 0);
        std::function<void(int, int)> rec = [&](int idx, int used) {
            if (idx == np) {
                Multigraph m(nv);
                for (int i = 0; i < np; ++i)
                    m.add_edges(pairs[i].first, pairs[i].second, mult[i]);
                if (!m.connected()) return;
                CHECK(tutte(m) == tutte_by_subsets(m));
                if (used < 6) {
                    Multigraph with_loop = m;
                    with_loop.add_loops(nv - 1, 1);
                    CHECK(tutte(with_loop) == tutte_by_subsets(with_loop));
                }
                return;
            }
            for (int k = 0; used + k <= 6; ++k) {
                mult[idx] = k;
                rec(idx + 1, used + k);
            }
            mult[idx] = 0;
        };
        rec(0, 0);
    }
}

TEST_CASE("tutte of inflations at (1,q) matches weighted trees") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& beta : connected_beta_list(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            std::vector<long> a(n);
            for (int i = 0; i < n; ++i) a[i] = 1 + ((i + 1) % 3);
            QTPolynomial sum;
            for_each_spanning_tree(g, [&](const SpanningTree& t) { sum += tree_weight(t, a); });
            const QTPolynomial tq =
                substitute(tutte(inflate(g, a)), SlotValue::number(1), SlotValue::q());
            CHECK(tq == sum);
        }
}

TEST_CASE("parking functions of K_3") {
    const ThresholdGraph k3 = ThresholdGraph::complete(2);
    std::set<std::vector<int>> values;
    for (const auto& p : enumerate_parking_functions(k3)) values.insert(p.values);
    CHECK(values == std::set<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}});
}

TEST_CASE("parking function count equals tree count; maximal count is outdegree product") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& beta : connected_beta_list(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            const auto pfs = enumerate_parking_functions(g);
            CHECK(static_cast<long long>(pfs.size()) == count_spanning_trees(g));

            long long maximal = 0, expected = 1;
            for (int i = 1; i <= n; ++i) expected *= g.bar_d(i);
            for (const auto& p : pfs) {
                bool is_max = true;
                for (int i = 1; i <= n && is_max; ++i) {
                    ParkingFunction q = p;
                    ++q.values[i - 1];
                    bool valid = false;
                    for (const auto& r : pfs)
                        if (r.values == q.values) valid = true;
                    if (valid) is_max = false;
                }
                if (is_max) ++maximal;
            }
            CHECK(maximal == expected);
        }
}

TEST_CASE("codeg") {
    const ThresholdGraph k3 = ThresholdGraph::complete(2);
    CHECK(genus(k3) == 1);
    for (const auto& p : enumerate_parking_functions(k3)) {
        if (p.values == std::vector<int>{0, 0}) CHECK(codeg(p) == 1);
        if (p.values == std::vector<int>{0, 1}) CHECK(codeg(p) == 0);
    }
}

TEST_CASE("merino: codegree enumerator is tutte at (1,y)") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& beta : connected_beta_list(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            QTPolynomial sum;
            for (const auto& p : enumerate_parking_functions(g))
                sum += QTPolynomial::t().pow(static_cast<unsigned>(codeg(p)));
            const QTPolynomial t1y =
                substitute(tutte(to_multigraph(g)), SlotValue::number(1), SlotValue::t());
            CHECK(sum == t1y);
        }
}

TEST_CASE("pmaj on K_3") {
    const ThresholdGraph k3 = ThresholdGraph::complete(2);
    QTPolynomial dist;
    for (const auto& p : enumerate_parking_functions(k3)) {
        if (p.values == std::vector<int>{0, 1}) CHECK(pmaj(p) == 1);
        if (p.values == std::vector<int>{1, 0}) CHECK(pmaj(p) == 0);
        dist += QTPolynomial::monomial(1, 0, static_cast<int>(pmaj(p)));
    }
    CHECK(dist == QTPolynomial::parse("t + 2"));

    const ThresholdGraph star = ThresholdGraph::from_binary({1, 0});
    const ParkingFunction zero{&star, {0, 0}};
    CHECK_THROWS_AS(pmaj(zero), std::invalid_argument);
}

TEST_CASE("pmaj over maximal parking functions is the t-factorial") {
    for (int n = 1; n <= 5; ++n) {
        const ThresholdGraph k = ThresholdGraph::complete(n);
        QTPolynomial dist;
        for (const auto& p : enumerate_parking_functions(k)) {
            std::vector<int> sorted = p.values;
            std::sort(sorted.begin(), sorted.end());
            bool is_max = true;
            for (int i = 0; i < n; ++i) is_max = is_max && sorted[i] == i;
            if (is_max) dist += QTPolynomial::t().pow(static_cast<unsigned>(pmaj(p)));
        }
        CHECK(dist == q_factorial(n).swap_qt());
    }
}

TEST_CASE("codeg and pmaj give the ehrhart polynomial of K_{n+1}") {
    for (int n = 1; n <= 4; ++n) {
        const ThresholdGraph k = ThresholdGraph::complete(n);
        QTPolynomial sum;
        for (const auto& p : enumerate_parking_functions(k))
            sum += QTPolynomial::monomial(1, static_cast<int>(codeg(p)),
                                          static_cast<int>(pmaj(p)));
        CHECK(sum == ehrhart_qt(k, std::vector<long>(n, 1)));
    }
}
