#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "qtflows/flow.hpp"
#include "qtflows/graph.hpp"
#include "qtflows/poly.hpp"

using namespace qtflows;

namespace {

// Independent Tesler-matrix oracle: upper triangular nonnegative matrices
// where row k minus the column-k entries above the diagonal sums to the
// netflow of vertex n+1-k. Enumerated row by row.
std::set<std::vector<std::vector<long>>> hook_matrices(int n, const std::vector<long>& a) {
    std::set<std::vector<std::vector<long>>> out;
    std::vector<std::vector<long>> b(n, std::vector<long>(n, 0));
    std::function<void(int)> row = [&](int k) {
        if (k == n) {
            out.insert(b);
            return;
        }
        long colsum = 0;
        for (int i = 0; i < k; ++i) colsum += b[i][k];
        const long target = a[n - 1 - k] + colsum;
        std::function<void(int, long)> fill = [&](int j, long left) {
            if (j == n - 1) {
                b[k][j] = left;
                row(k + 1);
                b[k][j] = 0;
                return;
            }
            for (long v = 0; v <= left; ++v) {
                b[k][j] = v;
                fill(j + 1, left - v);
            }
            b[k][j] = 0;
        };
        fill(k, target);
    };
    row(0);
    return out;
}

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

TEST_CASE("flow enumeration on K_3") {
    const ThresholdGraph k3 = ThresholdGraph::complete(2);
    const auto flows = enumerate_flows(k3, {1, 1});
    REQUIRE(flows.size() == 2);
    std::set<std::pair<long, std::pair<long, long>>> seen;
    for (const auto& f : flows) seen.insert({f.value(1, 0), {f.value(2, 0), f.value(2, 1)}});
    CHECK(seen.count({1, {1, 0}}) == 1);
    CHECK(seen.count({2, {0, 1}}) == 1);
}

TEST_CASE("flow counts") {
    // K_5 minus one edge, in the labeling where the low-degree pair is (1,2)
    CHECK(count_flows(ThresholdGraph::from_out_profile({1, 1, 3, 4}), {1, 1, 1, 1}) == 15);
    // the canonical labeling of the same isomorphism class has more points
    CHECK(count_flows(ThresholdGraph::from_degree_sequence({4, 4, 4, 3, 3}), {1, 1, 1, 1}) == 24);
    CHECK(count_flows(ThresholdGraph::from_degree_sequence({3, 3, 2, 2}), {3, 3, 3}) == 16);
    CHECK(count_flows(ThresholdGraph::from_degree_sequence({5, 5, 5, 3, 3, 3}),
                      {1, 1, 1, 1, 1}) == 81);
}

TEST_CASE("empty polytope on disconnected graphs") {
    const ThresholdGraph g = ThresholdGraph::from_binary({0, 0, 1});
    // isolated vertices cannot route positive netflow
    CHECK(count_flows(g, {1, 1, 1}) == 0);
    CHECK(ehrhart_qt(g, {1, 1, 1}) == QTPolynomial());
}

TEST_CASE("netflow validation") {
    const ThresholdGraph k3 = ThresholdGraph::complete(2);
    CHECK_THROWS_AS(count_flows(k3, {1}), std::invalid_argument);
    CHECK_THROWS_AS(count_flows(k3, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(count_flows(k3, {-1, 2}), std::invalid_argument);
}

TEST_CASE("conservation holds for every enumerated flow") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& beta : connected_beta_list(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            std::vector<long> a(n);
            for (int i = 0; i < n; ++i) a[i] = 1 + (i % 2);
            for_each_flow(g, a, [&](const IntegerFlow& f) {
                for (int i = 1; i <= n; ++i) {
                    long net = 0;
                    for (int j = 0; j < g.bar_d(i); ++j) net += f.value(i, j);
                    for (int k = i + 1; k <= n; ++k) net -= f.value(k, i);
                    CHECK(net == a[i - 1]);
                }
            });
        }
}

TEST_CASE("ehrhart on K_3") {
    CHECK(ehrhart_qt(ThresholdGraph::complete(2), {1, 1}) == QTPolynomial::parse("q + t + 1"));
}

TEST_CASE("ehrhart of the K_5 minus edge counterexample") {
    // Polytope with 15 lattice points; the sum is symmetric with negative
    // top coefficients. Sanity anchors: constant term 1 (the unique unit
    // flow) and value 37 > 0 at q=t=1.
    const ThresholdGraph g = ThresholdGraph::from_out_profile({1, 1, 3, 4});
    const QTPolynomial ehr = ehrhart_qt(g, {1, 1, 1, 1});
    CHECK(ehr == QTPolynomial::parse(
                     "-q^3*t - 2*q^2*t^2 - q*t^3 + 3*q^3 + 5*q^2*t + 5*q*t^2 + 3*t^3 + 5*q^2 + "
                     "8*q*t + 5*t^2 + 3*q + 3*t + 1"));
    CHECK(ehr.is_symmetric());
    CHECK_FALSE(ehr.is_nonnegative());
    CHECK(ehr.eval_one_one() == 37);
}

TEST_CASE("ehrhart at q=t=1 counts spanning trees") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& beta : connected_beta_list(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            CHECK(ehrhart_qt(g, std::vector<long>(n, 1)).eval_one_one() ==
                  Coeff(static_cast<long>(g.spanning_tree_product())));
        }
}

TEST_CASE("ehrhart symmetry") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& beta : connected_beta_list(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            std::vector<long> a(n);
            for (int i = 0; i < n; ++i) a[i] = 1 + ((i + n) % 3);
            CHECK(ehrhart_qt(g, a).is_symmetric());
        }
}

TEST_CASE("negative coefficient for a = (3,3,3)") {
    const ThresholdGraph g = ThresholdGraph::from_degree_sequence({3, 3, 2, 2});
    const QTPolynomial ehr = ehrhart_qt(g, {3, 3, 3});
    CHECK(ehr.coeff(3, 3) == -1);
    CHECK(ehr.coeff(12, 0) == 1);
    CHECK(ehr.coeff(11, 1) == 1);
    CHECK(ehr.coeff(10, 2) == 1);
    CHECK(ehr.coeff(4, 3) == 2);
    CHECK(ehr.coeff(3, 4) == 2);
    CHECK(ehr.is_symmetric());
    CHECK_FALSE(ehr.is_nonnegative());
}

TEST_CASE("serial and parallel ehrhart agree") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& beta : connected_beta_list(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            std::vector<long> a(n);
            for (int i = 0; i < n; ++i) a[i] = 1 + (i % 2);
            CHECK(ehrhart_qt(g, a) == ehrhart_qt_serial(g, a));
        }
}

TEST_CASE("weight_qt support guard") {
    const ThresholdGraph k3 = ThresholdGraph::complete(2);
    IntegerFlow f{&k3, {{}, {0L}, {0L, 0L}}};
    CHECK_THROWS_AS(weight_qt(f), std::invalid_argument);
}

TEST_CASE("flow to tesler on K_3") {
    const ThresholdGraph k3 = ThresholdGraph::complete(2);
    for (const auto& f : enumerate_flows(k3, {1, 1})) {
        const auto b = flow_to_tesler(f);
        if (f.value(2, 1) == 0) {
            CHECK(b == std::vector<std::vector<long>>{{1, 0}, {0, 1}});
        } else {
            CHECK(b == std::vector<std::vector<long>>{{0, 1}, {0, 2}});
        }
    }
}

TEST_CASE("tesler bijection against the hook-condition oracle") {
    for (int n = 1; n <= 4; ++n) {
        for (long amax = 1; amax <= 2; ++amax) {
            std::vector<long> a(n);
            for (int i = 0; i < n; ++i) a[i] = 1 + (i % amax);
            const ThresholdGraph k = ThresholdGraph::complete(n);
            std::set<std::vector<std::vector<long>>> images;
            for_each_flow(k, a, [&](const IntegerFlow& f) {
                CHECK(images.insert(flow_to_tesler(f)).second);  // injective
            });
            CHECK(images == hook_matrices(n, a));
        }
    }
}

TEST_CASE("tesler counting sequence") {
    const long long expected[] = {1, 2, 7, 40, 357};
    for (int n = 1; n <= 5; ++n) {
        const std::vector<long> ones(n, 1);
        CHECK(count_flows(ThresholdGraph::complete(n), ones) == expected[n - 1]);
        CHECK(static_cast<long long>(hook_matrices(n, ones).size()) == expected[n - 1]);
    }
}

TEST_CASE("tesler columns of missing edges are zero") {
    const ThresholdGraph g = ThresholdGraph::from_binary({1, 0, 1, 0});
    const int n = 4;
    for_each_flow(g, {1, 1, 1, 1}, [&](const IntegerFlow& f) {
        const auto b = flow_to_tesler(f);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j < i; ++j)
                if (!g.adjacent(i, j)) CHECK(b[n - i][n - j] == 0);
        // columns 2 and 3 (1-based) receive no flow in this graph
        CHECK(b[0][1] == 0);
        CHECK(b[0][2] == 0);
        CHECK(b[1][2] == 0);
    });
}

TEST_CASE("gn weight on the complete graph gives q,t-Catalan evaluations") {
    const long long catalan[] = {1, 2, 5, 14, 42, 132};
    for (int n = 1; n <= 5; ++n) {
        const QTPolynomial c =
            gn_sum(ThresholdGraph::complete(n), std::vector<long>(n, 1), GNVariant::gn);
        CHECK(c.eval_one_one() == Coeff(static_cast<long>(catalan[n - 1])));
        CHECK(c.is_symmetric());
    }
}

TEST_CASE("gn weight counterexample on degrees (3,3,2,2)") {
    const ThresholdGraph g = ThresholdGraph::from_degree_sequence({3, 3, 2, 2});
    CHECK(count_flows(g, {1, 1, 1}) == 4);
    CHECK(gn_sum(g, {1, 1, 1}, GNVariant::gn) ==
          QTPolynomial::parse("-q^2*t - q*t^2 + q^2 + 2*q*t + t^2"));
}

TEST_CASE("gn threshold variant counterexample on degrees (5,5,5,3,3,3)") {
    const ThresholdGraph g = ThresholdGraph::from_degree_sequence({5, 5, 5, 3, 3, 3});
    CHECK(g.bar_d(2) == 2);
    CHECK(g.bar_d(3) == 3);
    CHECK(g.bar_d(5) == 3);
    const QTPolynomial s = gn_sum(g, {1, 1, 1, 1, 1}, GNVariant::gn_threshold);
    CHECK(s.coeff(2, 2) == -1);
    CHECK(s.coeff(7, 0) == 1);
    CHECK(s.coeff(6, 1) == 1);
    CHECK(s.coeff(5, 2) == 1);
    CHECK(s.coeff(3, 2) == 3);
    CHECK(s.coeff(2, 3) == 3);
    CHECK(s.is_symmetric());
}

TEST_CASE("gn variants coincide on complete graphs") {
    for (int n = 1; n <= 4; ++n) {
        const std::vector<long> ones(n, 1);
        const ThresholdGraph k = ThresholdGraph::complete(n);
        CHECK(gn_sum(k, ones, GNVariant::gn) == gn_sum(k, ones, GNVariant::gn_threshold));
    }
}
