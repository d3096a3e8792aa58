#include "qtflows/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qtflows/tree.hpp"

namespace qtflows {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

void record(VerificationReport& report, const ThresholdGraph& g, const std::vector<long>& a,
            const std::string& lhs, const std::string& rhs) {
    report.failures.push_back({g.beta(), a, lhs, rhs});
}

// Deterministic instance set per graph: all-ones always, exhaustive when the
// space is small, seeded samples otherwise.
std::vector<std::vector<long>> netflow_instances(int n, long a_max, std::mt19937_64& rng,
                                                 int samples) {
    std::vector<std::vector<long>> out;
    out.emplace_back(n, 1);
    if (a_max <= 1) return out;
    double space = 1;
    for (int i = 0; i < n; ++i) space *= static_cast<double>(a_max);
    if (space <= 64) {
        std::vector<long> a(n, 1);
        for (;;) {
            if (a != out.front()) out.push_back(a);
            int i = 0;
            while (i < n && a[i] == a_max) a[i++] = 1;
            if (i == n) break;
            ++a[i];
        }
        return out;
    }
    std::uniform_int_distribution<long> dist(1, a_max);
    for (int s = 0; s < samples; ++s) {
        std::vector<long> a(n);
        for (long& x : a) x = dist(rng);
        out.push_back(std::move(a));
    }
    return out;
}

QTPolynomial tutte_at_1_q(const Multigraph& m) {
    return substitute(tutte(m), SlotValue::number(1), SlotValue::q());
}

// prod b_i(q) of the t=q^{-1} product formula.
QTPolynomial qinv_product(const ThresholdGraph& g, const std::vector<long>& a) {
    QTPolynomial prod(1);
    for (int i = 1; i <= g.n(); ++i) {
        const int d = g.degree(i);
        if (d > i) {
            long s = (i + 1) * a[i - 1];
            for (int j = i + 1; j <= d; ++j) s += a[j - 1];
            prod *= q_bracket(s);
        } else if (d == i) {
            prod *= q_bracket(a[i - 1], i + 1);
        } else {
            prod *= q_bracket(a[i - 1], d + 1) * q_bracket(d);
        }
    }
    return prod;
}

long qinv_exponent(const ThresholdGraph& g, const std::vector<long>& a) {
    long f = -g.n();
    for (int i = 1; i <= g.n(); ++i) f += static_cast<long>(g.bar_d(i)) * a[i - 1];
    return f;
}

// wt_{q,q^{-1}}(k) = q^{1-k} [k]_{q^2}.
QLaurent wt_qinv(long k) {
    if (k == 0) return QLaurent(1);
    QLaurent out;
    for (long i = 0; i < k; ++i) out.add_term(static_cast<int>(1 - k + 2 * i), 1);
    return out;
}

// Univariate-in-q polynomial viewed as a Laurent polynomial.
QLaurent to_laurent(const QTPolynomial& p) {
    QLaurent l;
    for (const auto& [m, c] : p.terms()) {
        if (m.et != 0) throw std::invalid_argument("to_laurent: polynomial involves t");
        l.add_term(m.eq, c);
    }
    return l;
}

}  // namespace

std::vector<std::vector<int>> connected_betas(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::vector<int> beta(n, 0);
        beta[0] = 1;
        for (int i = 1; i < n; ++i) beta[i] = (mask >> (i - 1)) & 1;
        out.push_back(std::move(beta));
    }
    return out;
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["theorem"] = theorem;
    j["instances"] = instances;
    j["seed"] = seed;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures) {
        nlohmann::json jf;
        jf["beta"] = f.beta;
        jf["a"] = f.a;
        jf["lhs"] = f.lhs;
        jf["rhs"] = f.rhs;
        j["failures"].push_back(jf);
    }
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << theorem << ": " << (ok() ? "PASS" : "FAIL") << " (" << instances << " instances, "
       << failures.size() << " failures, " << elapsed_ms << " ms)";
    return os.str();
}

VerificationReport verify_t1(int n_max, long a_max, std::uint64_t seed, int random_samples) {
    const auto start = Clock::now();
    VerificationReport report;
    report.theorem = "t1-three-way";
    report.seed = seed;

    // Exhaustive a = 1 sweep: Ehr|_{t=1} vs both inversion-enumerator routes
    // vs the Tutte polynomial at (1, q).
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& beta : connected_betas(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            const std::vector<long> ones(n, 1);
            ++report.instances;
            const QTPolynomial ehr = specialize(ehrhart_qt(g, ones), SpecMode::t_one).to_qt();
            const QTPolynomial by_trees = inversion_enumerator(g);
            const QTPolynomial by_incr = inversion_enumerator_increasing(g);
            const QTPolynomial by_tutte = tutte_at_1_q(to_multigraph(g));
            if (ehr != by_trees || ehr != by_incr || ehr != by_tutte) {
                record(report, g, ones, ehr.str(),
                       by_trees.str() + " | " + by_incr.str() + " | " + by_tutte.str());
            }
        }
    }

    // Seeded random (beta, a): Ehr|_{t=1} vs sum of w(T) vs Tutte of the
    // inflated multigraph.
    std::mt19937_64 rng(seed);
    const int n_cap = std::min(n_max, 5);
    for (int s = 0; s < random_samples; ++s) {
        std::uniform_int_distribution<int> ndist(1, n_cap);
        const int n = ndist(rng);
        std::vector<int> beta(n, 0);
        beta[0] = 1;
        std::uniform_int_distribution<int> bit(0, 1);
        for (int i = 1; i < n; ++i) beta[i] = bit(rng);
        std::uniform_int_distribution<long> adist(1, a_max);
        std::vector<long> a(n);
        for (long& x : a) x = adist(rng);

        const ThresholdGraph g = ThresholdGraph::from_binary(beta);
        ++report.instances;
        const QTPolynomial ehr = specialize(ehrhart_qt(g, a), SpecMode::t_one).to_qt();
        QTPolynomial by_trees;
        for_each_spanning_tree(g, [&by_trees, &a](const SpanningTree& t) { by_trees += tree_weight(t, a); });
        const QTPolynomial by_tutte = tutte_at_1_q(inflate(g, a));
        if (ehr != by_trees || ehr != by_tutte)
            record(report, g, a, ehr.str(), by_trees.str() + " | " + by_tutte.str());
    }

    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_t0(int n_max, long a_max, std::uint64_t seed, int samples_per_graph) {
    const auto start = Clock::now();
    VerificationReport report;
    report.theorem = "t0-product";
    report.seed = seed;
    std::mt19937_64 rng(seed);

    for (int n = 1; n <= n_max; ++n) {
        for (const auto& beta : connected_betas(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            for (const auto& a : netflow_instances(n, a_max, rng, samples_per_graph)) {
                ++report.instances;
                const QLaurent lhs = specialize(ehrhart_qt(g, a), SpecMode::t_zero);
                QLaurent rhs(1);
                for (int i = 1; i <= n; ++i) {
                    const int bd = g.bar_d(i);
                    rhs *= QLaurent::q_power(static_cast<int>(bd * (a[i - 1] - 1)));
                    rhs *= to_laurent(q_bracket(bd));
                }
                if (lhs != rhs) record(report, g, a, lhs.str(), rhs.str());
            }
        }
        // Corollary: Ehr_{q,0}(K_{n+1}) = [n]_q! at a = 1.
        const ThresholdGraph k = ThresholdGraph::complete(n);
        const std::vector<long> ones(n, 1);
        ++report.instances;
        const QLaurent lhs = specialize(ehrhart_qt(k, ones), SpecMode::t_zero);
        const QLaurent rhs = to_laurent(q_factorial(n));
        if (lhs != rhs) record(report, k, ones, lhs.str(), rhs.str());
    }

    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_qinv(int n_max, long a_max, std::uint64_t seed, int samples_per_graph) {
    const auto start = Clock::now();
    VerificationReport report;
    report.theorem = "qinv-product";
    report.seed = seed;
    std::mt19937_64 rng(seed);

    for (int n = 1; n <= n_max; ++n) {
        for (const auto& beta : connected_betas(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            for (const auto& a : netflow_instances(n, a_max, rng, samples_per_graph)) {
                ++report.instances;
                // multiplied form: q^F * Ehr_{q,q^{-1}} = prod b_i(q)
                const QLaurent lhs =
                    QLaurent::q_power(static_cast<int>(qinv_exponent(g, a))) *
                    specialize(ehrhart_qt(g, a), SpecMode::t_qinv);
                const QLaurent rhs = to_laurent(qinv_product(g, a));
                if (lhs != rhs) record(report, g, a, lhs.str(), rhs.str());
            }
        }

        // Complete-graph corollary with sampled a, plus the a = 1 case
        // q^{n(n-1)/2} Ehr = [n+1]_q^{n-1}.
        const ThresholdGraph k = ThresholdGraph::complete(n);
        for (const auto& a : netflow_instances(n, a_max, rng, samples_per_graph)) {
            ++report.instances;
            long f = -n;
            for (int i = 1; i <= n; ++i) f += static_cast<long>(i) * a[i - 1];
            QTPolynomial prod = q_bracket(a[n - 1], n + 1);
            for (int i = 1; i < n; ++i) {
                long s = (i + 1) * a[i - 1];
                for (int j = i + 1; j <= n; ++j) s += a[j - 1];
                prod *= q_bracket(s);
            }
            const QLaurent lhs = QLaurent::q_power(static_cast<int>(f)) *
                                 specialize(ehrhart_qt(k, a), SpecMode::t_qinv);
            const QLaurent rhs = to_laurent(prod);
            if (lhs != rhs) record(report, k, a, lhs.str(), rhs.str());
        }
        const std::vector<long> ones(n, 1);
        ++report.instances;
        const QLaurent lhs = QLaurent::q_power(n * (n - 1) / 2) *
                             specialize(ehrhart_qt(k, ones), SpecMode::t_qinv);
        const QLaurent rhs = to_laurent(q_bracket(n + 1).pow(static_cast<unsigned>(n - 1)));
        if (lhs != rhs) record(report, k, ones, lhs.str(), rhs.str());
    }

    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_lemma_t0(int k_max, int c_max) {
    const auto start = Clock::now();
    VerificationReport report;
    report.theorem = "lemma-t0-simplex";

    const QTPolynomial q_minus_1 = QTPolynomial::q() - QTPolynomial(1);
    for (int k = 1; k <= k_max; ++k) {
        for (int c = 1; c <= c_max; ++c) {
            ++report.instances;
            QTPolynomial lhs;
            std::vector<long> b(k, 0);
            auto rec = [&](auto&& self, int i, long remaining) -> void {
                if (i == k - 1) {
                    b[i] = remaining;
                    long exponent = 0;
                    int nonzero = 0;
                    long wt_exp = 0;
                    for (int j = 0; j < k; ++j) {
                        exponent += static_cast<long>(j) * b[j];
                        if (b[j] > 0) {
                            ++nonzero;
                            wt_exp += b[j] - 1;
                        }
                    }
                    lhs += QTPolynomial::monomial(1, static_cast<int>(exponent + wt_exp), 0) *
                           q_minus_1.pow(static_cast<unsigned>(nonzero - 1));
                    return;
                }
                for (long v = 0; v <= remaining; ++v) {
                    b[i] = v;
                    self(self, i + 1, remaining - v);
                }
                b[i] = 0;
            };
            rec(rec, 0, c);
            const QTPolynomial rhs =
                QTPolynomial::monomial(1, k * (c - 1), 0) * q_bracket(k);
            if (lhs != rhs) report.failures.push_back({{}, {k, c}, lhs.str(), rhs.str()});
        }
    }

    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_lemma_q(int a_max, int d_max, int z_max) {
    const auto start = Clock::now();
    VerificationReport report;
    report.theorem = "lemma-q-bracket";

    const QLaurent one_minus_q = QLaurent(1) - QLaurent::q_power(1);
    const QLaurent one_minus_qinv = QLaurent(1) - QLaurent::q_power(-1);
    for (int a = 1; a <= a_max; ++a) {
        for (int d = 1; d <= d_max; ++d) {
            for (int z = 1; z <= z_max; ++z) {
                ++report.instances;
                const QLaurent lhs =
                    to_laurent(q_bracket(a, d + 1) * q_bracket(d) * q_bracket(z + a));
                QLaurent rhs = QLaurent::q_power(a) *
                               to_laurent(q_bracket(a, d) * q_bracket(d - 1) * q_bracket(z));
                rhs += QLaurent::q_power(a - 1) * wt_qinv(a) * to_laurent(q_bracket(z + d * a));
                QLaurent sum;
                for (int k = 1; k <= a - 1; ++k)
                    sum += wt_qinv(k) *
                           to_laurent(q_bracket(a - k, d) * q_bracket(d - 1) * q_bracket(z + d * k));
                rhs -= QLaurent::q_power(a) * one_minus_q * one_minus_qinv * sum;

                // cleared form: both sides times q^{a-1} must be honest
                // polynomials, compared exactly
                const QTPolynomial lhs_poly = (QLaurent::q_power(a - 1) * lhs).to_qt();
                const QTPolynomial rhs_poly = (QLaurent::q_power(a - 1) * rhs).to_qt();
                if (lhs_poly != rhs_poly)
                    report.failures.push_back({{}, {a, d, z}, lhs_poly.str(), rhs_poly.str()});
            }
        }
    }

    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport scan_conjectures(ScanKind kind, int n_max) {
    const auto start = Clock::now();
    VerificationReport report;
    switch (kind) {
        case ScanKind::positivity:
            report.theorem = "scan-positivity";
            break;
        case ScanKind::complete_minus_g:
            report.theorem = "scan-k-minus-g";
            break;
        case ScanKind::poset_covers:
            report.theorem = "scan-poset-covers";
            break;
    }

    for (int n = 1; n <= n_max; ++n) {
        const std::vector<long> ones(n, 1);
        if (kind == ScanKind::poset_covers) {
            const PosetPn poset(n);
            std::vector<QTPolynomial> ehr(poset.size());
            for (int i = 0; i < poset.size(); ++i) ehr[i] = ehrhart_qt(poset.element(i), ones);
            for (const auto& [h, g] : poset.covers()) {
                ++report.instances;
                const QTPolynomial diff = ehr[g] - ehr[h];
                if (!diff.is_nonnegative())
                    report.failures.push_back(
                        {poset.element(g).beta(), ones, diff.str(), poset.element(h).beta_string()});
            }
            continue;
        }
        const QTPolynomial complete_ehr =
            kind == ScanKind::complete_minus_g ? ehrhart_qt(ThresholdGraph::complete(n), ones)
                                               : QTPolynomial();
        for (const auto& beta : connected_betas(n)) {
            const ThresholdGraph g = ThresholdGraph::from_binary(beta);
            ++report.instances;
            const QTPolynomial ehr = ehrhart_qt(g, ones);
            const QTPolynomial target =
                kind == ScanKind::positivity ? ehr : complete_ehr - ehr;
            if (!target.is_nonnegative()) record(report, g, ones, target.str(), "N[q,t]");
        }
    }

    report.elapsed_ms = ms_since(start);
    return report;
}

QTPolynomial s_qt(const PosetPn& poset, int index) {
    const std::vector<long> ones(poset.n(), 1);
    QTPolynomial sum;
    for (int h = 0; h < poset.size(); ++h) {
        if (!poset.leq(h, index)) continue;
        const long mu = poset.moebius(h, index);
        if (mu == 0) continue;
        sum += QTPolynomial(mu) * ehrhart_qt(poset.element(h), ones);
    }
    return sum;
}

}  // namespace qtflows
