#ifndef QTFLOWS_VERIFY_HPP
#define QTFLOWS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qtflows/flow.hpp"
#include "qtflows/graph.hpp"
#include "qtflows/poly.hpp"

namespace qtflows {

constexpr std::uint64_t kDefaultSeed = 20240618;

struct FailureCase {
    std::vector<int> beta;
    std::vector<long> a;
    std::string lhs;
    std::string rhs;
};

/// Machine-readable result of a theorem check or conjecture scan. A report
/// passes only when every instance compared canonically equal polynomials.
struct VerificationReport {
    std::string theorem;
    long instances = 0;
    std::uint64_t seed = kDefaultSeed;
    std::vector<FailureCase> failures;
    long elapsed_ms = 0;

    bool ok() const { return failures.empty(); }
    std::string to_json() const;
    std::string summary() const;
};

/// All connected construction sequences of length n (beta_0 = 1).
std::vector<std::vector<int>> connected_betas(int n);

/// Three-way t=1 agreement: Ehr|_{t=1}, the spanning-tree sums, and the
/// Tutte polynomial of the inflated multigraph at (1, q). Exhaustive over
/// connected graphs with a = 1 for n <= n_max, plus seeded random (beta, a)
/// samples with entries <= a_max.
VerificationReport verify_t1(int n_max, long a_max, std::uint64_t seed = kDefaultSeed,
                             int random_samples = 50);

/// t=0 product formula plus the [n]_q! corollary on complete graphs.
VerificationReport verify_t0(int n_max, long a_max, std::uint64_t seed = kDefaultSeed,
                             int samples_per_graph = 8);

/// t=q^{-1} product formula in multiplied form q^F * Ehr = prod b_i, the
/// complete-graph corollary, and the a = 1 specialization.
VerificationReport verify_qinv(int n_max, long a_max, std::uint64_t seed = kDefaultSeed,
                               int samples_per_graph = 8);

/// Simplex identity: direct summation over Delta(k, c) against
/// q^{k(c-1)}[k]_q, for all k, c up to the bounds.
VerificationReport verify_lemma_t0(int k_max, int c_max);

/// Bracket identity behind the t=q^{-1} recursion, with both sides cleared
/// to polynomial form by a power of q.
VerificationReport verify_lemma_q(int a_max, int d_max, int z_max);

enum class ScanKind { positivity, complete_minus_g, poset_covers };

/// Coefficient-nonnegativity scans over all connected threshold graphs with
/// netflow all-ones, for n up to n_max.
VerificationReport scan_conjectures(ScanKind kind, int n_max);

/// Moebius-weighted refinement S_{q,t}(G) = sum_{H <= G} mu(H, G) Ehr(H)
/// with netflow all-ones.
QTPolynomial s_qt(const PosetPn& poset, int index);

}  // namespace qtflows

#endif
