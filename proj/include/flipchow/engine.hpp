#pragma once

#include <string>
#include <vector>

#include "flipchow/params.hpp"
#include "flipchow/polynomial.hpp"

namespace flipchow {

/// One named pass/fail result of the verification suite.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Record of the full cohomology-mode run of the flip recursion.
struct FlipTrace {
    ModuliParams params;

    struct Step {
        int k = 0;
        IntPolynomial poincare;  // P_t(M_k)
        IntPolynomial delta;     // P_t(M_k) - P_t(M_{k-1})
    };
    std::vector<Step> per_step;
    IntPolynomial poincare_N;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

/// Poincare polynomial of M_k, computed by running the flip recursion from
/// M_0 = P^{m-1} with the collapsed per-step shift factor
///   P(S^kX) * ( sum_{s=0}^{m-2k-2} t^{2(k+s)} - sum_{r=0}^{k-2} t^{2(m-2k+r)} ).
IntPolynomial poincare_M(const ModuliParams& p, int k);

/// Per-step increment P(M_k) - P(M_{k-1}) via the collapsed shift factor.
IntPolynomial step_delta_collapsed(const ModuliParams& p, int k);

/// Same increment computed from the two uncollapsed double ranges of the
/// pre-reduction sequence; must agree with step_delta_collapsed identically.
IntPolynomial step_delta_uncollapsed(const ModuliParams& p, int k);

/// Poincare polynomial of N, by exact division of P(M_w) by the fiber factor
/// 1 + t^2 + ... + t^{2(n-1)} of the projective bundle M_w -> N.
IntPolynomial poincare_N(const ModuliParams& p);

/// Runs the recursion and all structural checks. also_d, when >= 0, computes a
/// sibling degree and records a d-independence check. Failures are recorded in
/// the trace, never thrown.
FlipTrace verify(const ModuliParams& p, int also_d = -1);

}  // namespace flipchow
