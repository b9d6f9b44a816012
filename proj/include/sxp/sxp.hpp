#pragma once

#include "sxp/coplactic.hpp"
#include "sxp/ribbon.hpp"
#include "sxp/symfunc.hpp"

namespace sxp {

// Schur expansion of s_tau (s_{lambda/mu} o p_r) by the generalized SXP rule:
// sum over r-multipartitions nub with nub/taub a skew r-multipartition of
// |lambda/mu|, with coefficient sgn_r(nu/tau) * c^lambda_{nub/taub : mu} at
// nu = (nub/taub, tau)*.
SchurExpansion sxp_expand(const Partition& tau, const SkewShape& s, int r);

// The classic rule s_lambda o p_r (tau and mu empty); agrees with
// sxp_expand(empty, lambda, r).
SchurExpansion sxp_classic(const Partition& lambda, int r);

// Stage-by-stage evaluation: Jacobi-Trudi over Sym_l, the plethystic
// Murnaghan-Nakayama rule per term, the quotient bijection to multitableaux,
// involution cancellation with the inner shape appended, and identification
// of the survivors as Littlewood-Richardson coefficients. The trace records
// enough counts to replay the cancellation story per output shape.
struct PipelineTermRecord {
    SignedPermutation g;
    Composition alpha;               // g.lambda - mu, all entries >= 0
};

struct PipelineNuRecord {
    Partition nu;
    std::vector<Int> ribbon_tableaux_per_term;   // aligned with trace.terms
    Int summands = 0;      // multitableaux over all terms
    Int cancelled = 0;     // members of involution 2-cycles
    Int survivors = 0;     // latticed fixed points
    int sign = 0;          // sgn_r(nu/tau)
    Int coefficient = 0;   // sign * survivors
};

struct PipelineTrace {
    Partition tau;
    SkewShape shape;
    int r = 1;
    int jacobi_trudi_terms = 0;      // permutations surviving the h = 0 convention
    std::vector<PipelineTermRecord> terms;
    std::vector<PipelineNuRecord> by_nu;         // sorted by nu

    SchurExpansion result() const;
};

PipelineTrace pipeline_trace(const Partition& tau, const SkewShape& s, int r);

// r = 1 specializations, entirely in terms of Littlewood-Richardson
// coefficients (all coefficients nonnegative).
// s_tau * s_{lambda/mu} = sum_nu c^lambda_{(nu/tau, mu)} s_nu
SchurExpansion schur_times_skew_lr(const Partition& tau, const SkewShape& s);
// s_{nu/tau} = sum_lambda c^nu_{(lambda, tau)} s_lambda
SchurExpansion skew_schur_lr(const SkewShape& s);
// <s_{nu/tau}, s_{lambda/mu}>: semistandard nu/tau-tableaux of content
// lambda - mu that stay latticed with the superstandard mu-tableau appended.
Int skew_skew_inner_lr(const SkewShape& nu_tau, const SkewShape& lambda_mu);

} // namespace sxp
