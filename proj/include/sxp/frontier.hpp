#pragma once

#include <string>
#include <vector>

#include "sxp/ribbon.hpp"
#include "sxp/sxp.hpp"

namespace sxp {

// Ribbon tableaux of the given shape and weight whose column word (CWL) or
// row-number tableau word (RNTL) is latticed.
Int count_cwl(const SkewShape& s, const Partition& lambda, int r);
Int count_rntl(const SkewShape& s, const Partition& lambda, int r);

// r = 2: |<s_tau (s_lambda o p_2), s_nu>| should equal the latticed-column-
// word count, with sign sgn_2(nu/tau) whenever the multiplicity is nonzero.
struct CarreLeclercResult {
    Int multiplicity = 0;
    Int cwl = 0;
    int sign = 0;
    bool ok = false;
};
CarreLeclercResult carre_leclerc_check(const Partition& tau, const Partition& lambda,
                                       const Partition& nu);

// lambda = (a, 1^b): the multiplicity matches the RNTL count up to
// sgn_r(nu/tau). `canonical_column_words` reports whether every RNTL witness
// has column word (b+1) b ... 2 1^a; that is not folded into `ok`, because
// witnesses with other latticed column words exist (weight (2,1) on (3,3)
// at r = 2 already has one). Only the count claim is asserted.
struct HookCheckResult {
    Int multiplicity = 0;
    Int rntl = 0;
    int sign = 0;
    bool canonical_column_words = false;
    bool ok = false;
};
HookCheckResult hook_check(const Partition& tau, int a, int b, const Partition& nu, int r);

// One harness cell: nu of empty r-core, two-part weight (a, b).
struct ConjectureCell {
    int r = 0;
    int n = 0;
    Partition nu;
    int a = 0;
    int b = 0;
    Int mult = 0;
    Int rt = 0;
    Int cwl = 0;
    Int rntl = 0;

    Int abs_mult() const { return mult < 0 ? -mult : mult; }
    bool violation() const { return rntl < abs_mult(); }
    Int slack() const { return rntl - abs_mult(); }
    std::string json_line() const;
};

struct ConjectureReport {
    std::vector<ConjectureCell> cells;   // canonical order: (r, n, a, b, nu)
    long long scanned = 0;               // including trivially-empty cells
    long long violations = 0;
    Int min_slack = 0;
    Int max_slack = 0;
    long long b1_cells = 0;
    bool b1_equality = true;             // b = 1 cells meet the bound with equality
    long long audited = 0;
    long long audit_failures = 0;
    long long resumed = 0;               // cells read back instead of recomputed
};

struct ConjectureOptions {
    int r_max = 3;
    int n_max = 6;
    int jobs = 1;
    std::string out_path;                // empty: in-memory only
    bool resume = false;
    unsigned seed = 1;                   // drives the oracle spot-audit sample
    double audit_fraction = 0.01;
};

ConjectureReport verify_conjecture(const ConjectureOptions& opt);

// The four counterexample rows showing that neither lattice statistic
// matches the multiplicity in general.
struct TableRow {
    Partition tau;
    Partition lambda;
    int r = 0;
    Partition nu;
    Int mult = 0;
    Int rt = 0;
    Int cwl = 0;
    Int rntl = 0;
};
std::vector<TableRow> reproduce_table();

} // namespace sxp
