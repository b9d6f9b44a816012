#pragma once

#include <vector>

#include "sxp/partition.hpp"

namespace sxp {

// An r-runner abacus: bead positions are the beta-numbers {p_i + (b - i)}
// of a partition padded to b parts, with b always a multiple of r. Position
// beta sits on runner beta mod r at level beta div r; pushing a bead down one
// level adds an r-border strip to the partition.
struct Abacus {
    int runners = 1;
    std::vector<int> positions;   // strictly increasing, nonnegative

    Abacus() = default;
    Abacus(int runners_, std::vector<int> positions_);

    int bead_count() const { return static_cast<int>(positions.size()); }
    bool has_bead(int beta) const;

    // Bead levels per runner, each list strictly increasing.
    std::vector<std::vector<int>> runner_levels() const;
};

// Smallest multiple of r that is >= the number of parts of p.
int canonical_bead_count(const Partition& p, int r);

Abacus abacus_from_partition(const Partition& p, int r, int beads);
Partition partition_from_abacus(const Abacus& a);

// Row number of the r-border strip added by moving the bead at position beta
// down one step: one more than the number of beads above position beta + r.
// Throws illegal_move if beta is empty or beta + r is occupied.
int strip_row_number(const Abacus& a, int beta);

// r-quotient read off runner by runner at the canonical bead count. The
// result is independent of which multiple of r is used; bead counts that are
// not multiples of r cyclically shift the components and are available only
// through the explicit-bead-count variant (used by the shift tests).
std::vector<Partition> r_quotient(const Partition& p, int r);
std::vector<Partition> r_quotient_with_beads(const Partition& p, int r, int beads);

// Partition left after pushing all beads up as far as they go.
Partition r_core(const Partition& p, int r);

// Componentwise quotient of a skew shape. Throws not_componentwise_skew when
// the runner bead counts of outer and inner differ (different r-cores) or
// some component fails to nest.
SkewMultiShape skew_quotient(const SkewShape& s, int r);

// The unique partition nu with nu/tau skew of size r*|q| whose r-quotient is
// q. The inner components of q must equal the r-quotient of tau
// (quotient_mismatch otherwise).
Partition star(const SkewMultiShape& q, const Partition& tau, int r);

// +1/-1 for r-decomposable shapes, 0 otherwise. Computed as the parity of
// the bead rearrangement taking an abacus for inner to one for outer: a
// single-step move hops over exactly height-many beads, so the product of
// (-1)^height over any strip decomposition is the parity of the tracked-bead
// permutation.
int sgn_r(const SkewShape& s, int r);

namespace detail {

// Fixed frame for quotient-space computation relative to a core: bead count
// (multiple of r) and per-runner bead counts. All partitions appearing in one
// computation must share the core that `counts` encodes.
struct QuotientFrame {
    int r = 1;
    int beads = 0;
    std::vector<int> counts;

    // Encode component partitions (one per runner) as a full partition.
    Partition assemble(const std::vector<Partition>& comps) const;
    // Decode; the partition must have this frame's runner counts.
    std::vector<Partition> components(const Partition& p) const;
};

// Frame for tau with room for `growth` extra rows per quotient component.
QuotientFrame frame_for(const Partition& tau, int r, int growth);

std::vector<int> runner_counts(const Partition& p, int r, int beads);

} // namespace detail

} // namespace sxp
