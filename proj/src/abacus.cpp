#include "sxp/abacus.hpp"

#include <algorithm>

namespace sxp {

namespace {

// Beta-numbers {p_i + (b - i) : 1 <= i <= b}, ascending.
std::vector<int> beta_set(const Partition& p, int beads) {
    std::vector<int> pos(beads);
    for (int i = 1; i <= beads; ++i) pos[beads - i] = p.part(i - 1) + (beads - i);
    return pos;
}

Partition partition_from_positions(const std::vector<int>& positions) {
    std::vector<int> sorted(positions);
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    int b = static_cast<int>(sorted.size());
    std::vector<int> parts(b);
    for (int i = 1; i <= b; ++i) parts[i - 1] = sorted[i - 1] - (b - i);
    return Partition(std::move(parts));
}

// Decode a single runner: bead levels (ascending) to a partition.
Partition partition_from_levels(const std::vector<int>& levels) {
    int c = static_cast<int>(levels.size());
    std::vector<int> parts(c);
    for (int j = 1; j <= c; ++j) parts[j - 1] = levels[c - j] - (c - j);
    return Partition(std::move(parts));
}

// Levels (ascending) of the beads encoding partition comp on a runner with
// `count` beads.
std::vector<int> levels_from_partition(const Partition& comp, int count) {
    std::vector<int> levels(count);
    for (int j = 1; j <= count; ++j) levels[count - j] = comp.part(j - 1) + (count - j);
    return levels;
}

std::vector<std::vector<int>> levels_by_runner(const std::vector<int>& positions, int r) {
    std::vector<std::vector<int>> levels(r);
    for (int beta : positions) levels[beta % r].push_back(beta / r);
    return levels;
}

} // namespace

Abacus::Abacus(int runners_, std::vector<int> positions_)
    : runners(runners_), positions(std::move(positions_)) {
    if (runners < 1) throw error("abacus needs at least one runner");
    std::sort(positions.begin(), positions.end());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 0 || (i > 0 && positions[i] == positions[i - 1]))
            throw error("abacus positions must be distinct and nonnegative");
    }
    if (bead_count() % runners != 0)
        throw bad_bead_count("bead count must be a multiple of the runner count");
}

bool Abacus::has_bead(int beta) const {
    return std::binary_search(positions.begin(), positions.end(), beta);
}

std::vector<std::vector<int>> Abacus::runner_levels() const {
    return levels_by_runner(positions, runners);
}

int canonical_bead_count(const Partition& p, int r) {
    if (r < 1) throw error("runner count must be positive");
    int b = p.rows();
    int rem = b % r;
    return rem == 0 ? b : b + (r - rem);
}

Abacus abacus_from_partition(const Partition& p, int r, int beads) {
    if (beads % r != 0) throw bad_bead_count("bead count must be a multiple of r");
    if (beads < p.rows()) throw bad_bead_count("bead count must cover every part");
    return Abacus(r, beta_set(p, beads));
}

Partition partition_from_abacus(const Abacus& a) {
    return partition_from_positions(a.positions);
}

int strip_row_number(const Abacus& a, int beta) {
    if (!a.has_bead(beta)) throw illegal_move("no bead at the given position");
    int target = beta + a.runners;
    if (a.has_bead(target)) throw illegal_move("target position below is occupied");
    int above = 0;
    for (int pos : a.positions)
        if (pos > target) ++above;
    return above + 1;
}

std::vector<Partition> r_quotient_with_beads(const Partition& p, int r, int beads) {
    if (beads < p.rows()) throw bad_bead_count("bead count must cover every part");
    auto levels = levels_by_runner(beta_set(p, beads), r);
    std::vector<Partition> out;
    out.reserve(r);
    for (int i = 0; i < r; ++i) out.push_back(partition_from_levels(levels[i]));
    return out;
}

std::vector<Partition> r_quotient(const Partition& p, int r) {
    return r_quotient_with_beads(p, r, canonical_bead_count(p, r));
}

Partition r_core(const Partition& p, int r) {
    int beads = canonical_bead_count(p, r);
    auto levels = levels_by_runner(beta_set(p, beads), r);
    std::vector<int> packed;
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < static_cast<int>(levels[i].size()); ++l)
            packed.push_back(i + l * r);
    return partition_from_positions(packed);
}

namespace detail {

std::vector<int> runner_counts(const Partition& p, int r, int beads) {
    auto levels = levels_by_runner(beta_set(p, beads), r);
    std::vector<int> counts(r);
    for (int i = 0; i < r; ++i) counts[i] = static_cast<int>(levels[i].size());
    return counts;
}

Partition QuotientFrame::assemble(const std::vector<Partition>& comps) const {
    std::vector<int> positions;
    positions.reserve(beads);
    for (int i = 0; i < r; ++i) {
        if (comps[i].rows() > counts[i])
            throw error("quotient frame too small for component");
        for (int level : levels_from_partition(comps[i], counts[i]))
            positions.push_back(i + level * r);
    }
    return partition_from_positions(positions);
}

std::vector<Partition> QuotientFrame::components(const Partition& p) const {
    auto levels = levels_by_runner(beta_set(p, beads), r);
    std::vector<Partition> out;
    out.reserve(r);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(levels[i].size()) != counts[i])
            throw error("partition does not share the frame's core");
        out.push_back(partition_from_levels(levels[i]));
    }
    return out;
}

QuotientFrame frame_for(const Partition& tau, int r, int growth) {
    QuotientFrame f;
    f.r = r;
    f.beads = canonical_bead_count(tau, r);
    f.counts = runner_counts(tau, r, f.beads);
    auto comps = r_quotient_with_beads(tau, r, f.beads);
    int extra = 0;
    for (int i = 0; i < r; ++i)
        extra = std::max(extra, comps[i].rows() + growth - f.counts[i]);
    if (extra > 0) {
        f.beads += extra * r;
        f.counts = runner_counts(tau, r, f.beads);
    }
    return f;
}

} // namespace detail

SkewMultiShape skew_quotient(const SkewShape& s, int r) {
    int beads = canonical_bead_count(s.outer(), r);
    auto outer_levels = levels_by_runner(beta_set(s.outer(), beads), r);
    auto inner_levels = levels_by_runner(beta_set(s.inner(), beads), r);
    std::vector<SkewShape> comps;
    comps.reserve(r);
    for (int i = 0; i < r; ++i) {
        if (outer_levels[i].size() != inner_levels[i].size())
            throw not_componentwise_skew("outer and inner have different r-cores");
        Partition out_comp = partition_from_levels(outer_levels[i]);
        Partition in_comp = partition_from_levels(inner_levels[i]);
        if (!out_comp.contains(in_comp))
            throw not_componentwise_skew("quotient component fails to nest");
        comps.emplace_back(std::move(out_comp), std::move(in_comp));
    }
    return SkewMultiShape(std::move(comps));
}

Partition star(const SkewMultiShape& q, const Partition& tau, int r) {
    if (q.length() != r) throw quotient_mismatch("quotient must have exactly r components");
    auto tau_quot = r_quotient(tau, r);
    int growth = 0;
    for (int i = 0; i < r; ++i) {
        if (q.components[i].inner() != tau_quot[i])
            throw quotient_mismatch("inner components must be the r-quotient of tau");
        growth = std::max(growth, q.components[i].outer().rows() - tau_quot[i].rows());
    }
    detail::QuotientFrame f = detail::frame_for(tau, r, growth);
    std::vector<Partition> outers;
    outers.reserve(r);
    for (int i = 0; i < r; ++i) outers.push_back(q.components[i].outer());
    return f.assemble(outers);
}

int sgn_r(const SkewShape& s, int r) {
    int beads = canonical_bead_count(s.outer(), r);
    auto outer_levels = levels_by_runner(beta_set(s.outer(), beads), r);
    auto inner_levels = levels_by_runner(beta_set(s.inner(), beads), r);
    for (int i = 0; i < r; ++i) {
        if (outer_levels[i].size() != inner_levels[i].size()) return 0;
        for (std::size_t j = 0; j < outer_levels[i].size(); ++j)
            if (inner_levels[i][j] > outer_levels[i][j]) return 0;
    }
    // Track each inner bead to its outer slot (order-preserving per runner)
    // and read off the parity of the resulting arrangement.
    std::vector<std::pair<int, int>> moves;   // (source position, target position)
    moves.reserve(beads);
    for (int i = 0; i < r; ++i)
        for (std::size_t j = 0; j < inner_levels[i].size(); ++j)
            moves.emplace_back(i + inner_levels[i][j] * r, i + outer_levels[i][j] * r);
    std::sort(moves.begin(), moves.end());
    int inversions = 0;
    for (std::size_t a = 0; a < moves.size(); ++a)
        for (std::size_t b = a + 1; b < moves.size(); ++b)
            if (moves[a].second > moves[b].second) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace sxp
