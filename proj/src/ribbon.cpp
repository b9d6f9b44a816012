#include "sxp/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sxp {

std::vector<Box> boxes_of(const SkewShape& s) {
    std::vector<Box> out;
    for (int a = 1; a <= s.rows(); ++a)
        for (int b = s.row_begin(a); b <= s.row_end(a); ++b) out.emplace_back(a, b);
    return out;
}

namespace {

bool in_shape(const SkewShape& s, int a, int b) {
    if (a < 1 || a > s.rows()) return false;
    return b >= s.row_begin(a) && b <= s.row_end(a);
}

} // namespace

bool is_border_strip(const SkewShape& s) {
    std::vector<Box> boxes = boxes_of(s);
    if (boxes.empty()) return false;
    for (const Box& box : boxes) {
        auto [a, b] = box;
        if (in_shape(s, a, b + 1) && in_shape(s, a + 1, b) && in_shape(s, a + 1, b + 1))
            return false;   // 2x2 block
    }
    // Rim-connectedness: walk from the unique box count via adjacency.
    std::set<Box> todo(boxes.begin(), boxes.end());
    std::vector<Box> stack{*todo.begin()};
    todo.erase(todo.begin());
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        for (Box nb : {Box{a - 1, b}, Box{a + 1, b}, Box{a, b - 1}, Box{a, b + 1}}) {
            auto it = todo.find(nb);
            if (it != todo.end()) {
                stack.push_back(*it);
                todo.erase(it);
            }
        }
    }
    return todo.empty();
}

BorderStrip::BorderStrip(SkewShape s) : shape(std::move(s)) {
    if (!is_border_strip(shape))
        throw not_a_strip("shape is not a border strip");
}

int row_number(const SkewShape& s) {
    for (int a = 1; a <= s.rows(); ++a)
        if (s.row_end(a) >= s.row_begin(a)) return a;
    throw error("row number of an empty shape");
}

int column_number(const SkewShape& s) {
    int best = -1;
    for (int a = 1; a <= s.rows(); ++a)
        if (s.row_end(a) >= s.row_begin(a))
            if (best < 0 || s.row_begin(a) < best) best = s.row_begin(a);
    if (best < 0) throw error("column number of an empty shape");
    return best;
}

int strip_height(const SkewShape& s) {
    int rows_met = 0;
    for (int a = 1; a <= s.rows(); ++a)
        if (s.row_end(a) >= s.row_begin(a)) ++rows_met;
    if (rows_met == 0) throw error("height of an empty shape");
    return rows_met - 1;
}

bool is_horizontal_strip(const SkewShape& s, int r) {
    if (s.size() % r != 0) return false;
    SkewMultiShape q;
    try {
        q = skew_quotient(s, r);
    } catch (const not_componentwise_skew&) {
        return false;
    }
    for (const SkewShape& c : q.components)
        for (int j = 0; j + 1 < c.outer().rows(); ++j)
            if (c.outer().part(j + 1) > c.inner().part(j)) return false;
    return true;
}

RibbonStrip strip_chain(const SkewShape& s, int r) {
    if (s.size() % r != 0) throw not_a_strip("size is not a multiple of r");
    int beads = canonical_bead_count(s.outer(), r);
    Abacus inner_ab = abacus_from_partition(s.inner(), r, beads);
    Abacus outer_ab = abacus_from_partition(s.outer(), r, beads);
    auto inner_levels = inner_ab.runner_levels();
    auto outer_levels = outer_ab.runner_levels();

    std::vector<int> sources;   // one entry per single-step move
    for (int i = 0; i < r; ++i) {
        if (inner_levels[i].size() != outer_levels[i].size())
            throw not_a_strip("shape is not r-decomposable");
        for (std::size_t j = 0; j < inner_levels[i].size(); ++j) {
            if (inner_levels[i][j] > outer_levels[i][j])
                throw not_a_strip("shape is not r-decomposable");
            for (int l = inner_levels[i][j]; l < outer_levels[i][j]; ++l)
                sources.push_back(i + l * r);
        }
    }
    std::sort(sources.begin(), sources.end());

    RibbonStrip out;
    out.shape = s;
    out.r = r;
    out.chain.push_back(s.inner());
    std::set<int> posit(inner_ab.positions.begin(), inner_ab.positions.end());
    for (int src : sources) {
        int target = src + r;
        if (!posit.count(src) || posit.count(target))
            throw not_a_strip("bead moves collide; not a horizontal strip");
        posit.erase(src);
        int above = 0;
        for (int p : posit)
            if (p > target) ++above;
        posit.insert(target);
        out.row_numbers.push_back(above + 1);
        out.chain.push_back(
            partition_from_abacus(Abacus(r, std::vector<int>(posit.begin(), posit.end()))));
    }
    for (std::size_t i = 1; i < out.row_numbers.size(); ++i)
        if (out.row_numbers[i] > out.row_numbers[i - 1])
            throw not_a_strip("row numbers increase; not a horizontal strip");
    if (out.chain.back() != s.outer())
        throw error("strip chain failed to reach the outer partition");
    return out;
}

namespace {

// Quotient-space horizontal strip moves, bounded below (removal) or
// unbounded above (addition). Kept local to the pipeline: the symmetric
// function oracle has its own independent enumerator.
void strip_removals(const Partition& cur, const Partition& lob, int maxremove,
                    const std::function<void(const Partition&, int)>& emit) {
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int row, int removed) {
        if (row > cur.rows()) {
            emit(Partition(acc), removed);
            return;
        }
        int hi = cur.part(row - 1);
        int lo = std::max(lob.part(row - 1), cur.part(row));
        for (int k = hi; k >= lo; --k) {
            if (removed + (hi - k) > maxremove) break;
            acc.push_back(k);
            rec(row + 1, removed + (hi - k));
            acc.pop_back();
        }
    };
    rec(1, 0);
}

void strip_additions(const Partition& cur, int maxadd,
                     const std::function<void(const Partition&, int)>& emit) {
    int maxrows = cur.rows() + 1;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int row, int added) {
        if (row > maxrows) {
            emit(Partition(acc), added);
            return;
        }
        int lo = cur.part(row - 1);
        int hi = lo + (maxadd - added);
        if (row > 1) hi = std::min(hi, cur.part(row - 2));
        for (int k = lo; k <= hi; ++k) {
            acc.push_back(k);
            rec(row + 1, added + (k - lo));
            acc.pop_back();
        }
    };
    rec(1, 0);
}

using MultiPartition = std::vector<Partition>;

// Componentwise strip removal with exact total.
void multistrip_removals(const MultiPartition& cur, const MultiPartition& lob, int total,
                         const std::function<void(const MultiPartition&)>& emit) {
    int r = static_cast<int>(cur.size());
    MultiPartition acc(r);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == r) {
            if (remaining == 0) emit(acc);
            return;
        }
        strip_removals(cur[i], lob[i], remaining, [&](const Partition& sigma, int removed) {
            acc[i] = sigma;
            rec(i + 1, remaining - removed);
        });
    };
    rec(0, total);
}

void multistrip_additions(const MultiPartition& cur, int total,
                          const std::function<void(const MultiPartition&)>& emit) {
    int r = static_cast<int>(cur.size());
    MultiPartition acc(r);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == r) {
            if (remaining == 0) emit(acc);
            return;
        }
        strip_additions(cur[i], remaining, [&](const Partition& rho, int added) {
            acc[i] = rho;
            rec(i + 1, remaining - added);
        });
    };
    rec(0, total);
}

detail::QuotientFrame frame_covering(const Partition& tau, int r, const MultiPartition& outers) {
    auto tau_comps = r_quotient(tau, r);
    int growth = 0;
    for (int i = 0; i < r; ++i)
        growth = std::max(growth, outers[i].rows() - tau_comps[i].rows());
    return detail::frame_for(tau, r, std::max(growth, 0));
}

} // namespace

std::vector<RibbonTableau> enumerate_ribbon_tableaux(const SkewShape& s,
                                                     const Composition& weight, int r) {
    std::vector<RibbonTableau> out;
    if (!weight.is_proper()) return out;
    if (s.size() != r * weight.sum()) return out;
    SkewMultiShape q;
    try {
        q = skew_quotient(s, r);
    } catch (const not_componentwise_skew&) {
        return out;
    }
    MultiPartition inner_comps, outer_comps;
    for (const SkewShape& c : q.components) {
        inner_comps.push_back(c.inner());
        outer_comps.push_back(c.outer());
    }
    detail::QuotientFrame frame = frame_covering(s.inner(), r, outer_comps);

    int l = weight.length();
    std::vector<MultiPartition> levels(l + 1);
    levels[l] = outer_comps;
    std::function<void(int)> rec = [&](int j) {
        if (j == 0) {
            RibbonTableau T;
            T.shape = s;
            T.r = r;
            T.weight = weight;
            T.chain.reserve(l + 1);
            for (const MultiPartition& m : levels) T.chain.push_back(frame.assemble(m));
            out.push_back(std::move(T));
            return;
        }
        multistrip_removals(levels[j], inner_comps, weight.entries[j - 1],
                            [&](const MultiPartition& prev) {
                                levels[j - 1] = prev;
                                rec(j - 1);
                            });
    };
    rec(l);
    std::sort(out.begin(), out.end(), [](const RibbonTableau& a, const RibbonTableau& b) {
        return a.chain < b.chain;
    });
    return out;
}

MultiTableau ribbon_to_multitableau(const RibbonTableau& T) {
    int r = T.r;
    SkewMultiShape q = skew_quotient(T.shape, r);
    MultiPartition outer_comps;
    for (const SkewShape& c : q.components) outer_comps.push_back(c.outer());
    detail::QuotientFrame frame = frame_covering(T.shape.inner(), r, outer_comps);

    std::vector<MultiPartition> levels;
    levels.reserve(T.chain.size());
    for (const Partition& p : T.chain) levels.push_back(frame.components(p));

    std::vector<SkewTableau> comps;
    for (int i = 0; i < r; ++i) {
        const Partition& inner = levels.front()[i];
        const Partition& outer = levels.back()[i];
        std::vector<std::vector<int>> rows(outer.rows());
        for (std::size_t j = 1; j < levels.size(); ++j)
            for (int a = 1; a <= outer.rows(); ++a)
                for (int b = levels[j - 1][i].part(a - 1); b < levels[j][i].part(a - 1); ++b)
                    rows[a - 1].push_back(static_cast<int>(j));
        comps.emplace_back(SkewShape(outer, inner), std::move(rows));
    }
    return MultiTableau(std::move(comps));
}

RibbonTableau multitableau_to_ribbon(const MultiTableau& t, const Partition& tau, int r,
                                     int weight_length) {
    if (t.length() != r)
        throw quotient_mismatch("multitableau must have exactly r components");
    auto tau_comps = r_quotient(tau, r);
    MultiPartition outer_comps;
    for (int i = 0; i < r; ++i) {
        if (t.components[i].shape().inner() != tau_comps[i])
            throw quotient_mismatch("inner components must be the r-quotient of tau");
        outer_comps.push_back(t.components[i].shape().outer());
    }
    detail::QuotientFrame frame = frame_covering(tau, r, outer_comps);

    Composition cont = content(t);
    if (cont.length() > weight_length)
        throw shape_mismatch("multitableau entries exceed the declared weight length");
    RibbonTableau T;
    T.r = r;
    T.weight = Composition(std::vector<int>(weight_length, 0));
    for (int j = 0; j < cont.length(); ++j) T.weight.entries[j] = cont.entries[j];
    for (int j = 0; j <= weight_length; ++j) {
        MultiPartition level(r);
        for (int i = 0; i < r; ++i) {
            const SkewTableau& comp = t.components[i];
            std::vector<int> parts(outer_comps[i].rows());
            for (int a = 1; a <= outer_comps[i].rows(); ++a) {
                int width = tau_comps[i].part(a - 1);
                if (a <= comp.shape().rows())
                    for (int e : comp.rows()[a - 1])
                        if (e <= j) ++width;
                parts[a - 1] = width;
            }
            level[i] = Partition(std::move(parts));
        }
        T.chain.push_back(frame.assemble(level));
    }
    T.shape = SkewShape(T.chain.back(), T.chain.front());
    return T;
}

std::map<Partition, Int> ribbon_tableau_counts(const Partition& tau,
                                               const Composition& alpha, int r) {
    std::map<Partition, Int> out;
    if (!alpha.is_proper()) return out;
    detail::QuotientFrame frame = detail::frame_for(tau, r, alpha.length());

    std::map<MultiPartition, Int> state;
    state[r_quotient(tau, r)] = 1;
    for (int part : alpha.entries) {
        std::map<MultiPartition, Int> next;
        for (const auto& [comps, cnt] : state)
            multistrip_additions(comps, part, [&](const MultiPartition& rho) {
                Int& slot = next[rho];
                slot = checked_add(slot, cnt);
            });
        state.swap(next);
    }
    for (const auto& [comps, cnt] : state) {
        Int& slot = out[frame.assemble(comps)];
        slot = checked_add(slot, cnt);
    }
    return out;
}

SchurExpansion plethystic_mn(const Partition& tau, const Composition& alpha, int r) {
    SchurExpansion out;
    for (const auto& [nu, cnt] : ribbon_tableau_counts(tau, alpha, r))
        out.add(nu, checked_mul(cnt, sgn_r(SkewShape(nu, tau), r)));
    return out;
}

std::vector<LabeledStrip> border_strips(const RibbonTableau& T) {
    std::vector<LabeledStrip> out;
    for (std::size_t j = 1; j < T.chain.size(); ++j) {
        RibbonStrip rs = strip_chain(SkewShape(T.chain[j], T.chain[j - 1]), T.r);
        for (std::size_t k = 1; k < rs.chain.size(); ++k) {
            LabeledStrip strip;
            strip.label = static_cast<int>(j);
            SkewShape step(rs.chain[k], rs.chain[k - 1]);
            strip.boxes = boxes_of(step);
            strip.row = row_number(step);
            strip.column = column_number(step);
            out.push_back(std::move(strip));
        }
    }
    return out;
}

Word column_word(const RibbonTableau& T) {
    std::vector<LabeledStrip> strips = border_strips(T);
    std::map<Box, int> owner;
    for (std::size_t i = 0; i < strips.size(); ++i)
        for (const Box& box : strips[i].boxes) owner[box] = static_cast<int>(i);

    const SkewShape& s = T.shape;
    int maxcol = s.outer().part(0);
    Partition outer_conj = conjugate(s.outer());
    Partition inner_conj = conjugate(s.inner());
    Word w;
    std::vector<bool> seen(strips.size(), false);
    for (int b = 1; b <= maxcol; ++b) {
        for (int a = outer_conj.part(b - 1); a > inner_conj.part(b - 1); --a) {
            int idx = owner.at(Box{a, b});
            if (!seen[idx]) {
                seen[idx] = true;
                w.push_back(strips[idx].label);
            }
        }
    }
    return w;
}

Word RowNumberTableau::word() const {
    Word w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

Composition RowNumberTableau::content() const {
    return sxp::content(word());
}

RowNumberTableau row_number_tableau(const RibbonTableau& T) {
    RowNumberTableau rnt;
    for (const LabeledStrip& strip : border_strips(T)) {
        if (static_cast<int>(rnt.rows.size()) < strip.row) rnt.rows.resize(strip.row);
        rnt.rows[strip.row - 1].push_back(strip.label);
    }
    for (auto& row : rnt.rows) std::sort(row.begin(), row.end());
    return rnt;
}

} // namespace sxp
