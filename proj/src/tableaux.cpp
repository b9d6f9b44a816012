#include "sxp/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sxp {

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw shape_mismatch("tableau must have one entry list per row of its shape");
    for (int a = 1; a <= shape_.rows(); ++a) {
        const auto& row = rows_[a - 1];
        int width = shape_.row_end(a) - shape_.row_begin(a) + 1;
        if (static_cast<int>(row.size()) != width)
            throw shape_mismatch("row width does not match shape");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1) throw error("tableau entries must be positive");
            if (j > 0 && row[j] < row[j - 1])
                throw error("tableau rows must weakly increase");
        }
    }
}

int SkewTableau::entry(int a, int b) const {
    if (a < 1 || a > shape_.rows()) return 0;
    if (b < shape_.row_begin(a) || b > shape_.row_end(a)) return 0;
    return rows_[a - 1][b - shape_.row_begin(a)];
}

bool SkewTableau::is_semistandard() const {
    for (int a = 2; a <= shape_.rows(); ++a) {
        int lo = std::max(shape_.row_begin(a), shape_.row_begin(a - 1));
        int hi = std::min(shape_.row_end(a), shape_.row_end(a - 1));
        for (int b = lo; b <= hi; ++b)
            if (entry(a - 1, b) >= entry(a, b)) return false;
    }
    return true;
}

int MultiTableau::box_count() const {
    int n = 0;
    for (const auto& c : components) n += c.box_count();
    return n;
}

SkewMultiShape MultiTableau::shape() const {
    std::vector<SkewShape> shapes;
    shapes.reserve(components.size());
    for (const auto& c : components) shapes.push_back(c.shape());
    return SkewMultiShape(std::move(shapes));
}

bool MultiTableau::is_semistandard() const {
    return std::all_of(components.begin(), components.end(),
                       [](const SkewTableau& t) { return t.is_semistandard(); });
}

Composition content(const Word& w) {
    int maxletter = 0;
    for (int x : w) maxletter = std::max(maxletter, x);
    std::vector<int> c(maxletter, 0);
    for (int x : w) c[x - 1] += 1;
    return Composition(std::move(c));
}

Composition content(const SkewTableau& t) { return content(word(t)); }
Composition content(const MultiTableau& t) { return content(word(t)); }

Word word(const SkewTableau& t) {
    Word w;
    w.reserve(t.box_count());
    for (int a = t.shape().rows(); a >= 1; --a)
        for (int x : t.rows()[a - 1]) w.push_back(x);
    return w;
}

Word word(const MultiTableau& t) {
    Word w;
    w.reserve(t.box_count());
    for (const auto& c : t.components) {
        Word wc = word(c);
        w.insert(w.end(), wc.begin(), wc.end());
    }
    return w;
}

SkewTableau superstandard(const Partition& mu) {
    std::vector<std::vector<int>> rows(mu.rows());
    for (int a = 1; a <= mu.rows(); ++a) rows[a - 1].assign(mu.part(a - 1), a);
    return SkewTableau(skew(mu), std::move(rows));
}

SkewTableau tableau_from_word(const SkewShape& shape, const Word& w) {
    if (static_cast<int>(w.size()) != shape.size())
        throw shape_mismatch("word length must match shape size");
    std::vector<std::vector<int>> rows(shape.rows());
    std::size_t pos = 0;
    for (int a = shape.rows(); a >= 1; --a) {
        int width = shape.row_end(a) - shape.row_begin(a) + 1;
        rows[a - 1].assign(w.begin() + pos, w.begin() + pos + width);
        pos += width;
    }
    return SkewTableau(shape, std::move(rows));
}

MultiTableau multitableau_from_word(const SkewMultiShape& shape, const Word& w) {
    if (static_cast<int>(w.size()) != shape.size())
        throw shape_mismatch("word length must match total shape size");
    std::vector<SkewTableau> comps;
    comps.reserve(shape.components.size());
    std::size_t pos = 0;
    for (const SkewShape& s : shape.components) {
        Word part(w.begin() + pos, w.begin() + pos + s.size());
        pos += s.size();
        comps.push_back(tableau_from_word(s, part));
    }
    return MultiTableau(std::move(comps));
}

namespace {

// Backtracking filler over the reading order (bottom row first, left to
// right), trying letters in increasing order so that completed tableaux come
// out in lexicographic order of their words.
struct Filler {
    const SkewShape& shape;
    std::vector<int> budget;       // remaining multiplicity per letter
    int remaining_boxes;
    bool column_strict;
    std::vector<std::vector<int>> grid;   // grid[a-1][b-1], 0 = unfilled/no box
    std::vector<std::pair<int, int>> order;
    std::function<void(const SkewTableau&)> emit;

    Filler(const SkewShape& s, std::vector<int> b, bool strict,
           std::function<void(const SkewTableau&)> e)
        : shape(s), budget(std::move(b)), remaining_boxes(s.size()),
          column_strict(strict), emit(std::move(e)) {
        int cols = shape.outer().part(0);
        grid.assign(shape.rows(), std::vector<int>(cols, 0));
        for (int a = shape.rows(); a >= 1; --a)
            for (int b2 = shape.row_begin(a); b2 <= shape.row_end(a); ++b2)
                order.emplace_back(a, b2);
    }

    int total_budget() const {
        return std::accumulate(budget.begin(), budget.end(), 0);
    }

    void emit_current() {
        std::vector<std::vector<int>> rows(shape.rows());
        for (int a = 1; a <= shape.rows(); ++a)
            for (int b = shape.row_begin(a); b <= shape.row_end(a); ++b)
                rows[a - 1].push_back(grid[a - 1][b - 1]);
        emit(SkewTableau(shape, std::move(rows)));
    }

    void run(std::size_t idx) {
        if (idx == order.size()) {
            emit_current();
            return;
        }
        auto [a, b] = order[idx];
        int lo = 1;
        if (b > shape.row_begin(a)) lo = std::max(lo, grid[a - 1][b - 2]);
        int hi = static_cast<int>(budget.size());
        if (column_strict && a < shape.rows() && b >= shape.row_begin(a + 1) &&
            b <= shape.row_end(a + 1))
            hi = std::min(hi, grid[a][b - 1] - 1);
        for (int e = lo; e <= hi; ++e) {
            if (budget[e - 1] <= 0) continue;
            budget[e - 1] -= 1;
            grid[a - 1][b - 1] = e;
            run(idx + 1);
            grid[a - 1][b - 1] = 0;
            budget[e - 1] += 1;
        }
    }
};

std::vector<SkewTableau> enumerate_fillings(const SkewShape& shape, const Composition& cont,
                                            bool column_strict) {
    std::vector<SkewTableau> out;
    if (!cont.is_proper()) return out;
    if (cont.sum() != shape.size()) return out;
    Filler f(shape, cont.entries, column_strict,
             [&out](const SkewTableau& t) { out.push_back(t); });
    f.run(0);
    return out;
}

} // namespace

std::vector<SkewTableau> enumerate_ssyt(const SkewShape& shape, const Composition& cont) {
    return enumerate_fillings(shape, cont, true);
}

Int count_ssyt(const SkewShape& shape, const Composition& cont) {
    if (!cont.is_proper() || cont.sum() != shape.size()) return 0;
    Int n = 0;
    Filler f(shape, cont.entries, true, [&n](const SkewTableau&) { ++n; });
    f.run(0);
    return n;
}

std::vector<SkewTableau> enumerate_rsyt(const SkewShape& shape, const Composition& cont) {
    return enumerate_fillings(shape, cont, false);
}

std::vector<MultiTableau> enumerate_multitableaux(const SkewMultiShape& shape,
                                                  const Composition& total) {
    std::vector<MultiTableau> out;
    if (!total.is_proper()) return out;
    if (total.sum() != shape.size()) return out;

    int m = shape.length();
    std::vector<SkewTableau> current(m);
    std::vector<int> budget = total.entries;

    // Component by component: fillings of component i draw letters from the
    // shared budget, which the recursion keeps in sync. The budget total
    // always equals the boxes still to fill, so the final state is exact.
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            out.push_back(MultiTableau(current));
            return;
        }
        Filler f(shape.components[i], budget, true, [&](const SkewTableau& t) {
            current[i] = t;
            std::vector<int> saved = budget;
            Composition c = content(t);
            for (int k = 0; k < c.length(); ++k) budget[k] -= c.entries[k];
            rec(i + 1);
            budget = saved;
        });
        f.run(0);
    };
    rec(0);
    return out;
}

SkewMultiShape append(const SkewMultiShape& q, const Partition& mu) {
    SkewMultiShape out = q;
    out.components.push_back(skew(mu));
    return out;
}

MultiTableau append(const MultiTableau& t, const SkewTableau& last) {
    MultiTableau out = t;
    out.components.push_back(last);
    return out;
}

SkewTableau shape_content_involution(const SkewTableau& t, const Partition& beta) {
    Composition c = content(t);
    int alen = std::max(c.length(), beta.rows());
    std::vector<int> alpha_parts(alen);
    for (int k = 0; k < alen; ++k) alpha_parts[k] = beta.part(k) + c.entry(k);
    for (int k = 0; k + 1 < alen; ++k)
        if (alpha_parts[k] < alpha_parts[k + 1])
            throw shape_mismatch("beta + content is not a partition");
    Partition alpha(alpha_parts);
    if (!alpha.contains(beta)) throw shape_mismatch("beta not contained in beta + content");

    SkewShape target(alpha, beta);
    std::vector<std::vector<int>> rows(target.rows());
    // A k in row a of the image for every a in row k of t; iterating k in
    // increasing order keeps each image row weakly increasing.
    for (int k = 1; k <= t.shape().rows(); ++k)
        for (int a : t.rows()[k - 1]) rows[a - 1].push_back(k);
    return SkewTableau(target, std::move(rows));
}

} // namespace sxp
