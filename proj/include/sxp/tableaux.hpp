#pragma once

#include <vector>

#include "sxp/checked.hpp"
#include "sxp/partition.hpp"

namespace sxp {

using Word = std::vector<int>;

// A filling of a skew shape, weakly increasing along rows (row-standard).
// Semistandardness (strict down columns) is a predicate, not a constructor
// constraint: the shape-content involution genuinely needs row-standard-only
// tableaux.
class SkewTableau {
public:
    SkewTableau() = default;
    SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    // rows()[a] holds the entries of row a+1, leftmost box first.
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int a, int b) const;   // 1-based row a, column b
    int box_count() const { return shape_.size(); }
    bool is_semistandard() const;

    bool operator==(const SkewTableau& o) const {
        return shape_ == o.shape_ && rows_ == o.rows_;
    }
    bool operator!=(const SkewTableau& o) const { return !(*this == o); }
    bool operator<(const SkewTableau& o) const {
        if (!(shape_ == o.shape_)) return shape_ < o.shape_;
        return rows_ < o.rows_;
    }

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

struct MultiTableau {
    std::vector<SkewTableau> components;

    MultiTableau() = default;
    explicit MultiTableau(std::vector<SkewTableau> c) : components(std::move(c)) {}

    int length() const { return static_cast<int>(components.size()); }
    int box_count() const;
    SkewMultiShape shape() const;
    bool is_semistandard() const;

    bool operator==(const MultiTableau& o) const { return components == o.components; }
    bool operator!=(const MultiTableau& o) const { return !(*this == o); }
    bool operator<(const MultiTableau& o) const { return components < o.components; }
};

// Letter multiplicities, length = largest letter (empty for the empty word).
Composition content(const Word& w);
Composition content(const SkewTableau& t);
Composition content(const MultiTableau& t);

// Reading word: rows left to right, starting at the highest numbered row;
// a multitableau concatenates its components' words in order.
Word word(const SkewTableau& t);
Word word(const MultiTableau& t);

// The semistandard mu-tableau whose j-th row is filled with j.
SkewTableau superstandard(const Partition& mu);

// Rebuild the tableau of a given shape whose reading word is w.
SkewTableau tableau_from_word(const SkewShape& shape, const Word& w);
MultiTableau multitableau_from_word(const SkewMultiShape& shape, const Word& w);

// All semistandard fillings of the given shape and exact content, in
// lexicographic order of the reading word. Content entries beyond its length
// are zero; improper content gives the empty list.
std::vector<SkewTableau> enumerate_ssyt(const SkewShape& shape, const Composition& cont);
Int count_ssyt(const SkewShape& shape, const Composition& cont);

// All row-standard fillings (no column condition), same conventions.
std::vector<SkewTableau> enumerate_rsyt(const SkewShape& shape, const Composition& cont);

// Tuples of semistandard tableaux with the given total content.
std::vector<MultiTableau> enumerate_multitableaux(const SkewMultiShape& shape,
                                                  const Composition& total);

SkewMultiShape append(const SkewMultiShape& q, const Partition& mu);
MultiTableau append(const MultiTableau& t, const SkewTableau& last);

// Shape-content involution: for row-standard t of shape lambda/mu whose
// content c makes beta + c a partition alpha, S(t) has shape alpha/beta and
// holds a k in row a for every a in row k of t. Involutive with context
// (mu) on the other side. Throws shape_mismatch if beta + content is not a
// partition.
SkewTableau shape_content_involution(const SkewTableau& t, const Partition& beta);

} // namespace sxp
