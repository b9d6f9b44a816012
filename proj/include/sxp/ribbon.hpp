#pragma once

#include <map>
#include <vector>

#include "sxp/abacus.hpp"
#include "sxp/symfunc.hpp"
#include "sxp/tableaux.hpp"

namespace sxp {

// Box coordinates are 1-based (row, column).
using Box = std::pair<int, int>;

std::vector<Box> boxes_of(const SkewShape& s);

// Border strip: rim-connected skew shape with no 2x2 block.
bool is_border_strip(const SkewShape& s);

struct BorderStrip {
    SkewShape shape;

    explicit BorderStrip(SkewShape s);      // throws not_a_strip
    int size() const { return shape.size(); }
};

// Least row / least column met by a nonempty skew shape; height is one less
// than the number of rows met.
int row_number(const SkewShape& s);
int column_number(const SkewShape& s);
int strip_height(const SkewShape& s);

inline int row_number(const BorderStrip& d) { return row_number(d.shape); }
inline int column_number(const BorderStrip& d) { return column_number(d.shape); }
inline int strip_height(const BorderStrip& d) { return strip_height(d.shape); }

// A horizontal r-ribbon strip: a skew shape with a (unique) chain of
// r-border strips whose row numbers weakly decrease.
struct RibbonStrip {
    SkewShape shape;
    int r = 1;
    std::vector<Partition> chain;     // inner = chain.front() ... outer = chain.back()
    std::vector<int> row_numbers;     // one per border strip, weakly decreasing

    int strip_count() const { return static_cast<int>(row_numbers.size()); }
};

// Each quotient component has at most one box per column; equivalently the
// unique-chain and bead-move characterizations hold (cross-checked in tests).
bool is_horizontal_strip(const SkewShape& s, int r);

// The unique border-strip chain, built by replaying the single-step bead
// moves in increasing order of source position. Throws not_a_strip.
RibbonStrip strip_chain(const SkewShape& s, int r);

// An r-ribbon tableau: chain of partitions whose j-th step is a horizontal
// r-ribbon strip of size r * weight_j carrying label j.
struct RibbonTableau {
    SkewShape shape;
    int r = 1;
    Composition weight;
    std::vector<Partition> chain;     // length weight.length() + 1

    bool operator==(const RibbonTableau& o) const {
        return shape == o.shape && r == o.r && weight == o.weight && chain == o.chain;
    }
};

// A border strip of a ribbon tableau with its label and statistics.
struct LabeledStrip {
    std::vector<Box> boxes;
    int label = 0;
    int row = 0;        // least row met
    int column = 0;     // least column met
};

// Decomposition of every ribbon of T into border strips.
std::vector<LabeledStrip> border_strips(const RibbonTableau& T);

// All r-ribbon tableaux of the given shape and weight, sorted by their
// partition chains. Weight entries may be zero (empty strips); a negative
// entry, size mismatch, or non-r-decomposable shape gives an empty list.
std::vector<RibbonTableau> enumerate_ribbon_tableaux(const SkewShape& s,
                                                     const Composition& weight, int r);

// The bijection with semistandard multitableaux on the r-quotient: the boxes
// a ribbon adds to quotient component i get its label.
MultiTableau ribbon_to_multitableau(const RibbonTableau& T);
RibbonTableau multitableau_to_ribbon(const MultiTableau& t, const Partition& tau, int r,
                                     int weight_length);

// Counts |r-RT(nu/tau, alpha)| for every outer shape nu at once.
std::map<Partition, Int> ribbon_tableau_counts(const Partition& tau,
                                               const Composition& alpha, int r);

// s_tau (h_alpha o p_r) = sum over nu of |r-RT(nu/tau, alpha)| sgn_r(nu/tau) s_nu.
SchurExpansion plethystic_mn(const Partition& tau, const Composition& alpha, int r);

// Column word: scan columns left to right, bottom to top, recording each
// border strip's label the first time it is seen (in its leftmost column).
Word column_word(const RibbonTableau& T);

// Row-standard filling with an i in row a for each border strip of row
// number a in the ribbon labelled i. Shape is a composition, possibly with
// empty rows.
struct RowNumberTableau {
    std::vector<std::vector<int>> rows;   // rows[a-1] sorted ascending

    Word word() const;                    // highest numbered row first
    Composition content() const;
};

RowNumberTableau row_number_tableau(const RibbonTableau& T);

} // namespace sxp
