#pragma once

#include <map>

#include "sxp/checked.hpp"
#include "sxp/partition.hpp"

namespace sxp {

// A homogeneous integer combination of Schur functions: sparse, no zero
// coefficients, all index partitions of equal size.
class SchurExpansion {
public:
    SchurExpansion() = default;

    void add(const Partition& p, Int c);
    Int coefficient(const Partition& p) const;
    const std::map<Partition, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Degree of the homogeneous expansion; -1 when zero.
    int degree() const;

    bool operator==(const SchurExpansion& o) const { return terms_ == o.terms_; }
    bool operator!=(const SchurExpansion& o) const { return terms_ != o.terms_; }

private:
    std::map<Partition, Int> terms_;
};

// Coefficient-of-x^nu view of a homogeneous symmetric function, indexed by
// the dominant (partition) exponents only.
struct DominantVector {
    int degree = 0;
    std::map<Partition, Int> entries;

    Int entry(const Partition& p) const;
};

// Number of semistandard fillings of shape with the given content. Cached
// globally under a sorted-content key (Kostka numbers are symmetric in the
// content); safe for concurrent use.
Int kostka(const SkewShape& shape, const Composition& content);
Int kostka(const Partition& shape, const Composition& content);

DominantVector schur_to_dominant(const SchurExpansion& e);

// Inverse of schur_to_dominant by back-substitution along descending
// lexicographic order (a linear extension of dominance, along which the
// Kostka matrix is unitriangular). Throws not_unitriangular_consistent if a
// nonzero residue survives, which signals a non-symmetric input.
SchurExpansion dominant_to_schur(const DominantVector& v);

// Brute-force oracle for s_tau * (s_{lambda/mu} o p_r), computed entirely in
// the dominant-monomial projection: the coefficient of x^gamma in
// s_{lambda/mu} o p_r is |SSYT(lambda/mu, gamma/r)| when r divides gamma
// componentwise and 0 otherwise; the product is a convolution over exponent
// splits. Shares no code with the abacus/ribbon/coplactic pipeline.
SchurExpansion oracle_product_plethysm(const Partition& tau, const SkewShape& s, int r);

// Sum of products of matching coefficients (Schur functions orthonormal).
// Throws degree_mismatch on nonzero expansions of different degrees.
Int inner_product(const SchurExpansion& a, const SchurExpansion& b);

// Product via the dominant-projection convolution.
SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b);

} // namespace sxp
