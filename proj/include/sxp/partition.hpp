#pragma once

#include <functional>
#include <vector>

#include "sxp/errors.hpp"

namespace sxp {

// A partition is a weakly decreasing sequence of positive integers, stored
// without trailing zeros so that equality is canonical.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const;                       // number of boxes
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // part(i) is 0-based and returns 0 past the last row, so containment and
    // column counts can be written without explicit padding.
    int part(int i) const { return (i >= 0 && i < rows()) ? parts_[i] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    bool contains(const Partition& inner) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // Lexicographic; used for map keys. Output ordering is handled separately.
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

// True iff every prefix sum of p is <= the corresponding prefix sum of q.
// Throws size_mismatch unless |p| = |q|.
bool dominance_leq(const Partition& p, const Partition& q);

// Compositions keep their length and any zero (or, transiently, negative)
// entries: they carry positional data, unlike partitions.
struct Composition {
    std::vector<int> entries;

    Composition() = default;
    explicit Composition(std::vector<int> e) : entries(std::move(e)) {}

    int length() const { return static_cast<int>(entries.size()); }
    int sum() const;
    bool is_proper() const;                 // all entries >= 0
    int entry(int i) const { return (i >= 0 && i < length()) ? entries[i] : 0; }

    bool operator==(const Composition& o) const { return entries == o.entries; }
    bool operator!=(const Composition& o) const { return entries != o.entries; }

    // The partition obtained by padding with zeros / truncating to len.
    static Composition of(const Partition& p, int len);
};

struct SkewShape {
    SkewShape() = default;
    SkewShape(Partition outer_, Partition inner_);    // throws not_nested

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }
    int rows() const { return outer_.rows(); }
    // Row a (1-based) occupies columns inner.part(a-1)+1 .. outer.part(a-1).
    int row_begin(int a) const { return inner_.part(a - 1) + 1; }
    int row_end(int a) const { return outer_.part(a - 1); }

    bool operator==(const SkewShape& o) const {
        return outer_ == o.outer_ && inner_ == o.inner_;
    }
    bool operator!=(const SkewShape& o) const { return !(*this == o); }
    bool operator<(const SkewShape& o) const {
        if (outer_ != o.outer_) return outer_ < o.outer_;
        return inner_ < o.inner_;
    }

private:
    Partition outer_;
    Partition inner_;
};

inline SkewShape skew(Partition outer, Partition inner) {
    return SkewShape(std::move(outer), std::move(inner));
}
inline SkewShape skew(Partition outer) { return SkewShape(std::move(outer), Partition()); }

struct SkewMultiShape {
    std::vector<SkewShape> components;

    SkewMultiShape() = default;
    explicit SkewMultiShape(std::vector<SkewShape> c) : components(std::move(c)) {}

    int length() const { return static_cast<int>(components.size()); }
    int size() const;

    bool operator==(const SkewMultiShape& o) const { return components == o.components; }
    bool operator!=(const SkewMultiShape& o) const { return !(*this == o); }
};

// A permutation g of {0,...,l-1} together with its sign; images[i] = g(i).
struct SignedPermutation {
    std::vector<int> images;
    int sign = 1;

    static SignedPermutation identity(int l);
    int degree() const { return static_cast<int>(images.size()); }
    bool is_identity() const;
};

// (g h)(i) = g(h(i)).
SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h);

// The dot action g.a = g(a + rho) - rho with rho = (l-1,...,1,0), where the
// symmetric group permutes places. Throws length_mismatch.
Composition dot_action(const SignedPermutation& g, const Composition& a);

// All l! permutations, ordered lexicographically by image sequence.
std::vector<SignedPermutation> all_permutations(int l);

// The permutations g with g.lambda - mu componentwise nonnegative (lambda
// and mu padded to length l), found by placing the distinct values of
// lambda + rho position by position instead of scanning all of Sym_l. Calls
// fn(g, g.lambda - mu).
void for_each_jacobi_trudi_term(
    const Partition& lambda, const Partition& mu, int l,
    const std::function<void(const SignedPermutation&, const Composition&)>& fn);

// Enumeration helpers. partitions_of lists partitions of n in descending
// lexicographic order, a linear extension of dominance from the top.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_of_containing(int n, const Partition& inner);
std::vector<Partition> subpartitions_of_size(const Partition& outer, int m);

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace sxp
