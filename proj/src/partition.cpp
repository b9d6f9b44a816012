#include "sxp/partition.hpp"

#include <algorithm>
#include <numeric>

namespace sxp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw error("invalid partition: parts must be weakly decreasing and positive");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 0; i < inner.rows(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    if (!p.empty()) {
        cols.assign(p.part(0), 0);
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.part(i); ++j) cols[j] += 1;
    }
    return Partition(std::move(cols));
}

bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw size_mismatch("dominance_leq requires |p| = |q|");
    int sp = 0, sq = 0;
    int rows = std::max(p.rows(), q.rows());
    for (int i = 0; i < rows; ++i) {
        sp += p.part(i);
        sq += q.part(i);
        if (sp > sq) return false;
    }
    return true;
}

int Composition::sum() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

bool Composition::is_proper() const {
    return std::all_of(entries.begin(), entries.end(), [](int e) { return e >= 0; });
}

Composition Composition::of(const Partition& p, int len) {
    std::vector<int> e(len, 0);
    for (int i = 0; i < len && i < p.rows(); ++i) e[i] = p.part(i);
    return Composition(std::move(e));
}

SkewShape::SkewShape(Partition outer_arg, Partition inner_arg)
    : outer_(std::move(outer_arg)), inner_(std::move(inner_arg)) {
    if (!outer_.contains(inner_))
        throw not_nested("skew shape requires inner contained in outer");
}

int SkewMultiShape::size() const {
    int n = 0;
    for (const SkewShape& c : components) n += c.size();
    return n;
}

SignedPermutation SignedPermutation::identity(int l) {
    SignedPermutation g;
    g.images.resize(l);
    for (int i = 0; i < l; ++i) g.images[i] = i;
    g.sign = 1;
    return g;
}

bool SignedPermutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images[i] != i) return false;
    return true;
}

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
    if (g.degree() != h.degree()) throw length_mismatch("compose: degree mismatch");
    SignedPermutation gh;
    gh.images.resize(g.degree());
    for (int i = 0; i < g.degree(); ++i) gh.images[i] = g.images[h.images[i]];
    gh.sign = g.sign * h.sign;
    return gh;
}

Composition dot_action(const SignedPermutation& g, const Composition& a) {
    int l = g.degree();
    if (a.length() != l) throw length_mismatch("dot_action: composition length must equal permutation degree");
    std::vector<int> out(l, 0);
    // With rho_i = l-1-i (0-based), entry i lands at g(i) as a_i + g(i) - i.
    for (int i = 0; i < l; ++i) out[g.images[i]] = a.entries[i] + g.images[i] - i;
    return Composition(std::move(out));
}

namespace {

int permutation_sign(const std::vector<int>& images) {
    int inv = 0;
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (images[i] > images[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

} // namespace

std::vector<SignedPermutation> all_permutations(int l) {
    std::vector<int> images(l);
    for (int i = 0; i < l; ++i) images[i] = i;
    std::vector<SignedPermutation> out;
    do {
        SignedPermutation g;
        g.images = images;
        g.sign = permutation_sign(images);
        out.push_back(std::move(g));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

void for_each_jacobi_trudi_term(
    const Partition& lambda, const Partition& mu, int l,
    const std::function<void(const SignedPermutation&, const Composition&)>& fn) {
    // values of lambda + rho, strictly decreasing
    std::vector<int> values(l);
    for (int i = 0; i < l; ++i) values[i] = lambda.part(i) + (l - 1 - i);
    std::vector<int> images(l, -1);   // images[j]: position receiving values[j]
    std::vector<bool> used(l, false);
    std::vector<int> alpha(l, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == l) {
            SignedPermutation g;
            g.images = images;
            int inv = 0;
            for (int i = 0; i < l; ++i)
                for (int j = i + 1; j < l; ++j)
                    if (images[i] > images[j]) ++inv;
            g.sign = inv % 2 == 0 ? 1 : -1;
            fn(g, Composition(alpha));
            return;
        }
        int rho = l - 1 - pos;
        for (int j = 0; j < l; ++j) {
            if (used[j]) continue;
            int entry = values[j] - rho - mu.part(pos);
            if (entry < 0) continue;
            used[j] = true;
            images[j] = pos;
            alpha[pos] = entry;
            rec(pos + 1);
            used[j] = false;
            images[j] = -1;
        }
    };
    rec(0);
}

namespace {

void partitions_rec(int n, int maxpart, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        acc.push_back(k);
        partitions_rec(n - k, k, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> acc;
    partitions_rec(n, n == 0 ? 1 : n, acc, out);
    return out;
}

std::vector<Partition> partitions_of_containing(int n, const Partition& inner) {
    std::vector<Partition> out;
    if (n < inner.size()) return out;
    // Suffix sums of inner: boxes that still have to be covered below row i.
    std::vector<int> suffix(inner.rows() + 1, 0);
    for (int i = inner.rows() - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + inner.part(i);
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int row, int budget) {
        int lo = inner.part(row);
        if (budget == 0) {
            if (lo == 0) out.push_back(Partition(acc));
            return;
        }
        if (lo == 0) lo = 1;
        int hi = (row == 0) ? budget : std::min(acc[row - 1], budget);
        int below = (row + 1 < static_cast<int>(suffix.size())) ? suffix[row + 1] : 0;
        for (int k = hi; k >= lo; --k) {
            if (budget - k < below) continue;
            acc.push_back(k);
            rec(row + 1, budget - k);
            acc.pop_back();
        }
    };
    rec(0, n);
    return out;
}

std::vector<Partition> subpartitions_of_size(const Partition& outer, int m) {
    std::vector<Partition> out;
    if (m < 0 || m > outer.size()) return out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int row, int budget) {
        if (budget == 0) {
            out.push_back(Partition(acc));
            return;
        }
        if (row >= outer.rows()) return;
        int hi = std::min(outer.part(row), budget);
        if (row > 0) hi = std::min(hi, acc[row - 1]);
        for (int k = hi; k >= 1; --k) {
            acc.push_back(k);
            rec(row + 1, budget - k);
            acc.pop_back();
        }
    };
    rec(0, m);
    return out;
}

} // namespace sxp
