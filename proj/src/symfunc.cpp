#include "sxp/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <unordered_map>

namespace sxp {

void SchurExpansion::add(const Partition& p, Int c) {
    if (c == 0) return;
    if (!terms_.empty() && terms_.begin()->first.size() != p.size())
        throw degree_mismatch("expansion must stay homogeneous");
    auto [it, inserted] = terms_.emplace(p, 0);
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

Int SchurExpansion::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

int SchurExpansion::degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.size();
}

Int DominantVector::entry(const Partition& p) const {
    auto it = entries.find(p);
    return it == entries.end() ? 0 : it->second;
}

namespace {

// Kostka numbers by the horizontal-strip recurrence: add the content parts
// one at a time as horizontal strips inside the outer bound. Independent of
// the tableau enumeration code by design.
struct KostkaCache {
    std::mutex mu;
    std::unordered_map<std::vector<int>, Int, VectorHash> map;
};

KostkaCache& kostka_cache() {
    static KostkaCache cache;
    return cache;
}

std::vector<int> cache_key(const Partition& outer, const Partition& inner,
                           const std::vector<int>& content_sorted) {
    std::vector<int> key;
    key.reserve(outer.rows() + inner.rows() + content_sorted.size() + 2);
    key.insert(key.end(), outer.parts().begin(), outer.parts().end());
    key.push_back(-1);
    key.insert(key.end(), inner.parts().begin(), inner.parts().end());
    key.push_back(-1);
    key.insert(key.end(), content_sorted.begin(), content_sorted.end());
    return key;
}

// All ways to add a horizontal strip of `size` boxes to sigma staying inside
// bound: row k of the result lies in [sigma_k, min(bound_k, sigma_{k-1})].
void horizontal_strip_additions(const Partition& sigma, const Partition& bound, int size,
                                const std::function<void(const Partition&)>& emit) {
    if (size < 0) return;
    int maxrows = std::min(bound.rows(), sigma.rows() + 1);
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int row, int budget) {
        if (row > maxrows) {
            if (budget == 0) emit(Partition(acc));
            return;
        }
        int lo = sigma.part(row - 1);
        int hi = std::min(bound.part(row - 1), lo + budget);
        if (row > 1) hi = std::min(hi, sigma.part(row - 2));
        for (int k = hi; k >= lo; --k) {
            acc.push_back(k);
            rec(row + 1, budget - (k - lo));
            acc.pop_back();
        }
    };
    rec(1, size);
}

} // namespace

Int kostka(const SkewShape& shape, const Composition& content) {
    if (!content.is_proper()) return 0;
    if (content.sum() != shape.size()) return 0;
    std::vector<int> sorted = content.entries;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();

    std::vector<int> key = cache_key(shape.outer(), shape.inner(), sorted);
    {
        std::lock_guard<std::mutex> lock(kostka_cache().mu);
        auto it = kostka_cache().map.find(key);
        if (it != kostka_cache().map.end()) return it->second;
    }

    std::map<Partition, Int> state;
    state[shape.inner()] = 1;
    for (int part : sorted) {
        std::map<Partition, Int> next;
        for (const auto& [sigma, cnt] : state) {
            horizontal_strip_additions(sigma, shape.outer(), part,
                                       [&](const Partition& rho) {
                                           Int& slot = next[rho];
                                           slot = checked_add(slot, cnt);
                                       });
        }
        state.swap(next);
    }
    Int result = 0;
    auto it = state.find(shape.outer());
    if (it != state.end()) result = it->second;

    std::lock_guard<std::mutex> lock(kostka_cache().mu);
    kostka_cache().map.emplace(std::move(key), result);
    return result;
}

Int kostka(const Partition& shape, const Composition& content) {
    return kostka(skew(shape), content);
}

DominantVector schur_to_dominant(const SchurExpansion& e) {
    DominantVector v;
    v.degree = std::max(0, e.degree());
    for (const Partition& mu : partitions_of(v.degree)) {
        Int total = 0;
        for (const auto& [lambda, c] : e.terms())
            total = checked_add(total, checked_mul(c, kostka(lambda, Composition(mu.parts()))));
        if (total != 0) v.entries[mu] = total;
    }
    return v;
}

SchurExpansion dominant_to_schur(const DominantVector& v) {
    SchurExpansion out;
    if (v.entries.empty()) return out;
    std::map<Partition, Int> residual = v.entries;
    for (const Partition& lambda : partitions_of(v.degree)) {
        auto it = residual.find(lambda);
        if (it == residual.end() || it->second == 0) continue;
        Int c = it->second;
        out.add(lambda, c);
        for (const Partition& mu : partitions_of(v.degree)) {
            if (!dominance_leq(mu, lambda)) continue;
            Int k = kostka(lambda, Composition(mu.parts()));
            if (k == 0) continue;
            Int& slot = residual[mu];
            slot = checked_add(slot, checked_mul(-c, k));
        }
    }
    for (const auto& [p, r] : residual)
        if (r != 0)
            throw not_unitriangular_consistent("dominant vector is not a Schur-positive-basis image");
    return out;
}

namespace {

// Enumerate weak compositions beta of `total` over positions 0..rows-1 with
// beta_i <= cap_i, calling fn(beta).
void bounded_compositions(int total, const std::vector<int>& caps,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> beta(caps.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (i == caps.size()) {
            if (rem == 0) fn(beta);
            return;
        }
        int hi = std::min(caps[i], rem);
        for (int x = 0; x <= hi; ++x) {
            beta[i] = x;
            rec(i + 1, rem - x);
        }
        beta[i] = 0;
    };
    rec(0, total);
}

Composition sorted_content(const std::vector<int>& v) {
    std::vector<int> s = v;
    std::sort(s.begin(), s.end(), std::greater<int>());
    while (!s.empty() && s.back() == 0) s.pop_back();
    return Composition(std::move(s));
}

} // namespace

SchurExpansion oracle_product_plethysm(const Partition& tau, const SkewShape& s, int r) {
    int degree = tau.size() + r * s.size();
    DominantVector v;
    v.degree = degree;
    SkewShape tau_shape = skew(tau);
    for (const Partition& nu : partitions_of(degree)) {
        Int total = 0;
        std::vector<int> caps = nu.parts();
        bounded_compositions(tau.size(), caps, [&](const std::vector<int>& beta) {
            // gamma = nu - beta must be divisible by r componentwise.
            std::vector<int> delta(caps.size());
            for (std::size_t i = 0; i < caps.size(); ++i) {
                int g = caps[i] - beta[i];
                if (g % r != 0) return;
                delta[i] = g / r;
            }
            Int kb = kostka(tau_shape, sorted_content(beta));
            if (kb == 0) return;
            Int kp = kostka(s, sorted_content(delta));
            if (kp == 0) return;
            total = checked_add(total, checked_mul(kb, kp));
        });
        if (total != 0) v.entries[nu] = total;
    }
    return dominant_to_schur(v);
}

Int inner_product(const SchurExpansion& a, const SchurExpansion& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.degree() != b.degree())
        throw degree_mismatch("inner product of expansions of different degrees");
    Int total = 0;
    for (const auto& [p, c] : a.terms())
        total = checked_add(total, checked_mul(c, b.coefficient(p)));
    return total;
}

SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b) {
    if (a.is_zero() || b.is_zero()) return SchurExpansion();
    DominantVector da = schur_to_dominant(a);
    DominantVector db = schur_to_dominant(b);
    DominantVector v;
    v.degree = da.degree + db.degree;
    for (const Partition& nu : partitions_of(v.degree)) {
        Int total = 0;
        std::vector<int> caps = nu.parts();
        bounded_compositions(da.degree, caps, [&](const std::vector<int>& x) {
            Int ca = da.entry(Partition(sorted_content(x).entries));
            if (ca == 0) return;
            std::vector<int> y(caps.size());
            for (std::size_t i = 0; i < caps.size(); ++i) y[i] = caps[i] - x[i];
            Int cb = db.entry(Partition(sorted_content(y).entries));
            if (cb == 0) return;
            total = checked_add(total, checked_mul(ca, cb));
        });
        if (total != 0) v.entries[nu] = total;
    }
    return dominant_to_schur(v);
}

} // namespace sxp
