#include "sxp/coplactic.hpp"

#include <algorithm>

namespace sxp {

PairingAnalysis analyze_pairing(const Word& w, int k) {
    PairingAnalysis out;
    out.k = k;
    std::vector<int> open;   // positions of so-far-unmatched (k+1)s
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] == k + 1) {
            open.push_back(i);
        } else if (w[i] == k) {
            if (!open.empty()) {
                out.paired.emplace_back(open.back(), i);
                open.pop_back();
            } else {
                out.unpaired_k_positions.push_back(i);
            }
        }
    }
    out.unpaired_k1_positions = std::move(open);
    std::sort(out.unpaired_k1_positions.begin(), out.unpaired_k1_positions.end());
    return out;
}

namespace {

// Overwrite the unpaired positions with newc ks followed by new (k+1)s.
Word rewrite_unpaired(const Word& w, const PairingAnalysis& p, int newc) {
    std::vector<int> slots = p.unpaired_k_positions;
    slots.insert(slots.end(), p.unpaired_k1_positions.begin(), p.unpaired_k1_positions.end());
    std::sort(slots.begin(), slots.end());
    Word out = w;
    for (int i = 0; i < static_cast<int>(slots.size()); ++i)
        out[slots[i]] = (i < newc) ? p.k : p.k + 1;
    return out;
}

} // namespace

Word raising(const Word& w, int k) {
    PairingAnalysis p = analyze_pairing(w, k);
    if (p.d() == 0) throw operator_undefined("raising needs an unpaired k+1");
    return rewrite_unpaired(w, p, p.c() + 1);
}

Word lowering(const Word& w, int k) {
    PairingAnalysis p = analyze_pairing(w, k);
    if (p.c() == 0) throw operator_undefined("lowering needs an unpaired k");
    return rewrite_unpaired(w, p, p.c() - 1);
}

Word reflection(const Word& w, int k) {
    PairingAnalysis p = analyze_pairing(w, k);
    return rewrite_unpaired(w, p, p.d());
}

namespace {

MultiTableau lift(const MultiTableau& t, const Word& w) {
    MultiTableau out = multitableau_from_word(t.shape(), w);
    if (!out.is_semistandard())
        throw error("coplactic operator produced a non-semistandard tableau");
    return out;
}

} // namespace

MultiTableau raising(const MultiTableau& t, int k) { return lift(t, raising(word(t), k)); }
MultiTableau lowering(const MultiTableau& t, int k) { return lift(t, lowering(word(t), k)); }
MultiTableau reflection(const MultiTableau& t, int k) { return lift(t, reflection(word(t), k)); }

bool is_latticed(const Word& w) {
    int maxletter = 0;
    for (int x : w) maxletter = std::max(maxletter, x);
    for (int k = 1; k < maxletter; ++k)
        if (analyze_pairing(w, k).d() > 0) return false;
    return true;
}

bool is_latticed(const SkewTableau& t) { return is_latticed(word(t)); }
bool is_latticed(const MultiTableau& t) { return is_latticed(word(t)); }

bool recover_dot_content(const Composition& alpha, DotContent& out) {
    int l = alpha.length();
    // v = alpha + rho must be a rearrangement of a strictly decreasing
    // nonnegative vector w; then lambda = w - rho and g sends sorted to v.
    std::vector<int> v(l);
    for (int i = 0; i < l; ++i) v[i] = alpha.entries[i] + (l - 1 - i);
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (int i = 0; i + 1 < l; ++i)
        if (sorted[i] == sorted[i + 1]) return false;
    std::vector<int> lambda_parts(l);
    for (int i = 0; i < l; ++i) {
        lambda_parts[i] = sorted[i] - (l - 1 - i);
        if (lambda_parts[i] < 1) return false;   // lambda must have exactly l parts
        if (i > 0 && lambda_parts[i] > lambda_parts[i - 1]) return false;
    }
    // g places sorted[i] at the position where v holds that value.
    SignedPermutation g = SignedPermutation::identity(l);
    for (int i = 0; i < l; ++i) {
        auto it = std::find(v.begin(), v.end(), sorted[i]);
        g.images[i] = static_cast<int>(it - v.begin());
    }
    int inv = 0;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            if (g.images[i] > g.images[j]) ++inv;
    g.sign = inv % 2 == 0 ? 1 : -1;
    out.lambda = Partition(lambda_parts);
    out.g = g;
    return true;
}

InvolutionStep ls_involution(const MultiTableau& t) {
    Word w = word(t);
    int maxletter = 0;
    for (int x : w) maxletter = std::max(maxletter, x);

    DotContent dc;
    if (!recover_dot_content(content(w), dc) && maxletter > 0)
        throw not_in_domain("content is not g.lambda for any partition lambda");

    // Pick the k whose rightmost k-unpaired k+1 is globally rightmost. A
    // reflection-raising step only rewrites positions up to that point and
    // unpaired status of a position depends only on the suffix from it, so
    // the same k is selected again on the image: the map is an involution.
    int best_k = 0, best_pos = -1;
    for (int k = 1; k < maxletter; ++k) {
        PairingAnalysis p = analyze_pairing(w, k);
        if (p.d() > 0 && p.unpaired_k1_positions.back() > best_pos) {
            best_pos = p.unpaired_k1_positions.back();
            best_k = k;
        }
    }
    InvolutionStep out;
    if (best_k == 0) {
        out.image = t;
        out.fixed = true;
        return out;
    }
    out.image = reflection(raising(t, best_k), best_k);
    out.fixed = false;
    out.k = best_k;
    return out;
}

Int lr_coefficient(const Partition& lambda, const SkewMultiShape& q) {
    if (lambda.size() != q.size())
        throw size_mismatch("lr_coefficient requires |q| = |lambda|");
    Composition cont = Composition::of(lambda, lambda.rows());
    Int n = 0;
    for (const MultiTableau& t : enumerate_multitableaux(q, cont))
        if (is_latticed(t)) ++n;
    return n;
}

} // namespace sxp
