#pragma once

#include <utility>
#include <vector>

#include "sxp/checked.hpp"
#include "sxp/tableaux.hpp"

namespace sxp {

// k-pairing of a word: each k is a closing and each k+1 an opening
// parenthesis; matched entries are paired, the rest unpaired. The unpaired
// subword is always k^c (k+1)^d. Positions below are 0-based (diagnostics
// shown to users are 1-based).
struct PairingAnalysis {
    int k = 1;
    std::vector<std::pair<int, int>> paired;       // (position of k+1, position of k)
    std::vector<int> unpaired_k_positions;         // ascending
    std::vector<int> unpaired_k1_positions;        // ascending

    int c() const { return static_cast<int>(unpaired_k_positions.size()); }
    int d() const { return static_cast<int>(unpaired_k1_positions.size()); }
};

PairingAnalysis analyze_pairing(const Word& w, int k);

// Rewrites of the unpaired subword k^c (k+1)^d; unpaired positions are
// preserved. raising: k^{c+1}(k+1)^{d-1} (needs d > 0); lowering:
// k^{c-1}(k+1)^{d+1} (needs c > 0); reflection: k^d (k+1)^c (total).
// raising/lowering throw operator_undefined when their precondition fails.
Word raising(const Word& w, int k);     // E_k
Word lowering(const Word& w, int k);    // F_k
Word reflection(const Word& w, int k);  // S_k

// The same operators on multitableaux, via the reading word and rebuilt in
// place; semistandardness is preserved.
MultiTableau raising(const MultiTableau& t, int k);
MultiTableau lowering(const MultiTableau& t, int k);
MultiTableau reflection(const MultiTableau& t, int k);

// No k-unpaired k+1 for any k.
bool is_latticed(const Word& w);
bool is_latticed(const SkewTableau& t);
bool is_latticed(const MultiTableau& t);

// The sign-reversing involution on U_g SSYT(shape, g.lambda): latticed
// elements are fixed; otherwise act by S_k E_k for the k whose rightmost
// k-unpaired k+1 sits furthest right in the word. Throws not_in_domain if
// the content is not of the form g.lambda for a partition lambda.
struct InvolutionStep {
    MultiTableau image;
    bool fixed = false;
    int k = 0;          // the acting k when not fixed
};

InvolutionStep ls_involution(const MultiTableau& t);

// Recover (lambda, g) with g.lambda = the given content, if possible.
struct DotContent {
    Partition lambda;
    SignedPermutation g;
};
bool recover_dot_content(const Composition& alpha, DotContent& out);

// Generalized Littlewood-Richardson coefficient: the number of latticed
// semistandard multitableaux of the given multishape and content lambda.
// Throws size_mismatch unless |q| = |lambda|.
Int lr_coefficient(const Partition& lambda, const SkewMultiShape& q);

} // namespace sxp
