#pragma once

// Shared worked-example data used across the suites: the four multitableaux
// of quotient shape ((1), (2), (2,2)/(1)) and weight (3,3), their images
// under the involution, and the three-component example tableau with its
// 2-unpaired entries.

#include "sxp/tableaux.hpp"

namespace fixtures {

using namespace sxp;

inline Partition P(std::vector<int> v) { return Partition(std::move(v)); }

inline SkewTableau T(std::vector<int> outer, std::vector<int> inner,
                     std::vector<std::vector<int>> rows) {
    return SkewTableau(SkewShape(P(std::move(outer)), P(std::move(inner))), std::move(rows));
}

// Quotient of (6,5,5,5,2)/(3,2) at r = 3.
inline SkewMultiShape example_multishape() {
    return SkewMultiShape({SkewShape(P({1}), P({})), SkewShape(P({2}), P({})),
                           SkewShape(P({2, 2}), P({1}))});
}

// Weight (3,3) multitableaux, in the printed order t1..t4.
inline MultiTableau t1() {
    return MultiTableau({T({1}, {}, {{2}}), T({2}, {}, {{1, 2}}), T({2, 2}, {1}, {{1}, {1, 2}})});
}
inline MultiTableau t2() {
    return MultiTableau({T({1}, {}, {{1}}), T({2}, {}, {{2, 2}}), T({2, 2}, {1}, {{1}, {1, 2}})});
}
inline MultiTableau t3() {
    return MultiTableau({T({1}, {}, {{2}}), T({2}, {}, {{1, 1}}), T({2, 2}, {1}, {{1}, {2, 2}})});
}
inline MultiTableau t4() {
    return MultiTableau({T({1}, {}, {{1}}), T({2}, {}, {{1, 2}}), T({2, 2}, {1}, {{1}, {2, 2}})});
}

// Their partners of weight (2,4), in the printed order.
inline MultiTableau g_of_t2() {
    return MultiTableau({T({1}, {}, {{2}}), T({2}, {}, {{2, 2}}), T({2, 2}, {1}, {{1}, {1, 2}})});
}
inline MultiTableau g_of_t3() {
    return MultiTableau({T({1}, {}, {{2}}), T({2}, {}, {{1, 2}}), T({2, 2}, {1}, {{1}, {2, 2}})});
}
inline MultiTableau g_of_t4() {
    return MultiTableau({T({1}, {}, {{1}}), T({2}, {}, {{2, 2}}), T({2, 2}, {1}, {{1}, {2, 2}})});
}

// Three-component tableau of shape ((3,2), (3,2,1)/(1), (2)) whose
// 2-unpaired entries sit at word positions 4, 5, 7, 10 (1-based).
inline MultiTableau coplactic_example() {
    return MultiTableau({T({3, 2}, {}, {{2, 2, 2}, {3, 4}}),
                         T({3, 2, 1}, {1}, {{2, 3}, {3, 3}, {4}}),
                         T({2}, {}, {{1, 1}})});
}

// Its image under the reflection-raising step at k = 2: the box (1,3) of the
// first component turns from 2 into 3.
inline MultiTableau coplactic_example_image() {
    return MultiTableau({T({3, 2}, {}, {{2, 2, 3}, {3, 4}}),
                         T({3, 2, 1}, {1}, {{2, 3}, {3, 3}, {4}}),
                         T({2}, {}, {{1, 1}})});
}

} // namespace fixtures
