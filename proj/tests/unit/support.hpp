#pragma once

#include "crdyn/finite_relation.hpp"

#include <vector>

namespace testsupport {

// Every nonempty relation on n points, by edge bitmask over row-major pairs.
inline std::vector<crdyn::FiniteRelation> all_relations(int n)
{
    std::vector<crdyn::FiniteRelation> out;
    const int pairs = n * n;
    for (unsigned m = 1; m < (1u << pairs); ++m) {
        std::vector<crdyn::Edge> e;
        for (int k = 0; k < pairs; ++k) {
            if (m & (1u << k)) {
                e.emplace_back(k / n, k % n);
            }
        }
        out.emplace_back(n, std::move(e));
    }
    return out;
}

inline std::vector<crdyn::FiniteRelation> all_small_relations(int n_max = 3)
{
    std::vector<crdyn::FiniteRelation> out;
    for (int n = 1; n <= n_max; ++n) {
        auto part = all_relations(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline crdyn::FiniteRelation star3()
{
    return crdyn::FiniteRelation::star(3, 1);
}

} // namespace testsupport
