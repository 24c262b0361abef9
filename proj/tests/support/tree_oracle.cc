#include "tree_oracle.hh"

namespace omega::testing {

std::vector<BigInt> ordered_tree_counts(int edges) {
    // forest[e][l]: ordered forests hanging from a common parent with e edges
    // in total (one per subtree root included) and l leaves.
    std::vector<std::vector<BigInt>> forest(edges + 1, std::vector<BigInt>(edges + 1, 0));
    forest[0][0] = 1;
    for (int e = 1; e <= edges; ++e) {
        for (int first = 1; first <= e; ++first) {
            // The first subtree: its root edge plus a forest of first-1 edges;
            // an empty forest makes its root a leaf.
            for (int l1 = 0; l1 <= first; ++l1) {
                const BigInt subtree = first == 1 ? BigInt(l1 == 1 ? 1 : 0) : forest[first - 1][l1];
                if (subtree == 0) continue;
                for (int l2 = 0; l1 + l2 <= e; ++l2) forest[e][l1 + l2] += subtree * forest[e - first][l2];
            }
        }
    }
    return forest[edges];
}

BigInt catalan(int e) {
    BigInt c = 1;
    for (int i = 0; i < e; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace omega::testing
