#pragma once

// Brute force for finite coloured orders: every convex partition of the source,
// every strictly increasing colour-preserving map, images of pieces checked for
// contiguity. Returns the fewest pieces over all valid choices, or -1.

#include <vector>

namespace oracle {

inline int naive_min_pieces(const std::vector<int>& s, const std::vector<int>& t) {
    const int n = static_cast<int>(s.size()), m = static_cast<int>(t.size());
    if (n > m) return -1;
    int best = -1;
    std::vector<int> img(n);
    // choose images recursively, then test every partition
    auto try_partitions = [&] {
        for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
            int pieces = 1;
            bool ok = true;
            for (int i = 0; i + 1 < n; ++i) {
                if (cuts >> i & 1u) {
                    ++pieces;
                } else if (img[i + 1] != img[i] + 1) {
                    ok = false;  // same piece, image not convex
                    break;
                }
            }
            if (ok && (best < 0 || pieces < best)) best = pieces;
        }
    };
    auto rec = [&](auto&& self, int i, int from) -> void {
        if (i == n) {
            try_partitions();
            return;
        }
        for (int j = from; j <= m - (n - i); ++j) {
            if (t[j] != s[i]) continue;
            img[i] = j;
            self(self, i + 1, j + 1);
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace oracle
