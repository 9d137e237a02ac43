#pragma once

// Exhaustive rewriting over block words on the alphabet {n, w, w*, z, q}.
// Every reachable word is explored (all redexes, all orders); the set of
// irreducible words reached must be a singleton for the rule set to be confluent.

#include <set>
#include <string>
#include <vector>

namespace oracle {

// Letters: positive values are finite chains, then the four infinite letters.
enum : int { W = -1, WS = -2, Z = -3, Q = -4 };

using Letters = std::vector<int>;

inline std::vector<Letters> one_step(const Letters& w) {
    std::vector<Letters> out;
    const auto replace = [&](std::size_t i, std::size_t len, Letters by) {
        Letters r(w.begin(), w.begin() + static_cast<long>(i));
        r.insert(r.end(), by.begin(), by.end());
        r.insert(r.end(), w.begin() + static_cast<long>(i + len), w.end());
        out.push_back(std::move(r));
    };
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const int a = w[i], b = w[i + 1];
        if (a > 0 && b > 0) replace(i, 2, {a + b});  // n + m = n+m
        if (a > 0 && b == W) replace(i, 2, {W});      // n + w = w
        if (a == WS && b > 0) replace(i, 2, {WS});    // w* + n = w*
        if (a == WS && b == W) replace(i, 2, {Z});    // w* + w = z
        if (a == Q && b == Q) replace(i, 2, {Q});     // q + q = q
        if (i + 2 < w.size() && a == Q && b == 1 && w[i + 2] == Q) replace(i, 3, {Q});  // q + 1 + q = q
    }
    return out;
}

inline std::set<Letters> normal_forms(const Letters& start) {
    std::set<Letters> seen{start}, irreducible;
    std::vector<Letters> todo{start};
    while (!todo.empty()) {
        Letters w = std::move(todo.back());
        todo.pop_back();
        const auto next = one_step(w);
        if (next.empty()) irreducible.insert(w);
        for (const auto& x : next)
            if (seen.insert(x).second) todo.push_back(x);
    }
    return irreducible;
}

inline std::string letters_str(const Letters& w) {
    std::string s;
    for (int x : w) {
        if (!s.empty()) s += "+";
        switch (x) {
            case W: s += "w"; break;
            case WS: s += "w*"; break;
            case Z: s += "z"; break;
            case Q: s += "q"; break;
            default: s += std::to_string(x);
        }
    }
    return s;
}

}  // namespace oracle
