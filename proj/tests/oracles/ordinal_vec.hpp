#pragma once

// Ordinals below w^5 as coefficient vectors c[4] w^4 + ... + c[0].

#include <array>
#include <cstdint>

namespace oracle {

using OrdVec = std::array<std::uint64_t, 5>;

inline int lead(const OrdVec& a) {
    for (int e = 4; e >= 0; --e)
        if (a[e]) return e;
    return -1;
}

// a + b: the terms of a below the leading exponent of b are absorbed.
inline OrdVec vec_add(const OrdVec& a, const OrdVec& b) {
    const int lb = lead(b);
    if (lb < 0) return a;
    OrdVec r{};
    for (int e = 4; e > lb; --e) r[e] = a[e];
    r[lb] = a[lb] + b[lb];
    for (int e = lb - 1; e >= 0; --e) r[e] = b[e];
    return r;
}

inline OrdVec vec_natural(const OrdVec& a, const OrdVec& b) {
    OrdVec r{};
    for (int e = 0; e < 5; ++e) r[e] = a[e] + b[e];
    return r;
}

// lexicographic from the top exponent
inline int vec_cmp(const OrdVec& a, const OrdVec& b) {
    for (int e = 4; e >= 0; --e)
        if (a[e] != b[e]) return a[e] < b[e] ? -1 : 1;
    return 0;
}

}  // namespace oracle
