// Closed-form bound arithmetic.  Everything is exact 128-bit integer math;
// binomials come from a Pascal table and use the zero convention outside
// 0 <= b <= a, which the formulas below rely on for small remainders.

#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "cliques.hpp"

namespace cliquecycles {

inline constexpr int kBinomTableMax = 120;

inline count_t binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    if (a > kBinomTableMax) throw std::invalid_argument("binom: a exceeds table size");
    struct Table {
        std::array<std::array<count_t, kBinomTableMax + 1>, kBinomTableMax + 1> c{};
        Table() {
            for (int i = 0; i <= kBinomTableMax; ++i) {
                c[i][0] = 1;
                for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
            }
        }
    };
    static const Table table;
    return table.c[a][b];
}

enum class DecomposeMode { g, psi };

// g-mode: n-2 = r(k-3)+t with 0 <= t <= k-4.
// psi-mode: n-1 = r(k-2)+t with 0 <= t <= k-3.
struct Decomposition {
    int r = 0;
    int t = 0;
    int modulus = 0;
};

inline Decomposition decompose(int n, int k, DecomposeMode mode) {
    if (k < 4) throw std::invalid_argument("decompose: k < 4");
    if (n < (mode == DecomposeMode::g ? 2 : 1))
        throw std::invalid_argument("decompose: n below range");
    const int modulus = mode == DecomposeMode::g ? k - 3 : k - 2;
    const int base = mode == DecomposeMode::g ? n - 2 : n - 1;
    Decomposition d;
    d.modulus = modulus;
    d.r = base / modulus;
    d.t = base % modulus;
    return d;
}

// Clique profile of H_{n,k,a}: an s-clique is inside A∪C or uses one B vertex
// with s-1 from A.
inline count_t f_s(int n, int k, int a, int s) {
    if (!(n >= k && k >= 4)) throw std::invalid_argument("f_s: need n >= k >= 4");
    if (!(a >= 1 && 2 * a < k)) throw std::invalid_argument("f_s: need 1 <= a < k/2");
    if (s < 2) throw std::invalid_argument("f_s: s < 2");
    return binom(k - a, s) + count_t(n - k + a) * binom(a, s - 1);
}

inline count_t g_s(int n, int k, int s) {
    if (n < 3) throw std::invalid_argument("g_s: n < 3");
    if (k < 4) throw std::invalid_argument("g_s: k < 4");
    if (s < 2) throw std::invalid_argument("g_s: s < 2");
    const Decomposition d = decompose(n, k, DecomposeMode::g);
    count_t value;
    if (s >= 3)
        value = count_t(d.r) * binom(k - 1, s) + binom(d.t + 2, s);
    else
        value = count_t(d.r) * binom(k - 3, 2) + binom(d.t, 2) + count_t(2) * (n - 2) + 1;
    assert(k <= n || value == binom(n, s));
    return value;
}

// The conjectured N_s bound; same as g_s for s >= 3, weaker at s = 2.
inline count_t conjecture_bound(int n, int k, int s) {
    if (n < 3) throw std::invalid_argument("conjecture_bound: n < 3");
    if (k < 4) throw std::invalid_argument("conjecture_bound: k < 4");
    if (s < 2) throw std::invalid_argument("conjecture_bound: s < 2");
    const Decomposition d = decompose(n, k, DecomposeMode::g);
    return count_t(d.r) * binom(k - 1, s) + binom(d.t + 2, s);
}

inline count_t psi_s(int n, int k, int s) {
    if (n < 1) throw std::invalid_argument("psi_s: n < 1");
    if (k < 4) throw std::invalid_argument("psi_s: k < 4");
    if (s < 2) throw std::invalid_argument("psi_s: s < 2");
    const Decomposition d = decompose(n, k, DecomposeMode::psi);
    const count_t value = count_t(d.r) * binom(k - 1, s) + binom(d.t + 1, s);
    assert(k <= n || value == binom(n, s));
    return value;
}

// Merging two psi-remainders t1, t2 never beats one combined remainder:
// binom(t1+1,s) + binom(t2+1,s) <= binom(t1+t2+1,s)            if t1+t2 <= k-2,
//                               <= binom(k-1,s) + binom(t1+t2-k+3,s)  otherwise.
inline bool check_inequality_1(int k, int s, int t1, int t2) {
    if (k < 5) throw std::invalid_argument("check_inequality_1: k < 5");
    if (s < 2) throw std::invalid_argument("check_inequality_1: s < 2");
    if (t1 < 0 || t1 > k - 3 || t2 < 0 || t2 > k - 3)
        throw std::invalid_argument("check_inequality_1: t out of [0, k-3]");
    const count_t lhs = binom(t1 + 1, s) + binom(t2 + 1, s);
    const count_t rhs = t1 + t2 <= k - 2
                            ? binom(t1 + t2 + 1, s)
                            : binom(k - 1, s) + binom(t1 + t2 - k + 3, s);
    return lhs <= rhs;
}

// The g-remainder analogue, s >= 3:
// binom(t1+2,s) + binom(t2+2,s) <= binom(t1+t2+2,s)            if t1+t2 <= k-4,
//                               <= binom(k-1,s) + binom(t1+t2-k+5,s)  otherwise.
inline bool check_inequality_3(int k, int s, int t1, int t2) {
    if (k < 5) throw std::invalid_argument("check_inequality_3: k < 5");
    if (s < 3) throw std::invalid_argument("check_inequality_3: s < 3");
    if (t1 < 0 || t1 > k - 4 || t2 < 0 || t2 > k - 4)
        throw std::invalid_argument("check_inequality_3: t out of [0, k-4]");
    const count_t lhs = binom(t1 + 2, s) + binom(t2 + 2, s);
    const count_t rhs = t1 + t2 <= k - 4
                            ? binom(t1 + t2 + 2, s)
                            : binom(k - 1, s) + binom(t1 + t2 - k + 5, s);
    return lhs <= rhs;
}

// max(f_s(n,k,2), f_s(n,k,floor((k-1)/2))) <= psi_s(n,k).
inline bool check_proposition(int n, int k, int s) {
    if (!(n >= k && k >= 5)) throw std::invalid_argument("check_proposition: need n >= k >= 5");
    if (s < 2) throw std::invalid_argument("check_proposition: s < 2");
    const count_t lhs = std::max(f_s(n, k, 2, s), f_s(n, k, (k - 1) / 2, s));
    return lhs <= psi_s(n, k, s);
}

}  // namespace cliquecycles
