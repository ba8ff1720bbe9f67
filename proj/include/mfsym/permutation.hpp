#ifndef MFSYM_PERMUTATION_HPP
#define MFSYM_PERMUTATION_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "mfsym/partition.hpp"

/* Permutations of {0,...,n-1} as image vectors, plus breadth-first
 * generator closure.  Element sets stay explicit, so this is only for
 * the small named groups and for brute-force cross-checks; the closure
 * refuses to grow past a configurable bound.
 */

namespace mfsym {

using Perm = std::vector<int>;

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

inline Perm identity_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

// (a*b)(x) = a(b(x))
inline Perm compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
    return r;
}

inline Perm inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    return r;
}

// from 1-based disjoint cycles, e.g. {{1,2,3,4,5}} on n points
inline Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm p = identity_perm(n);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i] - 1;
            int to = cycle[(i + 1) % cycle.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n)
                throw std::invalid_argument("cycle entry out of range");
            p[static_cast<std::size_t>(from)] = to;
        }
    }
    return p;
}

inline CycleType cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(p[j]);
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return CycleType(std::move(lengths));
}

inline int perm_sign(const Perm& p) {
    CycleType t = cycle_type(p);
    return (t.n() - t.length()) % 2 == 0 ? 1 : -1;
}

struct GroupElementSet {
    int n = 0;
    std::vector<Perm> elements; // sorted lexicographically

    std::size_t size() const { return elements.size(); }
};

namespace detail {
// permutations on up to 16 points pack into one word
inline std::uint64_t pack_perm(const Perm& p) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < p.size(); ++i) key |= static_cast<std::uint64_t>(p[i]) << (4 * i);
    return key;
}

inline std::string pack_perm_wide(const Perm& p) {
    std::string key(p.size(), '\0');
    for (std::size_t i = 0; i < p.size(); ++i) key[i] = static_cast<char>(p[i]);
    return key;
}
} // namespace detail

inline GroupElementSet closure(const std::vector<Perm>& generators, int n,
                               std::size_t bound = 10'000'000) {
    for (const Perm& g : generators)
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument("closure: generator acts on wrong number of points");

    GroupElementSet out;
    out.n = n;
    std::deque<Perm> queue;
    queue.push_back(identity_perm(n));

    if (n <= 16) {
        std::unordered_set<std::uint64_t> seen;
        seen.insert(detail::pack_perm(queue.front()));
        while (!queue.empty()) {
            Perm cur = std::move(queue.front());
            queue.pop_front();
            for (const Perm& g : generators) {
                Perm next = compose(cur, g);
                if (seen.insert(detail::pack_perm(next)).second) {
                    if (seen.size() > bound)
                        throw BudgetError("closure exceeded element budget of " + std::to_string(bound));
                    queue.push_back(std::move(next));
                }
            }
            out.elements.push_back(std::move(cur));
        }
    } else {
        std::unordered_set<std::string> seen;
        seen.insert(detail::pack_perm_wide(queue.front()));
        while (!queue.empty()) {
            Perm cur = std::move(queue.front());
            queue.pop_front();
            for (const Perm& g : generators) {
                Perm next = compose(cur, g);
                if (seen.insert(detail::pack_perm_wide(next)).second) {
                    if (seen.size() > bound)
                        throw BudgetError("closure exceeded element budget of " + std::to_string(bound));
                    queue.push_back(std::move(next));
                }
            }
            out.elements.push_back(std::move(cur));
        }
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

/* The three named point actions.  The Frobenius group of order 20 comes
 * straight from its generating permutations; the projective groups act
 * on the projective line over F_5 and F_8, points numbered with the
 * field elements first and infinity last.
 */

inline std::vector<Perm> frobenius20_generators() {
    return {perm_from_cycles(5, {{1, 2, 3, 4, 5}}), perm_from_cycles(5, {{2, 3, 5, 4}})};
}

inline std::vector<Perm> pgl25_generators() {
    const int inf = 5;
    Perm shift(6), scale(6), invert(6);
    for (int x = 0; x < 5; ++x) {
        shift[static_cast<std::size_t>(x)] = (x + 1) % 5;
        scale[static_cast<std::size_t>(x)] = (2 * x) % 5;
    }
    shift[inf] = inf;
    scale[inf] = inf;
    invert[0] = inf;
    invert[inf] = 0;
    for (int x = 1; x < 5; ++x) {
        int inv = 1;
        while ((inv * x) % 5 != 1) ++inv;
        invert[static_cast<std::size_t>(x)] = inv;
    }
    return {shift, scale, invert};
}

namespace detail {
// F_8 = F_2[t]/(t^3 + t + 1), elements as 3-bit masks
inline int f8_mul(int a, int b) {
    int r = 0;
    for (int i = 0; i < 3; ++i)
        if (b & (1 << i)) r ^= a << i;
    for (int d = 5; d >= 3; --d)
        if (r & (1 << d)) r ^= (0b1011 << (d - 3));
    return r;
}

inline int f8_inv(int a) {
    if (a == 0) throw std::invalid_argument("f8_inv(0)");
    int r = 1;
    for (int i = 0; i < 6; ++i) r = f8_mul(r, a); // a^6 = a^{-1}
    return r;
}
} // namespace detail

inline std::vector<Perm> pgammal28_generators() {
    const int inf = 8;
    Perm shift(9), scale(9), invert(9), frob(9);
    for (int x = 0; x < 8; ++x) {
        shift[static_cast<std::size_t>(x)] = x ^ 1;
        scale[static_cast<std::size_t>(x)] = detail::f8_mul(x, 2); // 2 = t generates F_8^*
        invert[static_cast<std::size_t>(x)] = x == 0 ? inf : detail::f8_inv(x);
        frob[static_cast<std::size_t>(x)] = detail::f8_mul(x, x);
    }
    shift[inf] = inf;
    scale[inf] = inf;
    invert[inf] = 0;
    frob[inf] = inf;
    return {shift, scale, invert, frob};
}

} // namespace mfsym

#endif // MFSYM_PERMUTATION_HPP
