#ifndef MFSYM_TEST_ORACLES_HPP
#define MFSYM_TEST_ORACLES_HPP

#include <map>
#include <vector>

#include "mfsym/arith.hpp"
#include "mfsym/characters.hpp"
#include "mfsym/partition.hpp"
#include "mfsym/permutation.hpp"

/* Independent reference implementations used only by the test suites.
 * Everything here recomputes results by a different route than the
 * library: literal node placement, element-by-element group walks,
 * recurrence counting.
 */

namespace mfsym::oracle {

// p(n) by the bounded-part recurrence, independent of the generator
inline long long partition_count(int n) {
    std::vector<std::vector<long long>> table(static_cast<std::size_t>(n) + 1,
                                              std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    for (int k = 0; k <= n; ++k) table[0][static_cast<std::size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            long long without = table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 1)];
            long long with = m >= k ? table[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)] : 0;
            table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = without + with;
        }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

// literal "no two added nodes in the same column" filter
inline std::vector<Partition> young_additions_by_columns(const Partition& mu, int m) {
    std::vector<Partition> out;
    Partition mu_conj = conjugate(mu);
    for (const Partition& lambda : partitions_of(mu.n() + m)) {
        Partition lc = conjugate(lambda);
        bool ok = true;
        int cols = std::max(lc.length(), mu_conj.length());
        for (int j = 0; j < cols && ok; ++j) {
            int gained = lc.part(j) - mu_conj.part(j);
            if (gained < 0 || gained > 1) ok = false;
        }
        if (ok) out.push_back(lambda);
    }
    return out;
}

inline std::vector<Partition> pieri_additions_by_rows(const Partition& mu, int m) {
    std::vector<Partition> out;
    for (const Partition& lambda : partitions_of(mu.n() + m)) {
        bool ok = true;
        int rows = std::max(lambda.length(), mu.length());
        for (int i = 0; i < rows && ok; ++i) {
            int gained = lambda.part(i) - mu.part(i);
            if (gained < 0 || gained > 1) ok = false;
        }
        if (ok) out.push_back(lambda);
    }
    return out;
}

/* Explicit element sets for the parametric families, with enough
 * structure to evaluate the tracked characters per element.
 */

inline std::vector<Perm> symmetric_group_elements(int m) {
    std::vector<Perm> out;
    Perm p = identity_perm(m);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct WreathTopElement {
    Perm perm;   // on 2k points: blocks {0..k-1} and {k..2k-1}
    int sgn_a;   // sign of the first coordinate
    int sgn_b;   // sign of the second coordinate
    bool swapped;
};

template <typename F>
void for_each_wreath_top_element(int k, F&& visit) {
    std::vector<Perm> base = symmetric_group_elements(k);
    Perm p(static_cast<std::size_t>(2 * k));
    for (const Perm& a : base) {
        int sa = perm_sign(a);
        for (const Perm& b : base) {
            int sb = perm_sign(b);
            for (int swap = 0; swap < 2; ++swap) {
                for (int i = 0; i < k; ++i) {
                    if (swap == 0) {
                        p[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
                        p[static_cast<std::size_t>(k + i)] = k + b[static_cast<std::size_t>(i)];
                    } else {
                        p[static_cast<std::size_t>(i)] = k + b[static_cast<std::size_t>(i)];
                        p[static_cast<std::size_t>(k + i)] = a[static_cast<std::size_t>(i)];
                    }
                }
                visit(WreathTopElement{p, sa, sb, swap == 1});
            }
        }
    }
}

inline std::vector<WreathTopElement> wreath_top_elements(int k) {
    std::vector<WreathTopElement> out;
    for_each_wreath_top_element(k, [&](const WreathTopElement& e) { out.push_back(e); });
    return out;
}

struct WreathBottomElement {
    Perm perm; // on 2k points: blocks {2i, 2i+1}
    int delta; // product of the flips
    int theta; // sign of the block permutation
};

inline std::vector<WreathBottomElement> wreath_bottom_elements(int k) {
    std::vector<WreathBottomElement> out;
    for (const Perm& sigma : symmetric_group_elements(k)) {
        int theta = perm_sign(sigma);
        for (int flips = 0; flips < (1 << k); ++flips) {
            Perm p(static_cast<std::size_t>(2 * k));
            int delta = 1;
            for (int i = 0; i < k; ++i) {
                int v = (flips >> i) & 1;
                if (v) delta = -delta;
                p[static_cast<std::size_t>(2 * i)] = 2 * sigma[static_cast<std::size_t>(i)] + v;
                p[static_cast<std::size_t>(2 * i + 1)] = 2 * sigma[static_cast<std::size_t>(i)] + 1 - v;
            }
            out.push_back({p, delta, theta});
        }
    }
    return out;
}

// elements of C_l wr S_m on l*m points, blocks {i*l .. i*l+l-1}
inline std::vector<Perm> cyclic_wreath_elements(int l, int m) {
    std::vector<Perm> out;
    std::vector<int> twist(static_cast<std::size_t>(m), 0);
    for (const Perm& sigma : symmetric_group_elements(m)) {
        std::fill(twist.begin(), twist.end(), 0);
        while (true) {
            Perm p(static_cast<std::size_t>(l * m));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < l; ++j)
                    p[static_cast<std::size_t>(i * l + j)] =
                        sigma[static_cast<std::size_t>(i)] * l + (j + twist[static_cast<std::size_t>(i)]) % l;
            out.push_back(p);
            int pos = 0;
            while (pos < m && ++twist[static_cast<std::size_t>(pos)] == l) {
                twist[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == m) break;
        }
    }
    return out;
}

// direct product of explicit element sets on disjoint points
inline std::vector<Perm> product_elements(const std::vector<Perm>& left,
                                          const std::vector<Perm>& right) {
    std::vector<Perm> out;
    out.reserve(left.size() * right.size());
    std::size_t ln = left.empty() ? 0 : left.front().size();
    for (const Perm& a : left)
        for (const Perm& b : right) {
            Perm p = a;
            p.reserve(a.size() + b.size());
            for (int x : b) p.push_back(static_cast<int>(ln) + x);
            out.push_back(std::move(p));
        }
    return out;
}

inline SignedClassDistribution distribution_of(const std::vector<Perm>& elements, int n) {
    SignedClassDistribution d;
    d.n = n;
    d.order = Integer(elements.size());
    for (const Perm& e : elements) d.add_weight(cycle_type(e), 1);
    return d;
}

} // namespace mfsym::oracle

#endif // MFSYM_TEST_ORACLES_HPP
