#ifndef MFSYM_SUBGROUPS_HPP
#define MFSYM_SUBGROUPS_HPP

#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mfsym/characters.hpp"
#include "mfsym/partition.hpp"
#include "mfsym/permutation.hpp"

/* Subgroup families of S_n and their exact class distributions.
 *
 * Every family is described by a SubgroupSpec value; class_distribution
 * produces the element counts per embedded cycle type without ever
 * enumerating elements (the named projective/Frobenius groups are the
 * one exception, built once from generator closures).  Index-2 and
 * index-4 members of the two wreath lattices are obtained by filtering
 * a refined enumeration that tracks the relevant +-1 characters:
 *
 *  - in S_k wr S_2, a base element (a,b) embeds with type(a) u type(b)
 *    and tracked pair (sgn a, sgn b); for the swap coset, b |-> ab is a
 *    bijection for fixed a, so swap classes follow k! * |class(ab)| and
 *    a swap element of base type rho embeds with all parts doubled.
 *  - in S_2 wr S_k, a sigma-cycle of length m carries 2^{m-1} flip
 *    assignments of either flip product; product +1 embeds as two
 *    m-cycles, product -1 as one 2m-cycle.
 *  - in C_l wr S_m, a sigma-cycle of length c and twist sum j mod l
 *    embeds as gcd(l,j) cycles of length c*l/gcd(l,j), with l^{c-1}
 *    twist vectors for each j.
 *
 * The subgroups named A_{2k} cap (S_k wr S_2) and Gamma_k are defined by
 * their character kernels (restricted sign, respectively sign times the
 * block-swap character), never by position in a diagram.
 */

namespace mfsym {

struct SpecError : std::runtime_error {
    explicit SpecError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Family {
    Sym,          // S_m
    Alt,          // A_m
    Trivial,      // identity subgroup of S_m
    CyclicWreath, // C_l wr S_m
    WreathTop,    // member of the S_k wr S_2 lattice
    WreathBottom, // member of the S_2 wr S_k lattice
    Named,        // G5, G6, G9
    Product,      // direct product on disjoint points
    AltCap,       // A_n cap G
    Stabilized,   // G with extra fixed points appended
    Twist,        // linear-character twist of G
};

enum class WrTopMember { Whole, SxS, AnCap, Gamma, SxA, AnCapSxS, AwrS2, AxA };
enum class WrBottomMember { Whole, HS, S2wrA, Delta, HA };
enum class NamedGroup { G5, G6, G9 };
enum class TwistKind { Sgn, Psi, Theta };

struct SubgroupSpec {
    Family family = Family::Trivial;
    int a = 0; // degree, or l, or k, or fixed-point count for Stabilized
    int b = 0; // m for CyclicWreath
    WrTopMember top_member = WrTopMember::Whole;
    WrBottomMember bottom_member = WrBottomMember::Whole;
    NamedGroup named = NamedGroup::G5;
    TwistKind twist = TwistKind::Sgn;
    std::vector<SubgroupSpec> children;

    static SubgroupSpec sym(int m) {
        if (m < 0) throw SpecError("S(m): m must be >= 0");
        SubgroupSpec s;
        s.family = Family::Sym;
        s.a = m;
        return s;
    }

    static SubgroupSpec alt(int m) {
        if (m < 0) throw SpecError("A(m): m must be >= 0");
        SubgroupSpec s;
        s.family = Family::Alt;
        s.a = m;
        return s;
    }

    static SubgroupSpec trivial(int m) {
        if (m < 0) throw SpecError("Id(m): m must be >= 0");
        SubgroupSpec s;
        s.family = Family::Trivial;
        s.a = m;
        return s;
    }

    static SubgroupSpec cyclic_wreath(int l, int m) {
        if (l < 1 || m < 1) throw SpecError("CwrS(l,m): need l >= 1 and m >= 1");
        SubgroupSpec s;
        s.family = Family::CyclicWreath;
        s.a = l;
        s.b = m;
        return s;
    }

    static SubgroupSpec wreath_top(int k, WrTopMember member) {
        if (k < 2) throw SpecError("WrTop(k): need k >= 2");
        SubgroupSpec s;
        s.family = Family::WreathTop;
        s.a = k;
        s.top_member = member;
        return s;
    }

    static SubgroupSpec wreath_bottom(int k, WrBottomMember member) {
        if (k < 1) throw SpecError("WrBottom(k): need k >= 1");
        SubgroupSpec s;
        s.family = Family::WreathBottom;
        s.a = k;
        s.bottom_member = member;
        return s;
    }

    static SubgroupSpec named_group(NamedGroup g) {
        SubgroupSpec s;
        s.family = Family::Named;
        s.named = g;
        return s;
    }

    static SubgroupSpec product(SubgroupSpec lhs, SubgroupSpec rhs) {
        SubgroupSpec s;
        s.family = Family::Product;
        s.children.push_back(std::move(lhs));
        s.children.push_back(std::move(rhs));
        return s;
    }

    static SubgroupSpec alt_cap(SubgroupSpec inner) {
        SubgroupSpec s;
        s.family = Family::AltCap;
        s.children.push_back(std::move(inner));
        return s;
    }

    static SubgroupSpec stabilized(SubgroupSpec inner, int fixed_points) {
        if (fixed_points < 0) throw SpecError("Fix(spec,f): f must be >= 0");
        SubgroupSpec s;
        s.family = Family::Stabilized;
        s.a = fixed_points;
        s.children.push_back(std::move(inner));
        return s;
    }

    static SubgroupSpec twisted(SubgroupSpec inner, TwistKind kind) {
        SubgroupSpec s;
        s.family = Family::Twist;
        s.twist = kind;
        s.children.push_back(std::move(inner));
        return s;
    }
};

inline bool operator==(const SubgroupSpec& x, const SubgroupSpec& y) {
    if (x.family != y.family || x.a != y.a || x.b != y.b) return false;
    switch (x.family) {
    case Family::WreathTop:
        if (x.top_member != y.top_member) return false;
        break;
    case Family::WreathBottom:
        if (x.bottom_member != y.bottom_member) return false;
        break;
    case Family::Named:
        if (x.named != y.named) return false;
        break;
    case Family::Twist:
        if (x.twist != y.twist) return false;
        break;
    default:
        break;
    }
    return x.children == y.children;
}

inline bool operator!=(const SubgroupSpec& x, const SubgroupSpec& y) { return !(x == y); }

// degree of the symmetric group the subgroup sits in
inline int ambient_n(const SubgroupSpec& s) {
    switch (s.family) {
    case Family::Sym:
    case Family::Alt:
    case Family::Trivial:
        return s.a;
    case Family::CyclicWreath:
        return s.a * s.b;
    case Family::WreathTop:
    case Family::WreathBottom:
        return 2 * s.a;
    case Family::Named:
        return s.named == NamedGroup::G5 ? 5 : s.named == NamedGroup::G6 ? 6 : 9;
    case Family::Product:
        return ambient_n(s.children[0]) + ambient_n(s.children[1]);
    case Family::AltCap:
    case Family::Twist:
        return ambient_n(s.children[0]);
    case Family::Stabilized:
        return ambient_n(s.children[0]) + s.a;
    }
    throw SpecError("ambient_n: unhandled family");
}

// whether the subgroup contains odd permutations of its ambient S_n
inline bool has_odd_elements(const SubgroupSpec& s) {
    switch (s.family) {
    case Family::Sym:
        return s.a >= 2;
    case Family::Alt:
    case Family::Trivial:
        return false;
    case Family::CyclicWreath:
        // an l-cycle is odd for l even; a block transposition with flip
        // sum zero embeds as l 2-cycles, odd for l odd
        return s.a % 2 == 0 || s.b >= 2;
    case Family::WreathTop:
        switch (s.top_member) {
        case WrTopMember::Whole:
        case WrTopMember::SxS:
        case WrTopMember::Gamma:
        case WrTopMember::SxA:
            return true;
        case WrTopMember::AwrS2:
            return s.a % 2 == 1; // swap over even base type rho has sign (-1)^k via (-1)^{len(rho)}
        case WrTopMember::AnCap:
        case WrTopMember::AnCapSxS:
        case WrTopMember::AxA:
            return false;
        }
        break;
    case Family::WreathBottom:
        switch (s.bottom_member) {
        case WrBottomMember::Whole:
        case WrBottomMember::S2wrA:
            return true; // a single flip is a transposition
        case WrBottomMember::Delta:
            return s.a >= 2; // block transposition with one flipped cycle
        case WrBottomMember::HS:
        case WrBottomMember::HA:
            return false;
        }
        break;
    case Family::Named:
        return s.named != NamedGroup::G9; // the 9-point group is even throughout
    case Family::Product:
        return has_odd_elements(s.children[0]) || has_odd_elements(s.children[1]);
    case Family::AltCap:
        return false;
    case Family::Stabilized:
    case Family::Twist:
        return has_odd_elements(s.children[0]);
    }
    throw SpecError("has_odd_elements: unhandled family");
}

inline bool contains_twist(const SubgroupSpec& s) {
    if (s.family == Family::Twist) return true;
    for (const SubgroupSpec& c : s.children)
        if (contains_twist(c)) return true;
    return false;
}

inline const GroupElementSet& named_group_elements(NamedGroup g) {
    static const GroupElementSet g5 = closure(frobenius20_generators(), 5);
    static const GroupElementSet g6 = closure(pgl25_generators(), 6);
    static const GroupElementSet g9 = closure(pgammal28_generators(), 9);
    switch (g) {
    case NamedGroup::G5: return g5;
    case NamedGroup::G6: return g6;
    case NamedGroup::G9: return g9;
    }
    throw SpecError("named_group_elements: unhandled group");
}

inline Integer order(const SubgroupSpec& s) {
    switch (s.family) {
    case Family::Sym:
        return factorial(s.a);
    case Family::Alt:
        return s.a <= 1 ? Integer(1) : factorial(s.a) / 2;
    case Family::Trivial:
        return 1;
    case Family::CyclicWreath:
        return int_pow(s.a, s.b) * factorial(s.b);
    case Family::WreathTop: {
        Integer whole = factorial(s.a) * factorial(s.a) * 2;
        switch (s.top_member) {
        case WrTopMember::Whole: return whole;
        case WrTopMember::SxS:
        case WrTopMember::AnCap:
        case WrTopMember::Gamma: return whole / 2;
        case WrTopMember::SxA:
        case WrTopMember::AnCapSxS:
        case WrTopMember::AwrS2: return whole / 4;
        case WrTopMember::AxA: return whole / 8;
        }
        break;
    }
    case Family::WreathBottom: {
        Integer whole = int_pow(2, s.a) * factorial(s.a);
        // for k = 1 the top sign is trivial and its kernels collapse
        switch (s.bottom_member) {
        case WrBottomMember::Whole: return whole;
        case WrBottomMember::S2wrA: return s.a == 1 ? whole : whole / 2;
        case WrBottomMember::HS:
        case WrBottomMember::Delta: return whole / 2;
        case WrBottomMember::HA: return s.a == 1 ? whole / 2 : whole / 4;
        }
        break;
    }
    case Family::Named:
        return Integer(named_group_elements(s.named).size());
    case Family::Product:
        return order(s.children[0]) * order(s.children[1]);
    case Family::AltCap:
        return has_odd_elements(s.children[0]) ? order(s.children[0]) / 2 : order(s.children[0]);
    case Family::Stabilized:
    case Family::Twist:
        return order(s.children[0]);
    }
    throw SpecError("order: unhandled family");
}

namespace detail {

inline CycleType merge_types(const CycleType& x, const CycleType& y) {
    std::vector<int> parts = x.parts();
    parts.insert(parts.end(), y.parts().begin(), y.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return CycleType(std::move(parts));
}

inline CycleType type_from_raw(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return CycleType(std::move(parts));
}

inline CycleType doubled_type(const CycleType& rho) {
    std::vector<int> parts;
    parts.reserve(rho.parts().size());
    for (int p : rho.parts()) parts.push_back(2 * p);
    return CycleType(std::move(parts));
}

inline CycleType with_fixed_points(const CycleType& rho, int f) {
    std::vector<int> parts = rho.parts();
    parts.insert(parts.end(), static_cast<std::size_t>(f), 1);
    return CycleType(std::move(parts));
}

// (part value, multiplicity) pairs, values descending
inline std::vector<std::pair<int, int>> part_multiplicities(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < p.length(); ++i) {
        if (!out.empty() && out.back().first == p.part(i))
            ++out.back().second;
        else
            out.emplace_back(p.part(i), 1);
    }
    return out;
}

/* Refined classes of S_k wr S_2 on 2k points.
 * visit(type, s1, s2, is_swap, count); for base elements (s1,s2) are the
 * factor signs, for swap elements the signs of the two coordinates.
 */
template <typename F>
void for_each_wreath_top_class(int k, F&& visit) {
    std::vector<Partition> classes = partitions_of(k);
    std::vector<Integer> sizes;
    std::vector<int> signs;
    sizes.reserve(classes.size());
    signs.reserve(classes.size());
    for (const Partition& rho : classes) {
        sizes.push_back(class_size(rho));
        signs.push_back(sign_of_class(rho));
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j)
            visit(merge_types(classes[i], classes[j]), signs[i], signs[j], false,
                  sizes[i] * sizes[j]);
    Integer half = factorial(k) / 2;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        CycleType embedded = doubled_type(classes[i]);
        visit(embedded, 1, signs[i], true, half * sizes[i]);
        visit(embedded, -1, -signs[i], true, half * sizes[i]);
    }
}

/* Refined classes of S_2 wr S_k on 2k points.
 * visit(type, delta, theta, count) with delta the product of all flips
 * (equal to the embedded sign) and theta the sign of the top permutation.
 */
template <typename F>
void for_each_wreath_bottom_class(int k, F&& visit) {
    for (const Partition& mu : partitions_of(k)) {
        Integer base = class_size(mu) * int_pow(2, k - mu.length());
        int theta = sign_of_class(mu);
        std::vector<std::pair<int, int>> groups = part_multiplicities(mu);
        std::vector<int> parts;
        auto rec = [&](auto&& self, std::size_t gi, const Integer& count, int negatives) -> void {
            if (gi == groups.size()) {
                visit(type_from_raw(parts), negatives % 2 == 0 ? 1 : -1, theta, base * count);
                return;
            }
            auto [m, mult] = groups[gi];
            for (int j = 0; j <= mult; ++j) {
                std::size_t added = 0;
                for (int t = 0; t < j; ++t, ++added) parts.push_back(2 * m);
                for (int t = 0; t < mult - j; ++t) {
                    parts.push_back(m);
                    parts.push_back(m);
                    added += 2;
                }
                self(self, gi + 1, count * binomial(mult, j), negatives + j);
                parts.resize(parts.size() - added);
            }
        };
        rec(rec, 0, 1, 0);
    }
}

/* Classes of C_l wr S_m on lm points: visit(type, count). */
template <typename F>
void for_each_cyclic_wreath_class(int l, int m, F&& visit) {
    for (const Partition& mu : partitions_of(m)) {
        Integer base = class_size(mu);
        for (int i = 0; i < mu.length(); ++i) base *= int_pow(l, mu.part(i) - 1);
        std::vector<std::pair<int, int>> groups = part_multiplicities(mu);
        std::vector<int> parts;
        // spread each group's cycles over twist sums j = 0..l-1
        auto rec = [&](auto&& self, std::size_t gi, int j, int left, const Integer& count) -> void {
            if (gi == groups.size()) {
                visit(type_from_raw(parts), count);
                return;
            }
            auto [c, mult] = groups[gi];
            if (j == 0) left = mult;
            if (j == l - 1) {
                std::size_t added = 0;
                int g = std::gcd(l, j);
                for (int t = 0; t < left; ++t)
                    for (int copies = 0; copies < g; ++copies, ++added) parts.push_back(c * l / g);
                self(self, gi + 1, 0, 0, count);
                parts.resize(parts.size() - added);
                return;
            }
            for (int take = 0; take <= left; ++take) {
                std::size_t added = 0;
                int g = std::gcd(l, j);
                for (int t = 0; t < take; ++t)
                    for (int copies = 0; copies < g; ++copies, ++added) parts.push_back(c * l / g);
                self(self, gi, j + 1, left - take, count * binomial(left, take));
                parts.resize(parts.size() - added);
            }
        };
        rec(rec, 0, 0, 0, base);
    }
}

} // namespace detail

/* Count elements by embedded cycle type, optionally weighted by a
 * character value per element.  The workhorse for the named groups and
 * for brute-force cross-checks.
 */
template <typename TwistFn>
SignedClassDistribution distribution_from_elements(const GroupElementSet& g, TwistFn&& twist) {
    SignedClassDistribution d;
    d.n = g.n;
    d.order = Integer(g.size());
    for (const Perm& e : g.elements) d.add_weight(cycle_type(e), Integer(twist(e)));
    return d;
}

inline SignedClassDistribution distribution_from_elements(const GroupElementSet& g) {
    return distribution_from_elements(g, [](const Perm&) { return 1; });
}

inline SignedClassDistribution sgn_twist_distribution(const SignedClassDistribution& d) {
    SignedClassDistribution out;
    out.n = d.n;
    out.order = d.order;
    for (const auto& [rho, w] : d.weights) out.add_weight(rho, w * sign_of_class(rho));
    return out;
}

inline SignedClassDistribution class_distribution(const SubgroupSpec& s) {
    SignedClassDistribution d;
    d.n = ambient_n(s);
    d.order = order(s);
    switch (s.family) {
    case Family::Sym:
        for (const Partition& rho : partitions_of(s.a)) d.add_weight(rho, class_size(rho));
        return d;
    case Family::Alt:
        for (const Partition& rho : partitions_of(s.a))
            if (sign_of_class(rho) == 1) d.add_weight(rho, class_size(rho));
        return d;
    case Family::Trivial:
        d.add_weight(CycleType(std::vector<int>(static_cast<std::size_t>(s.a), 1)), 1);
        return d;
    case Family::CyclicWreath:
        detail::for_each_cyclic_wreath_class(s.a, s.b, [&](const CycleType& t, const Integer& c) {
            d.add_weight(t, c);
        });
        return d;
    case Family::WreathTop:
        detail::for_each_wreath_top_class(
            s.a, [&](const CycleType& t, int s1, int s2, bool swap_part, const Integer& c) {
                bool keep = false;
                switch (s.top_member) {
                case WrTopMember::Whole: keep = true; break;
                case WrTopMember::SxS: keep = !swap_part; break;
                case WrTopMember::AnCap: keep = sign_of_class(t) == 1; break;
                case WrTopMember::Gamma: keep = sign_of_class(t) == (swap_part ? -1 : 1); break;
                case WrTopMember::SxA: keep = !swap_part && s2 == 1; break;
                case WrTopMember::AnCapSxS: keep = !swap_part && s1 == s2; break;
                case WrTopMember::AwrS2: keep = s1 == 1 && s2 == 1; break;
                case WrTopMember::AxA: keep = !swap_part && s1 == 1 && s2 == 1; break;
                }
                if (keep) d.add_weight(t, c);
            });
        return d;
    case Family::WreathBottom:
        detail::for_each_wreath_bottom_class(
            s.a, [&](const CycleType& t, int delta, int theta, const Integer& c) {
                bool keep = false;
                switch (s.bottom_member) {
                case WrBottomMember::Whole: keep = true; break;
                case WrBottomMember::HS: keep = delta == 1; break;
                case WrBottomMember::S2wrA: keep = theta == 1; break;
                case WrBottomMember::Delta: keep = delta * theta == 1; break;
                case WrBottomMember::HA: keep = delta == 1 && theta == 1; break;
                }
                if (keep) d.add_weight(t, c);
            });
        return d;
    case Family::Named:
        return distribution_from_elements(named_group_elements(s.named));
    case Family::Product: {
        SignedClassDistribution d1 = class_distribution(s.children[0]);
        SignedClassDistribution d2 = class_distribution(s.children[1]);
        for (const auto& [r1, w1] : d1.weights)
            for (const auto& [r2, w2] : d2.weights)
                d.add_weight(detail::merge_types(r1, r2), w1 * w2);
        return d;
    }
    case Family::AltCap: {
        SignedClassDistribution inner = class_distribution(s.children[0]);
        if (contains_twist(s.children[0]))
            throw SpecError("AnCap of a twisted spec is not supported");
        for (const auto& [rho, w] : inner.weights)
            if (sign_of_class(rho) == 1) d.add_weight(rho, w);
        return d;
    }
    case Family::Stabilized: {
        SignedClassDistribution inner = class_distribution(s.children[0]);
        for (const auto& [rho, w] : inner.weights)
            d.add_weight(detail::with_fixed_points(rho, s.a), w);
        return d;
    }
    case Family::Twist: {
        const SubgroupSpec& child = s.children[0];
        switch (s.twist) {
        case TwistKind::Sgn:
            return sgn_twist_distribution(class_distribution(child));
        case TwistKind::Psi: {
            if (child.family != Family::WreathTop || child.top_member != WrTopMember::Whole)
                throw SpecError("psi twist is defined on WrTop(k):whole only");
            detail::for_each_wreath_top_class(
                child.a, [&](const CycleType& t, int, int, bool swap_part, const Integer& c) {
                    d.add_weight(t, swap_part ? -c : c);
                });
            return d;
        }
        case TwistKind::Theta: {
            if (child.family != Family::WreathBottom || child.bottom_member != WrBottomMember::Whole)
                throw SpecError("theta twist is defined on WrBottom(k):whole only");
            detail::for_each_wreath_bottom_class(
                child.a, [&](const CycleType& t, int, int theta, const Integer& c) {
                    d.add_weight(t, theta * c);
                });
            return d;
        }
        }
        break;
    }
    }
    throw SpecError("class_distribution: unhandled family");
}

// number of r-subsets of {1..n} fixed by an element of the given type:
// coefficient of z^r in prod over cycles (1 + z^c)
inline Integer fixed_r_subsets(const CycleType& rho, int r) {
    std::vector<Integer> coef(static_cast<std::size_t>(r) + 1, Integer(0));
    coef[0] = 1;
    for (int i = 0; i < rho.length(); ++i) {
        int c = rho.part(i);
        for (int j = r; j >= c; --j) coef[static_cast<std::size_t>(j)] += coef[static_cast<std::size_t>(j - c)];
    }
    return coef[static_cast<std::size_t>(r)];
}

// orbits of the subgroup on r-subsets, by the orbit-counting lemma
inline Integer subset_orbit_count(const SubgroupSpec& s, int r) {
    if (contains_twist(s)) throw SpecError("subset_orbit_count requires an untwisted spec");
    SignedClassDistribution d = class_distribution(s);
    if (r < 0 || r > d.n) throw std::invalid_argument("subset_orbit_count: r out of range");
    Integer sum = 0;
    for (const auto& [rho, w] : d.weights) sum += w * fixed_r_subsets(rho, r);
    return exact_div(sum, d.order, "subset_orbit_count");
}

// centralizer of an element with the given cycle type, as a product of
// cyclic wreath factors, one per distinct part size
inline SubgroupSpec centralizer_spec(const CycleType& x_type) {
    std::vector<std::pair<int, int>> groups = detail::part_multiplicities(x_type);
    if (groups.empty()) return SubgroupSpec::sym(0);
    std::optional<SubgroupSpec> acc;
    for (const auto& [l, m] : groups) {
        SubgroupSpec factor =
            l == 1 ? SubgroupSpec::sym(m) : SubgroupSpec::cyclic_wreath(l, m);
        if (!acc)
            acc = std::move(factor);
        else
            acc = SubgroupSpec::product(std::move(*acc), std::move(factor));
    }
    return *acc;
}

/* ---- textual grammar ------------------------------------------------
 *
 *   spec     := "S(" int ")" | "A(" int ")" | "Id(" int ")"
 *             | "SxS(" int "," int ")" | "SxA(...)" | "AxS(...)" | "AxA(...)"
 *             | "CwrS(" int "," int ")"
 *             | "WrTop(" int "):" topMember | "WrBottom(" int "):" bottomMember
 *             | "G5" | "G6" | "G9"
 *             | "G5xS(n=" int ")" | "G5xA(n=" int ")"   (likewise G6, G9)
 *             | "Cent(" partition ")"
 *             | "Prod(" spec "," spec ")"
 *             | "AnCap(" spec ")"
 *             | "Fix(" spec "," int ")"
 *             | "Twist(" spec "," twistTag ")"
 *   topMember    := whole | SxS | AnCap | Gamma | SxA | AnCapSxS | AwrS2 | AxA
 *   bottomMember := whole | HS | S2wrA | Delta | HA
 *   twistTag     := trivial | sgn | psi | theta | sgn@<factor>
 *
 * "Cent(...)" expands to its product of cyclic wreath factors, and
 * "sgn@i" pushes a sign twist onto factor i of a product, so printed
 * specs always round-trip.
 */

inline std::string member_name(WrTopMember m) {
    switch (m) {
    case WrTopMember::Whole: return "whole";
    case WrTopMember::SxS: return "SxS";
    case WrTopMember::AnCap: return "AnCap";
    case WrTopMember::Gamma: return "Gamma";
    case WrTopMember::SxA: return "SxA";
    case WrTopMember::AnCapSxS: return "AnCapSxS";
    case WrTopMember::AwrS2: return "AwrS2";
    case WrTopMember::AxA: return "AxA";
    }
    return "?";
}

inline std::string member_name(WrBottomMember m) {
    switch (m) {
    case WrBottomMember::Whole: return "whole";
    case WrBottomMember::HS: return "HS";
    case WrBottomMember::S2wrA: return "S2wrA";
    case WrBottomMember::Delta: return "Delta";
    case WrBottomMember::HA: return "HA";
    }
    return "?";
}

inline std::string named_group_name(NamedGroup g) {
    switch (g) {
    case NamedGroup::G5: return "G5";
    case NamedGroup::G6: return "G6";
    case NamedGroup::G9: return "G9";
    }
    return "?";
}

inline std::string to_string(const SubgroupSpec& s) {
    std::ostringstream os;
    switch (s.family) {
    case Family::Sym:
        os << "S(" << s.a << ")";
        break;
    case Family::Alt:
        os << "A(" << s.a << ")";
        break;
    case Family::Trivial:
        os << "Id(" << s.a << ")";
        break;
    case Family::CyclicWreath:
        os << "CwrS(" << s.a << "," << s.b << ")";
        break;
    case Family::WreathTop:
        os << "WrTop(" << s.a << "):" << member_name(s.top_member);
        break;
    case Family::WreathBottom:
        os << "WrBottom(" << s.a << "):" << member_name(s.bottom_member);
        break;
    case Family::Named:
        os << named_group_name(s.named);
        break;
    case Family::Product: {
        const SubgroupSpec& x = s.children[0];
        const SubgroupSpec& y = s.children[1];
        auto factor_letter = [](const SubgroupSpec& f) -> char {
            if (f.family == Family::Sym) return 'S';
            if (f.family == Family::Alt) return 'A';
            return 0;
        };
        char cx = factor_letter(x), cy = factor_letter(y);
        if (cx && cy) {
            os << cx << 'x' << cy << '(' << x.a << ',' << y.a << ')';
        } else if (x.family == Family::Named && cy) {
            os << named_group_name(x.named) << 'x' << cy << "(n=" << ambient_n(s) << ")";
        } else {
            os << "Prod(" << to_string(x) << "," << to_string(y) << ")";
        }
        break;
    }
    case Family::AltCap:
        os << "AnCap(" << to_string(s.children[0]) << ")";
        break;
    case Family::Stabilized:
        os << "Fix(" << to_string(s.children[0]) << "," << s.a << ")";
        break;
    case Family::Twist: {
        const char* tag = s.twist == TwistKind::Sgn ? "sgn" : s.twist == TwistKind::Psi ? "psi" : "theta";
        os << "Twist(" << to_string(s.children[0]) << "," << tag << ")";
        break;
    }
    }
    return os.str();
}

namespace detail {

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : text_(text) {}

    SubgroupSpec parse() {
        SubgroupSpec s = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after spec");
        return s;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw SpecError("cannot parse subgroup spec \"" + text_ + "\": " + why);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a name");
        return text_.substr(start, pos_ - start);
    }

    int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    Partition partition_arg() {
        skip_ws();
        if (peek() != '[') fail("expected a partition like [3,3,1]");
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
        if (pos_ == text_.size()) fail("unterminated partition");
        ++pos_;
        return parse_partition(text_.substr(start, pos_ - start));
    }

    WrTopMember top_member(const std::string& name) {
        if (name == "whole") return WrTopMember::Whole;
        if (name == "SxS") return WrTopMember::SxS;
        if (name == "AnCap") return WrTopMember::AnCap;
        if (name == "Gamma") return WrTopMember::Gamma;
        if (name == "SxA") return WrTopMember::SxA;
        if (name == "AnCapSxS") return WrTopMember::AnCapSxS;
        if (name == "AwrS2") return WrTopMember::AwrS2;
        if (name == "AxA") return WrTopMember::AxA;
        fail("unknown WrTop member \"" + name + "\"");
    }

    WrBottomMember bottom_member(const std::string& name) {
        if (name == "whole") return WrBottomMember::Whole;
        if (name == "HS") return WrBottomMember::HS;
        if (name == "S2wrA") return WrBottomMember::S2wrA;
        if (name == "Delta") return WrBottomMember::Delta;
        if (name == "HA") return WrBottomMember::HA;
        fail("unknown WrBottom member \"" + name + "\"");
    }

    SubgroupSpec factor_by_letter(char c, int m) {
        if (c == 'S') return SubgroupSpec::sym(m);
        if (c == 'A') return SubgroupSpec::alt(m);
        fail("unknown factor letter");
    }

    SubgroupSpec parse_spec() {
        std::string name = ident();

        // two-letter product sugar: SxS, SxA, AxS, AxA
        if (name.size() == 3 && name[1] == 'x' && (name[0] == 'S' || name[0] == 'A') &&
            (name[2] == 'S' || name[2] == 'A')) {
            expect('(');
            int a = integer();
            expect(',');
            int b = integer();
            expect(')');
            return SubgroupSpec::product(factor_by_letter(name[0], a), factor_by_letter(name[2], b));
        }

        // named groups and their product sugar: G5, G5xS(n=...), G5xA(n=...)
        if (name.size() >= 2 && name[0] == 'G' &&
            (name.substr(0, 2) == "G5" || name.substr(0, 2) == "G6" || name.substr(0, 2) == "G9")) {
            NamedGroup g = name[1] == '5' ? NamedGroup::G5 : name[1] == '6' ? NamedGroup::G6 : NamedGroup::G9;
            int k = name[1] == '5' ? 5 : name[1] == '6' ? 6 : 9;
            if (name.size() == 2) return SubgroupSpec::named_group(g);
            if (name.size() == 4 && name[2] == 'x' && (name[3] == 'S' || name[3] == 'A')) {
                expect('(');
                std::string key = ident();
                if (key != "n") fail("expected n=... in " + name);
                expect('=');
                int n = integer();
                expect(')');
                if (n < k) fail("ambient n too small for " + name);
                return SubgroupSpec::product(SubgroupSpec::named_group(g),
                                             factor_by_letter(name[3], n - k));
            }
            fail("unknown named group form \"" + name + "\"");
        }

        if (name == "S" || name == "A" || name == "Id") {
            expect('(');
            int m = integer();
            expect(')');
            if (name == "S") return SubgroupSpec::sym(m);
            if (name == "A") return SubgroupSpec::alt(m);
            return SubgroupSpec::trivial(m);
        }
        if (name == "CwrS") {
            expect('(');
            int l = integer();
            expect(',');
            int m = integer();
            expect(')');
            return SubgroupSpec::cyclic_wreath(l, m);
        }
        if (name == "WrTop" || name == "WrBottom") {
            expect('(');
            int k = integer();
            expect(')');
            expect(':');
            std::string member = ident();
            if (name == "WrTop") return SubgroupSpec::wreath_top(k, top_member(member));
            return SubgroupSpec::wreath_bottom(k, bottom_member(member));
        }
        if (name == "Cent") {
            expect('(');
            Partition t = partition_arg();
            expect(')');
            return centralizer_spec(t);
        }
        if (name == "Prod") {
            expect('(');
            SubgroupSpec x = parse_spec();
            expect(',');
            SubgroupSpec y = parse_spec();
            expect(')');
            return SubgroupSpec::product(std::move(x), std::move(y));
        }
        if (name == "AnCap") {
            expect('(');
            SubgroupSpec x = parse_spec();
            expect(')');
            return SubgroupSpec::alt_cap(std::move(x));
        }
        if (name == "Fix") {
            expect('(');
            SubgroupSpec x = parse_spec();
            expect(',');
            int f = integer();
            expect(')');
            return SubgroupSpec::stabilized(std::move(x), f);
        }
        if (name == "Twist") {
            expect('(');
            SubgroupSpec x = parse_spec();
            expect(',');
            std::string tag = ident();
            if (tag == "sgn" && peek() == '@') {
                ++pos_;
                int factor = integer();
                expect(')');
                if (x.family != Family::Product) fail("sgn@i needs a product spec");
                if (factor != 1 && factor != 2) fail("sgn@i: factor must be 1 or 2");
                SubgroupSpec& slot = x.children[static_cast<std::size_t>(factor - 1)];
                slot = SubgroupSpec::twisted(std::move(slot), TwistKind::Sgn);
                return x;
            }
            expect(')');
            if (tag == "trivial") return x;
            if (tag == "sgn") return SubgroupSpec::twisted(std::move(x), TwistKind::Sgn);
            if (tag == "psi") return SubgroupSpec::twisted(std::move(x), TwistKind::Psi);
            if (tag == "theta") return SubgroupSpec::twisted(std::move(x), TwistKind::Theta);
            fail("unknown twist tag \"" + tag + "\"");
        }
        fail("unknown family \"" + name + "\"");
    }
};

} // namespace detail

inline SubgroupSpec parse_subgroup_spec(const std::string& text) {
    return detail::SpecParser(text).parse();
}

} // namespace mfsym

#endif // MFSYM_SUBGROUPS_HPP
