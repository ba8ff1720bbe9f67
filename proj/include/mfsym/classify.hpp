#ifndef MFSYM_CLASSIFY_HPP
#define MFSYM_CLASSIFY_HPP

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mfsym/characters.hpp"
#include "mfsym/partition.hpp"
#include "mfsym/report.hpp"
#include "mfsym/subgroups.hpp"

/* The classification layer.  Two fully independent evaluation paths are
 * kept side by side: "brute" goes through class distributions and
 * border-strip character sums, "symbolic" assembles decompositions from
 * partition combinatorics alone (two-row sums, even-partition sums,
 * diagonal-hook doubles, node additions).  Verification demands exact
 * agreement wherever both paths are feasible.
 */

namespace mfsym {

enum class Method { Brute, Symbolic, Both };

inline Method parse_method(const std::string& name) {
    if (name == "brute") return Method::Brute;
    if (name == "symbolic") return Method::Symbolic;
    if (name == "both") return Method::Both;
    throw SpecError("unknown method \"" + name + "\" (want brute, symbolic or both)");
}

/* ---- closed-form building blocks ---- */

// multiplicity 1 on every partition of n with exactly f odd parts
inline IrrDecomposition irs_expected(int n, int f) {
    if (f < 0 || f > n || (n - f) % 2 != 0)
        throw std::invalid_argument("irs_expected: need 0 <= f <= n with n = f (mod 2)");
    IrrDecomposition d(n);
    for_each_partition(n, [&](const std::vector<int>& parts) {
        int odd = 0;
        for (int p : parts)
            if (p % 2 != 0) ++odd;
        if (odd == f) d.add(Partition(parts));
    });
    return d;
}

// sum of chi^{(2k-2i,2i)} over 0 <= i <= k/2
inline IrrDecomposition even_two_row_sum(int k) {
    IrrDecomposition d(2 * k);
    for (int i = 0; 2 * i <= k; ++i)
        d.add(i == 0 ? Partition{2 * k} : Partition{2 * k - 2 * i, 2 * i});
    return d;
}

// sum of chi^{(2k-2i-1,2i+1)} over 0 <= i <= (k-1)/2
inline IrrDecomposition odd_two_row_sum(int k) {
    IrrDecomposition d(2 * k);
    for (int i = 0; 2 * i + 1 <= k; ++i) d.add(Partition{2 * k - 2 * i - 1, 2 * i + 1});
    return d;
}

// sum of chi^{(2k-i,i)} over 0 <= i <= k
inline IrrDecomposition full_two_row_sum(int k) {
    IrrDecomposition d(2 * k);
    for (int i = 0; i <= k; ++i)
        d.add(i == 0 ? Partition{2 * k} : Partition{2 * k - i, i});
    return d;
}

// sum over even partitions of 2k (all parts even), i.e. doubled partitions of k
inline IrrDecomposition even_partition_sum(int k) {
    IrrDecomposition d(2 * k);
    for_each_partition(k, [&](const std::vector<int>& parts) {
        std::vector<int> doubled;
        doubled.reserve(parts.size());
        for (int p : parts) doubled.push_back(2 * p);
        d.add(Partition(std::move(doubled)));
    });
    return d;
}

// sum of chi^{2[alpha]} over partitions alpha of k with distinct parts
inline IrrDecomposition distinct_hook_sum(int k) {
    IrrDecomposition d(2 * k);
    for (const DistinctPartition& alpha : distinct_partitions_of(k))
        d.add(double_bracket(alpha));
    return d;
}

inline Partition hook_partition(int row, int ones) {
    std::vector<int> parts{row};
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(parts));
}

/* ---- symbolic decompositions ---- */

namespace detail {

// how a factor of a direct product can be absorbed by node additions
enum class FactorKind { None, Young, YoungAndPieri, Pieri };

inline FactorKind factor_kind(const SubgroupSpec& s) {
    if (s.family == Family::Sym) return FactorKind::Young;
    if (s.family == Family::Alt) return s.a <= 1 ? FactorKind::Young : FactorKind::YoungAndPieri;
    if (s.family == Family::Twist && s.twist == TwistKind::Sgn &&
        s.children[0].family == Family::Sym)
        return s.children[0].a <= 1 ? FactorKind::Young : FactorKind::Pieri;
    return FactorKind::None;
}

} // namespace detail

inline IrrDecomposition symbolic_decomposition(const SubgroupSpec& s, int n);

namespace detail {

inline IrrDecomposition symbolic_base(const SubgroupSpec& s) {
    int n = ambient_n(s);
    switch (s.family) {
    case Family::Sym: {
        IrrDecomposition d(n);
        d.add(n == 0 ? Partition{} : Partition{n});
        return d;
    }
    case Family::Alt: {
        IrrDecomposition d(n);
        d.add(n == 0 ? Partition{} : Partition{n});
        if (n >= 2) d.add(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        return d;
    }
    case Family::Trivial: {
        // regular character
        IrrDecomposition d(n);
        for (const Partition& lambda : partitions_of(n)) d.add(lambda, degree(lambda));
        return d;
    }
    case Family::CyclicWreath:
        if (s.a == 1) return symbolic_base(SubgroupSpec::sym(s.b));
        if (s.a == 2)
            return symbolic_base(SubgroupSpec::wreath_bottom(s.b, WrBottomMember::Whole));
        throw SpecError("no closed form for " + to_string(s));
    case Family::WreathTop: {
        int k = s.a;
        switch (s.top_member) {
        case WrTopMember::Whole:
            return even_two_row_sum(k);
        case WrTopMember::SxS:
            return full_two_row_sum(k);
        case WrTopMember::AnCap: {
            IrrDecomposition d = even_two_row_sum(k);
            d.add_all(sign_twist(even_two_row_sum(k)));
            return d;
        }
        case WrTopMember::Gamma: {
            IrrDecomposition d = even_two_row_sum(k);
            d.add_all(sign_twist(odd_two_row_sum(k)));
            return d;
        }
        case WrTopMember::SxA: {
            IrrDecomposition d = full_two_row_sum(k);
            d.add(hook_partition(k + 1, k - 1));
            d.add(hook_partition(k, k));
            return d;
        }
        case WrTopMember::AnCapSxS: {
            IrrDecomposition d = full_two_row_sum(k);
            d.add_all(sign_twist(full_two_row_sum(k)));
            return d;
        }
        case WrTopMember::AwrS2: {
            IrrDecomposition d = even_two_row_sum(k);
            d.add(hook_partition(k + 1, k - 1));
            d.add(hook_partition(k, k));
            d.add_all(sign_twist(k % 2 == 0 ? even_two_row_sum(k) : odd_two_row_sum(k)));
            return d;
        }
        case WrTopMember::AxA:
            return symbolic_base(
                SubgroupSpec::product(SubgroupSpec::alt(k), SubgroupSpec::alt(k)));
        }
        break;
    }
    case Family::WreathBottom: {
        int k = s.a;
        switch (s.bottom_member) {
        case WrBottomMember::Whole:
            return even_partition_sum(k);
        case WrBottomMember::HS: {
            IrrDecomposition d = even_partition_sum(k);
            d.add_all(sign_twist(even_partition_sum(k)));
            return d;
        }
        case WrBottomMember::S2wrA: {
            IrrDecomposition d = even_partition_sum(k);
            d.add_all(distinct_hook_sum(k));
            return d;
        }
        case WrBottomMember::Delta: {
            IrrDecomposition d = even_partition_sum(k);
            d.add_all(sign_twist(distinct_hook_sum(k)));
            return d;
        }
        case WrBottomMember::HA: {
            IrrDecomposition d = even_partition_sum(k);
            d.add_all(sign_twist(even_partition_sum(k)));
            d.add_all(distinct_hook_sum(k));
            d.add_all(sign_twist(distinct_hook_sum(k)));
            return d;
        }
        }
        break;
    }
    case Family::Named: {
        IrrDecomposition d(n);
        switch (s.named) {
        case NamedGroup::G5:
            d.add(Partition{5});
            d.add(Partition{2, 2, 1});
            return d;
        case NamedGroup::G6:
            d.add(Partition{6});
            d.add(Partition{2, 2, 2});
            return d;
        case NamedGroup::G9:
            d.add(Partition{9});
            d.add(Partition{1, 1, 1, 1, 1, 1, 1, 1, 1});
            d.add(Partition{5, 1, 1, 1, 1});
            d.add(Partition{4, 4, 1});
            d.add(Partition{3, 2, 2, 2});
            return d;
        }
        break;
    }
    case Family::Product: {
        const SubgroupSpec* inducer = &s.children[1];
        const SubgroupSpec* base = &s.children[0];
        FactorKind kind = factor_kind(*inducer);
        if (kind == FactorKind::None) {
            std::swap(inducer, base);
            kind = factor_kind(*inducer);
        }
        if (kind == FactorKind::None)
            throw SpecError("no closed form for " + to_string(s));
        IrrDecomposition inner = symbolic_base(*base);
        switch (kind) {
        case FactorKind::Young:
            return young_induce(inner, n);
        case FactorKind::Pieri:
            return pieri_induce(inner, n);
        case FactorKind::YoungAndPieri: {
            IrrDecomposition d = young_induce(inner, n);
            d.add_all(pieri_induce(inner, n));
            return d;
        }
        case FactorKind::None:
            break;
        }
        break;
    }
    case Family::AltCap: {
        IrrDecomposition inner = symbolic_base(s.children[0]);
        if (!has_odd_elements(s.children[0])) return inner;
        IrrDecomposition d = inner;
        d.add_all(sign_twist(inner));
        return d;
    }
    case Family::Stabilized: {
        IrrDecomposition d = symbolic_base(s.children[0]);
        for (int i = 0; i < s.a; ++i) d = branch_induce(d);
        return d;
    }
    case Family::Twist: {
        const SubgroupSpec& child = s.children[0];
        switch (s.twist) {
        case TwistKind::Sgn:
            return sign_twist(symbolic_base(child));
        case TwistKind::Psi:
            if (child.family != Family::WreathTop || child.top_member != WrTopMember::Whole)
                throw SpecError("psi twist is defined on WrTop(k):whole only");
            return odd_two_row_sum(child.a);
        case TwistKind::Theta:
            if (child.family != Family::WreathBottom ||
                child.bottom_member != WrBottomMember::Whole)
                throw SpecError("theta twist is defined on WrBottom(k):whole only");
            return distinct_hook_sum(child.a);
        }
        break;
    }
    }
    throw SpecError("no closed form for " + to_string(s));
}

} // namespace detail

/* Decomposition assembled from partition combinatorics only; n must be
 * the ambient degree of the spec.
 */
inline IrrDecomposition symbolic_decomposition(const SubgroupSpec& s, int n) {
    if (n != ambient_n(s))
        throw std::invalid_argument("symbolic_decomposition: spec has ambient degree " +
                                    std::to_string(ambient_n(s)) + ", not " + std::to_string(n));
    return detail::symbolic_base(s);
}

/* ---- the monomial criterion ---- */

enum class LinearCharacter { Trivial, Sgn };

struct MonomialCheck {
    SubgroupSpec spec;
    IrrDecomposition decomposition;
    bool multiplicity_free = false;
    std::vector<MultiplicityViolation> violations;
};

/* (1_{C(x)} x theta) induced to S_n for x of the given fixed-point-free
 * cycle type; theta is a linear character of the complement S_{n-k}.
 */
inline MonomialCheck monomial_check(const CycleType& x_type, LinearCharacter theta, int n,
                                    ColumnCache* cache = nullptr) {
    for (int p : x_type.parts())
        if (p == 1) throw std::invalid_argument("monomial_check: x must be fixed-point-free");
    int k = x_type.n();
    if (k > n) throw std::invalid_argument("monomial_check: |x| exceeds n");
    SubgroupSpec spec = centralizer_spec(x_type);
    if (n > k) {
        SubgroupSpec factor = SubgroupSpec::sym(n - k);
        if (theta == LinearCharacter::Sgn && n - k >= 2)
            factor = SubgroupSpec::twisted(std::move(factor), TwistKind::Sgn);
        spec = SubgroupSpec::product(std::move(spec), std::move(factor));
    }
    MonomialCheck out{spec, decompose(class_distribution(spec), cache), false, {}};
    MultiplicityCheck mf = is_multiplicity_free(out.decomposition);
    out.multiplicity_free = mf.multiplicity_free;
    out.violations = std::move(mf.violations);
    return out;
}

/* ---- class actions of S_n on its conjugacy classes ---- */

// cycle types with a multiplicity-free class action, degrees 2..6
inline std::vector<Partition> small_class_action_table(int n) {
    switch (n) {
    case 2: return {Partition{2}};
    case 3: return {Partition{2, 1}, Partition{3}};
    case 4: return {Partition{2, 1, 1}, Partition{2, 2}, Partition{3, 1}, Partition{4}};
    case 5:
        return {Partition{2, 1, 1, 1}, Partition{2, 2, 1}, Partition{3, 1, 1}, Partition{3, 2}};
    case 6:
        return {Partition{2, 1, 1, 1, 1}, Partition{2, 2, 2}, Partition{3, 1, 1, 1},
                Partition{3, 3}};
    }
    throw std::invalid_argument("small_class_action_table: degree out of range");
}

inline VerificationReport prop6_verify(int n) {
    if (n < 2 || n > 12)
        throw std::invalid_argument("prop6_verify: supported for 2 <= n <= 12");
    VerificationReport report;
    report.scope = "class-actions n=" + std::to_string(n);
    ColumnCache cache(n);

    auto expected_mf = [&](const Partition& rho) {
        if (n <= 6) {
            for (const Partition& t : small_class_action_table(n))
                if (t == rho) return true;
            return false;
        }
        if (rho == detail::with_fixed_points(Partition{2}, n - 2)) return true;
        if (rho == detail::with_fixed_points(Partition{3}, n - 3)) return true;
        int m = n / 2;
        CycleType pairs(std::vector<int>(static_cast<std::size_t>(m), 2));
        if (rho == (n % 2 == 0 ? pairs : detail::with_fixed_points(pairs, 1))) return true;
        return false;
    };

    auto is_three_cycle_type = [&](const Partition& rho) {
        // (3^m) or (3^m,1)
        int threes = 0, ones = 0;
        for (int p : rho.parts()) {
            if (p == 3) ++threes;
            else if (p == 1) ++ones;
            else return false;
        }
        return threes >= 1 && ones <= 1;
    };

    Partition two_row = n >= 4 ? Partition{n - 2, 2} : Partition{n};

    for (const Partition& rho : partitions_of(n)) {
        if (rho.length() == n) continue; // identity class
        IrrDecomposition d = decompose(class_distribution(centralizer_spec(rho)), &cache);
        MultiplicityCheck mf = is_multiplicity_free(d);
        bool want = expected_mf(rho);
        std::string id = "class " + rho.to_string();
        std::string anchor = n <= 6 ? "class-action-table" : "class-action-classification";
        std::string witness;
        if (!mf.multiplicity_free)
            witness = "multiplicity " + mf.violations.front().mult.str() + " at " +
                      mf.violations.front().lambda.to_string();
        else if (!want)
            witness = "unexpectedly multiplicity-free";
        report.add(id, anchor, mf.multiplicity_free == want, witness);

        if (n >= 7 && !mf.multiplicity_free) {
            bool clause = d.mult(two_row) > 1 || is_three_cycle_type(rho);
            report.add(id + " failure-mode", "class-action-classification", clause,
                       "mult at " + two_row.to_string() + " = " + d.mult(two_row).str());
        }

        if (n == 7 && rho == Partition{3, 3, 1}) {
            report.add("witness (3,3,1)", "class-action-classification",
                       d.mult(Partition{3, 1, 1, 1, 1}) == 2,
                       "mult of [3,1^4] = " + d.mult(Partition{3, 1, 1, 1, 1}).str());
        }
        if (n == 9 && rho == Partition{3, 3, 3}) {
            report.add("witness (3,3,3) a", "class-action-classification",
                       d.mult(Partition{5, 2, 2}) == 2,
                       "mult of [5,2,2] = " + d.mult(Partition{5, 2, 2}).str());
            report.add("witness (3,3,3) b", "class-action-classification",
                       d.mult(Partition{4, 2, 1, 1, 1}) == 2,
                       "mult of [4,2,1^3] = " + d.mult(Partition{4, 2, 1, 1, 1}).str());
        }
    }

    // degree-sum identity: sum of irreducible degrees = involution count
    Integer degree_sum = 0;
    for (const Partition& lambda : partitions_of(n)) degree_sum += degree(lambda);
    report.add("degree-sum t_" + std::to_string(n), "involution-recurrence",
               degree_sum == involution_count(n), degree_sum.str());

    if (n == 10) {
        report.add("t_10", "involution-recurrence", involution_count(10) == 9496,
                   involution_count(10).str());
        Integer deg = exact_div(factorial(10), centralizer_order(Partition{3, 3, 3, 1}),
                                "class degree");
        report.add("class-degree (3,3,3,1)", "class-degree-bound",
                   deg == 22400 && deg > involution_count(10), deg.str());
    }
    return report;
}

/* ---- the two Diophantine criteria ---- */

struct DiophWitness {
    int s = 0;
    std::vector<int> b; // strictly decreasing positive
    int equation = 1;   // which of the admissible equations is satisfied

    std::string to_string() const {
        std::ostringstream os;
        os << "s=" << s << " b=(";
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) os << ',';
            os << b[i];
        }
        os << ") eq" << equation;
        return os.str();
    }
};

namespace detail {

// first strictly decreasing positive sequence of length s with the given
// sum, smallest-leading-value first; nullopt if none exists
inline std::optional<std::vector<int>> decreasing_sequence_with_sum(int s, int sum) {
    std::vector<int> b;
    auto rec = [&](auto&& self, int i, int remaining, int upper) -> bool {
        if (i == s) return remaining == 0;
        int tail = s - i - 1; // minimal room for the rest: tail terms below b_i
        for (int v = (remaining + s - i - 1) / (s - i); v <= upper; ++v) {
            int tail_min = tail * (tail + 1) / 2;
            int rest = remaining - v;
            if (rest < tail_min) break;
            // largest feasible tail sum: tail terms just below v
            long long tail_max = static_cast<long long>(tail) * v - tail * (tail + 1LL) / 2;
            if (rest > tail_max) continue;
            b.push_back(v);
            if (self(self, i + 1, rest, v - 1)) return true;
            b.pop_back();
        }
        return false;
    };
    if (s < 1 || sum < s * (s + 1) / 2) return std::nullopt;
    if (!rec(rec, 0, sum, sum)) return std::nullopt;
    return b;
}

} // namespace detail

// witness for k = 4*sum(b) + s or k = 4*sum(b) + s + 1
inline std::optional<DiophWitness> dioph_plus(int k) {
    if (k < 1) throw std::invalid_argument("dioph_plus: k must be >= 1");
    for (int s = 1; 4 * (s * (s + 1) / 2) + s <= k; ++s) {
        for (int eq = 1; eq <= 2; ++eq) {
            int rhs = k - s - (eq - 1);
            if (rhs < 0 || rhs % 4 != 0) continue;
            if (auto b = detail::decreasing_sequence_with_sum(s, rhs / 4))
                return DiophWitness{s, *b, eq};
        }
    }
    return std::nullopt;
}

// witness for k = 4*sum(b) - s
inline std::optional<DiophWitness> dioph_minus(int k) {
    if (k < 1) throw std::invalid_argument("dioph_minus: k must be >= 1");
    for (int s = 1; 4 * (s * (s + 1) / 2) - s <= k; ++s) {
        int rhs = k + s;
        if (rhs % 4 != 0) continue;
        if (auto b = detail::decreasing_sequence_with_sum(s, rhs / 4))
            return DiophWitness{s, *b, 1};
    }
    return std::nullopt;
}

// the even 2[alpha] encoded by a dioph_plus witness
inline DistinctPartition dioph_plus_alpha(const DiophWitness& w) {
    std::vector<int> a;
    for (int bi : w.b) {
        a.push_back(2 * bi + 1);
        a.push_back(2 * bi);
    }
    if (w.equation == 2) a.push_back(1);
    return DistinctPartition(std::move(a));
}

// the 2[alpha] with even conjugate encoded by a dioph_minus witness
inline DistinctPartition dioph_minus_alpha(const DiophWitness& w) {
    std::vector<int> a;
    for (int bi : w.b) {
        a.push_back(2 * bi);
        a.push_back(2 * bi - 1);
    }
    return DistinctPartition(std::move(a));
}

/* ---- the twisted wreath expansion ---- */

inline VerificationReport lemma8_verify(int k) {
    if (k < 2 || k > 6)
        throw std::invalid_argument("lemma8_verify: brute-force regime is 2 <= k <= 6");
    VerificationReport report;
    report.scope = "distinct-hook expansion k=" + std::to_string(k);

    IrrDecomposition expected(2 * k);
    for (const DistinctPartition& alpha : distinct_partitions_of(k))
        expected.add(double_bracket(alpha));

    SubgroupSpec twisted = SubgroupSpec::twisted(
        SubgroupSpec::wreath_bottom(k, WrBottomMember::Whole), TwistKind::Theta);
    IrrDecomposition computed = decompose(class_distribution(twisted));
    report.add("class-sum equals hook sum", "distinct-hook-expansion", computed == expected);

    MultiplicityCheck mf = is_multiplicity_free(expected);
    report.add("hook sum multiplicity-free", "distinct-hook-expansion", mf.multiplicity_free);

    // the twisted degree accounts for the full index
    Integer index = exact_div(factorial(2 * k), int_pow(2, k) * factorial(k), "index");
    report.add("degree equals index", "distinct-hook-expansion",
               computed.total_degree() == index, computed.total_degree().str());
    return report;
}

/* ---- the classification of multiplicity-free permutation characters ---- */

struct FamilyEntry {
    std::string case_tag;
    SubgroupSpec spec;
};

/* Subgroups asserted multiplicity-free at degree n.  Generated for
 * n >= 20 (the range the argument actually covers; the headline range
 * starts at 66).
 */
inline std::vector<FamilyEntry> theorem2_families(int n) {
    if (n < 20)
        throw std::invalid_argument(
            "theorem2_families: generated for n >= 20 only (stated range n >= 66)");
    using S = SubgroupSpec;
    std::vector<FamilyEntry> out;
    auto add = [&](const char* tag, SubgroupSpec spec) {
        out.push_back({tag, std::move(spec)});
    };

    add("a1", S::sym(n));
    add("a1", S::alt(n));
    add("a1", S::stabilized(S::sym(n - 1), 1));
    add("a1", S::stabilized(S::alt(n - 1), 1));
    add("a1", S::product(S::sym(n - 2), S::sym(2)));
    add("a1", S::product(S::alt(n - 2), S::sym(2)));
    add("a1", S::alt_cap(S::product(S::sym(n - 2), S::sym(2))));

    for (int k = 3; 2 * k < n - 1; ++k) {
        add("a2", S::product(S::sym(n - k), S::sym(k)));
        add("a2", S::product(S::alt(n - k), S::sym(k)));
        add("a2", S::product(S::sym(n - k), S::alt(k)));
        add("a2", S::product(S::alt(n - k), S::alt(k)));
        add("a2", S::alt_cap(S::product(S::sym(n - k), S::sym(k))));
    }

    if (n % 2 == 0) {
        int k = n / 2;
        add("b1", S::wreath_top(k, WrTopMember::Whole));
        add("b1", S::wreath_top(k, WrTopMember::SxS));
        add("b1", S::wreath_top(k, WrTopMember::AnCap));
        add("b1", S::wreath_top(k, WrTopMember::Gamma));
        add("b1", S::wreath_top(k, WrTopMember::SxA));
        add("b1", S::wreath_top(k, WrTopMember::AnCapSxS));
        add("b1", S::wreath_top(k, WrTopMember::AwrS2));
        add("c", S::wreath_bottom(k, WrBottomMember::Whole));
        if (k % 2 == 1) add("d", S::wreath_bottom(k, WrBottomMember::HS));
    } else {
        int k = (n - 1) / 2;
        add("b2", S::product(S::sym(k + 1), S::sym(k)));
        add("b2", S::product(S::alt(k + 1), S::sym(k)));
        add("b2", S::product(S::sym(k + 1), S::alt(k)));
        add("b2", S::alt_cap(S::product(S::sym(k + 1), S::sym(k))));
        add("b2", S::stabilized(S::wreath_top(k, WrTopMember::AnCap), 1));
        add("b2", S::stabilized(S::wreath_top(k, WrTopMember::Gamma), 1));
        // the index-1 member of the "index <= 2" reading; starred to keep
        // the overlap with the even-degree bookkeeping visible
        add("b2*", S::stabilized(S::wreath_top(k, WrTopMember::Whole), 1));
        add("c", S::stabilized(S::wreath_bottom(k, WrBottomMember::Whole), 1));
    }

    for (int k : {5, 6, 9}) {
        NamedGroup g = k == 5 ? NamedGroup::G5 : k == 6 ? NamedGroup::G6 : NamedGroup::G9;
        add("e", S::product(S::named_group(g), S::sym(n - k)));
        add("e", S::product(S::named_group(g), S::alt(n - k)));
        if (k != 9) add("e", S::alt_cap(S::product(S::named_group(g), S::sym(n - k))));
    }
    return out;
}

/* Boundary subgroups the classification proves are NOT multiplicity-free
 * at degree n, each with the reason it fails.
 */
inline std::vector<FamilyEntry> theorem2_non_members(int n) {
    if (n < 20) throw std::invalid_argument("theorem2_non_members: n >= 20 only");
    using S = SubgroupSpec;
    std::vector<FamilyEntry> out;
    auto add = [&](const char* tag, SubgroupSpec spec) {
        out.push_back({tag, std::move(spec)});
    };
    add("two fixed points", S::stabilized(S::sym(n - 2), 2));
    if (n % 2 == 0) {
        int k = n / 2;
        add("lattice bottom", S::product(S::alt(k), S::alt(k)));
        if (k % 2 == 0) add("even-partition collision", S::wreath_bottom(k, WrBottomMember::HS));
        if (dioph_plus(k)) add("soluble plus", S::wreath_bottom(k, WrBottomMember::S2wrA));
        if (dioph_minus(k)) add("soluble minus", S::wreath_bottom(k, WrBottomMember::Delta));
        add("index four", S::wreath_bottom(k, WrBottomMember::HA));
    } else {
        int k = (n - 1) / 2;
        add("lattice bottom", S::product(S::alt(k + 1), S::alt(k)));
        add("stabilized factor pair", S::stabilized(S::wreath_top(k, WrTopMember::SxS), 1));
        add("stabilized alternating wreath", S::stabilized(S::wreath_top(k, WrTopMember::AwrS2), 1));
        add("stabilized sign kernel", S::stabilized(S::wreath_bottom(k, WrBottomMember::HS), 1));
    }
    return out;
}

struct VerifyOptions {
    int brute_degree_cap = 23;
};

inline VerificationReport theorem2_verify(int n, Method method, VerifyOptions opts = {}) {
    std::vector<FamilyEntry> families = theorem2_families(n);
    std::vector<FamilyEntry> non_members = theorem2_non_members(n);
    bool brute = method == Method::Brute || method == Method::Both;
    bool symbolic = method == Method::Symbolic || method == Method::Both;
    if (brute && n > opts.brute_degree_cap)
        throw BudgetError("brute verification capped at degree " +
                          std::to_string(opts.brute_degree_cap) +
                          "; raise the budget or use --method symbolic");

    VerificationReport report;
    report.scope = "classification n=" + std::to_string(n);
    if (n < 66)
        report.note("range", "classification", "degree below the stated range (66); "
                                               "covered by the n >= 20 argument");

    ColumnCache cache(brute ? n : 0);

    auto evaluate = [&](const SubgroupSpec& spec) {
        std::optional<IrrDecomposition> ds, db;
        if (symbolic) ds = symbolic_decomposition(spec, n);
        if (brute) db = decompose(class_distribution(spec), &cache);
        return std::pair(std::move(ds), std::move(db));
    };

    for (const FamilyEntry& fam : families) {
        std::string id = "family(" + fam.case_tag + ") " + to_string(fam.spec);
        std::string anchor = "classification(" + fam.case_tag + ")";
        try {
            auto [ds, db] = evaluate(fam.spec);
            if (ds && db && !(*ds == *db)) {
                report.add(id, anchor, false, "symbolic and class-sum paths disagree");
                continue;
            }
            const IrrDecomposition& d = ds ? *ds : *db;
            MultiplicityCheck mf = is_multiplicity_free(d);
            std::string witness;
            if (!mf.multiplicity_free)
                witness = "multiplicity " + mf.violations.front().mult.str() + " at " +
                          mf.violations.front().lambda.to_string();
            else if (ds && db)
                witness = "paths agree";
            report.add(id, anchor, mf.multiplicity_free, witness);
        } catch (const SpecError& e) {
            report.add(id, anchor, false, e.what());
        }
    }

    for (const FamilyEntry& entry : non_members) {
        std::string id = "non-member " + to_string(entry.spec);
        try {
            auto [ds, db] = evaluate(entry.spec);
            if (ds && db && !(*ds == *db)) {
                report.add(id, "classification:boundary", false,
                           "symbolic and class-sum paths disagree");
                continue;
            }
            const IrrDecomposition& d = ds ? *ds : *db;
            MultiplicityCheck mf = is_multiplicity_free(d);
            std::string witness = mf.multiplicity_free
                                      ? "unexpectedly multiplicity-free"
                                      : "multiplicity " + mf.violations.front().mult.str() +
                                            " at " + mf.violations.front().lambda.to_string();
            bool pass = !mf.multiplicity_free;

            // the wreath-bottom failures must match their Diophantine witnesses
            if (pass && entry.spec.family == Family::WreathBottom &&
                entry.spec.bottom_member == WrBottomMember::S2wrA) {
                Partition predicted = double_bracket(dioph_plus_alpha(*dioph_plus(entry.spec.a)));
                pass = d.mult(predicted) > 1;
                witness += "; predicted " + predicted.to_string();
            }
            if (pass && entry.spec.family == Family::WreathBottom &&
                entry.spec.bottom_member == WrBottomMember::Delta) {
                Partition predicted =
                    conjugate(double_bracket(dioph_minus_alpha(*dioph_minus(entry.spec.a))));
                pass = d.mult(predicted) > 1;
                witness += "; predicted " + predicted.to_string();
            }
            report.add(id, "classification:boundary (" + entry.case_tag + ")", pass, witness);
        } catch (const SpecError& e) {
            report.add(id, "classification:boundary", false, e.what());
        }
    }

    // computed status of the remaining intersection candidate; equal as a
    // set of elements to the even-complement product, so reported only
    {
        SubgroupSpec candidate = SubgroupSpec::alt_cap(
            SubgroupSpec::product(SubgroupSpec::named_group(NamedGroup::G9), SubgroupSpec::sym(n - 9)));
        try {
            auto [ds, db] = evaluate(candidate);
            const IrrDecomposition& d = ds ? *ds : *db;
            MultiplicityCheck mf = is_multiplicity_free(d);
            report.note("candidate " + to_string(candidate), "classification(e)",
                        mf.multiplicity_free ? "computed multiplicity-free"
                                             : "computed not multiplicity-free");
        } catch (const SpecError& e) {
            report.note("candidate " + to_string(candidate), "classification(e)", e.what());
        }
    }
    return report;
}

/* ---- which irreducibles appear at all ---- */

struct CorollaryMembership {
    bool member = false;
    std::vector<std::string> cases;
};

inline const std::vector<Partition>& column_strip_bases() {
    static const std::vector<Partition> bases = {
        Partition{2, 2, 1}, Partition{2, 2, 2}, Partition{5, 1, 1, 1, 1},
        Partition{4, 4, 1}, Partition{3, 2, 2, 2}};
    return bases;
}

inline const std::vector<Partition>& row_strip_bases() {
    static const std::vector<Partition> bases = {
        Partition{3, 2},    Partition{3, 3},          Partition{2, 2, 1}, Partition{2, 2, 2},
        Partition{5, 1, 1, 1, 1}, Partition{4, 4, 1}, Partition{3, 2, 2, 2}};
    return bases;
}

/* Can chi^lambda appear in a multiplicity-free permutation character?
 * The seven clauses; backed by the classification for |lambda| >= 66,
 * computable for any lambda.
 */
inline CorollaryMembership corollary5_member(const Partition& lambda) {
    CorollaryMembership out;
    int n = lambda.n();
    if (lambda.length() <= 2 || lambda.part(0) <= 2) out.cases.push_back("1");
    if (lambda.part(1) <= 1) out.cases.push_back("2");
    if (n % 2 == 1) {
        Partition mu = conjugate(lambda);
        if (mu.length() == 3 && mu.part(2) == 1) out.cases.push_back("3");
    }
    if (odd_part_count(lambda) <= 1) out.cases.push_back("4");
    if (n % 4 == 2 && is_even(conjugate(lambda))) out.cases.push_back("5");
    for (const Partition& base : column_strip_bases()) {
        if (horizontal_strip_over(lambda, base)) {
            out.cases.push_back("6");
            break;
        }
    }
    for (const Partition& base : row_strip_bases()) {
        if (vertical_strip_over(lambda, base)) {
            out.cases.push_back("7");
            break;
        }
    }
    out.member = !out.cases.empty();
    return out;
}

/* Set equality between the union of supports over the classified
 * families and the clause predicate, checked partition by partition.
 */
inline VerificationReport corollary5_verify(int n) {
    VerificationReport report;
    report.scope = "constituent-classes n=" + std::to_string(n);
    if (n < 66)
        report.note("range", "constituent-classes",
                    "degree below the stated range (66); comparison still exact");

    std::set<Partition> support;
    for (const FamilyEntry& fam : theorem2_families(n)) {
        IrrDecomposition d = symbolic_decomposition(fam.spec, n);
        for (const auto& [lambda, c] : d.terms()) support.insert(lambda);
    }

    long long checked = 0, members = 0;
    std::string first_missing, first_extra;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        Partition lambda(parts);
        ++checked;
        bool in_support = support.count(lambda) > 0;
        bool member = corollary5_member(lambda).member;
        if (member) ++members;
        if (member && !in_support && first_missing.empty()) first_missing = lambda.to_string();
        if (!member && in_support && first_extra.empty()) first_extra = lambda.to_string();
    });

    report.add("every clause member appears", "constituent-classes", first_missing.empty(),
               first_missing.empty() ? std::to_string(members) + " members over " +
                                           std::to_string(checked) + " partitions"
                                     : "missing " + first_missing);
    report.add("every constituent satisfies a clause", "constituent-classes",
               first_extra.empty(),
               first_extra.empty() ? std::to_string(static_cast<long long>(support.size())) +
                                         " support labels"
                                   : "extra " + first_extra);

    if (n >= 7) {
        Partition probe{n - 4, 3, 1};
        bool excluded = !corollary5_member(probe).member && support.count(probe) == 0;
        report.add("(n-4,3,1) excluded", "constituent-classes", excluded, probe.to_string());
    }
    return report;
}

/* ---- stability under one extra point ---- */

inline VerificationReport corollary6_verify(int n) {
    std::vector<FamilyEntry> families = theorem2_families(n);
    VerificationReport report;
    report.scope = "point-extension stability n=" + std::to_string(n);

    auto expected_survivor = [&](const SubgroupSpec& spec) {
        if (spec == SubgroupSpec::sym(n) || spec == SubgroupSpec::alt(n)) return true;
        if (n % 2 != 0) return false;
        int k = n / 2;
        return spec == SubgroupSpec::wreath_bottom(k, WrBottomMember::Whole) ||
               spec == SubgroupSpec::wreath_top(k, WrTopMember::Whole) ||
               spec == SubgroupSpec::wreath_top(k, WrTopMember::AnCap) ||
               spec == SubgroupSpec::wreath_top(k, WrTopMember::Gamma);
    };

    for (const FamilyEntry& fam : families) {
        IrrDecomposition next = branch_induce(symbolic_decomposition(fam.spec, n));
        bool survives = is_multiplicity_free(next).multiplicity_free;
        bool want = expected_survivor(fam.spec);
        report.add("extend " + to_string(fam.spec), "point-extension-stability",
                   survives == want,
                   survives ? "still multiplicity-free" : "fails after extension");
    }
    return report;
}

/* ---- catalog of small instances for sweeps ---- */

inline std::vector<SubgroupSpec> standard_spec_instances(int max_n) {
    using S = SubgroupSpec;
    std::vector<SubgroupSpec> out;
    for (int m = 1; m <= max_n; ++m) {
        out.push_back(S::sym(m));
        out.push_back(S::alt(m));
    }
    for (int a = 1; a <= max_n; ++a)
        for (int b = 1; a + b <= max_n && b <= a; ++b) {
            out.push_back(S::product(S::sym(a), S::sym(b)));
            out.push_back(S::product(S::alt(a), S::sym(b)));
            out.push_back(S::product(S::sym(a), S::alt(b)));
            out.push_back(S::product(S::alt(a), S::alt(b)));
            out.push_back(S::alt_cap(S::product(S::sym(a), S::sym(b))));
        }
    for (int k = 2; 2 * k <= max_n; ++k) {
        for (WrTopMember m : {WrTopMember::Whole, WrTopMember::SxS, WrTopMember::AnCap,
                              WrTopMember::Gamma, WrTopMember::SxA, WrTopMember::AnCapSxS,
                              WrTopMember::AwrS2, WrTopMember::AxA})
            out.push_back(S::wreath_top(k, m));
        for (WrBottomMember m : {WrBottomMember::Whole, WrBottomMember::HS, WrBottomMember::S2wrA,
                                 WrBottomMember::Delta, WrBottomMember::HA})
            out.push_back(S::wreath_bottom(k, m));
    }
    for (int l = 2; l <= max_n; ++l)
        for (int m = 1; l * m <= max_n; ++m) out.push_back(S::cyclic_wreath(l, m));
    if (max_n >= 5) out.push_back(S::named_group(NamedGroup::G5));
    if (max_n >= 6) {
        out.push_back(S::named_group(NamedGroup::G6));
        out.push_back(S::stabilized(S::named_group(NamedGroup::G5), 1));
    }
    if (max_n >= 7) out.push_back(S::product(S::named_group(NamedGroup::G5), S::sym(max_n - 5)));
    if (max_n >= 9) out.push_back(S::named_group(NamedGroup::G9));
    if (max_n >= 10)
        out.push_back(S::alt_cap(S::product(S::named_group(NamedGroup::G9), S::sym(max_n - 9))));
    return out;
}

// orbit-count identity over the catalog
inline VerificationReport orbit_identity_verify(int max_n) {
    VerificationReport report;
    report.scope = "orbit-count identity n<=" + std::to_string(max_n);
    for (const SubgroupSpec& spec : standard_spec_instances(max_n)) {
        int n = ambient_n(spec);
        if (n < 1 || n > max_n) continue;
        IrrDecomposition d = decompose(class_distribution(spec));
        bool ok = true;
        std::string witness;
        Integer prev = subset_orbit_count(spec, 0);
        for (int r = 1; 2 * r <= n; ++r) {
            Integer cur = subset_orbit_count(spec, r);
            Partition two_row = r == n - r ? Partition{r, r} : Partition{n - r, r};
            if (d.mult(two_row) != cur - prev) {
                ok = false;
                witness = "r=" + std::to_string(r);
                break;
            }
            prev = cur;
        }
        report.add("orbits " + to_string(spec), "two-row-orbit-count", ok, witness);
    }
    for (int l = 2; l <= 6; ++l) {
        for (int m : {2, 3}) {
            if (l * m > max_n) continue;
            Integer got = subset_orbit_count(SubgroupSpec::cyclic_wreath(l, m), 2);
            report.add("pair orbits CwrS(" + std::to_string(l) + "," + std::to_string(m) + ")",
                       "two-row-orbit-count", got == l / 2 + 1, got.str());
        }
    }
    return report;
}

// the fixed-point-free involution series against its expected support
inline VerificationReport irs_verify(int max_n) {
    VerificationReport report;
    report.scope = "fpf-involution series n<=" + std::to_string(max_n);
    for (int n = 2; n <= max_n; ++n) {
        ColumnCache cache(n);
        for (int f = n % 2; f <= n; f += 2) {
            int m = (n - f) / 2;
            CycleType x(std::vector<int>(static_cast<std::size_t>(m), 2));
            MonomialCheck mc = monomial_check(x, LinearCharacter::Sgn, n, &cache);
            bool ok = mc.decomposition == irs_expected(n, f);
            report.add("n=" + std::to_string(n) + " f=" + std::to_string(f),
                       "fpf-involution-series", ok);
        }
    }
    return report;
}

} // namespace mfsym

#endif // MFSYM_CLASSIFY_HPP
