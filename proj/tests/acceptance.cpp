#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mfsym/classify.hpp"
#include "oracles.hpp"

/* Acceptance suite: one pass/fail line per criterion, exit 0 only if
 * every criterion holds.  All comparisons are exact; the stated time
 * limits are asserted as part of the criteria.
 */

using namespace mfsym;
using S = SubgroupSpec;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

int failures = 0;

void run_criterion(int number, const std::string& label, double time_limit_s,
                   const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    auto start = Clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.require(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (time_limit_s > 0 && seconds > time_limit_s) {
        std::ostringstream os;
        os << "exceeded " << time_limit_s << " s";
        outcome.require(false, os.str());
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << number << "  " << label
              << "  (" << std::fixed << std::setprecision(2) << seconds << " s)";
    if (!outcome.detail.empty()) std::cout << "  [" << outcome.detail << "]";
    std::cout << std::endl;
}

void require_report(Outcome& outcome, const VerificationReport& report) {
    for (const CheckResult& c : report.checks)
        if (!c.informational)
            outcome.require(c.pass, report.scope + " / " + c.id +
                                        (c.witness.empty() ? "" : " (" + c.witness + ")"));
}

Partition hook(int row, int ones) {
    std::vector<int> parts{row};
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(parts));
}

/* element-walk distributions for criterion 9 */

SignedClassDistribution walk_distribution(int n, Integer order) {
    SignedClassDistribution d;
    d.n = n;
    d.order = std::move(order);
    return d;
}

} // namespace

int main() {
    run_criterion(1, "projective-group decomposition at degree 9", 5.0, [](Outcome& o) {
        SignedClassDistribution dist = class_distribution(S::named_group(NamedGroup::G9));
        o.require(dist.order == 1512, "closure order");
        IrrDecomposition d = decompose(dist);
        IrrDecomposition expected(9);
        expected.add(Partition{9});
        expected.add(Partition{1, 1, 1, 1, 1, 1, 1, 1, 1});
        expected.add(Partition{5, 1, 1, 1, 1});
        expected.add(Partition{4, 4, 1});
        expected.add(Partition{3, 2, 2, 2});
        o.require(d == expected, "decomposition differs");
    });

    run_criterion(2, "fixed-point-free involution series, n <= 12", 30.0, [](Outcome& o) {
        require_report(o, irs_verify(12));
    });

    run_criterion(3, "monomial witnesses for 7 <= n <= 10", 0, [](Outcome& o) {
        for (int n = 7; n <= 10; ++n) {
            ColumnCache cache(n);
            MonomialCheck four = monomial_check(Partition{4}, LinearCharacter::Sgn, n, &cache);
            o.require(four.decomposition.mult(Partition(
                          [&] {
                              std::vector<int> p{2, 2};
                              p.insert(p.end(), static_cast<std::size_t>(n - 4), 1);
                              return p;
                          }())) == 2,
                      "four-cycle witness at n=" + std::to_string(n));
            MonomialCheck threes = monomial_check(Partition{3, 3}, LinearCharacter::Sgn, n, &cache);
            o.require(threes.decomposition.mult(hook(4, n - 4)) == 2,
                      "double-three witness at n=" + std::to_string(n));
        }
    });

    run_criterion(4, "class actions for 2 <= n <= 11 with the degree facts", 0, [](Outcome& o) {
        for (int n = 2; n <= 11; ++n) require_report(o, prop6_verify(n));
        o.require(involution_count(10) == 9496, "t_10");
        o.require(exact_div(factorial(10), centralizer_order(Partition{3, 3, 3, 1}), "deg") ==
                      22400,
                  "class degree at n=10");
    });

    run_criterion(5, "twisted flip-wreath expansion for 2 <= k <= 5", 60.0, [](Outcome& o) {
        for (int k = 2; k <= 5; ++k) {
            require_report(o, lemma8_verify(k));
            S twisted =
                S::twisted(S::wreath_bottom(k, WrBottomMember::Whole), TwistKind::Theta);
            o.require(symbolic_decomposition(twisted, 2 * k) ==
                          decompose(class_distribution(twisted)),
                      "symbolic hook sum at k=" + std::to_string(k));
        }
    });

    run_criterion(6, "classification, both paths, 20 <= n <= 23", 4 * 600.0, [](Outcome& o) {
        for (int n = 20; n <= 23; ++n) require_report(o, theorem2_verify(n, Method::Both));
    });

    run_criterion(7, "symbolic classification at 66 and 67 with strict bounds", 300.0,
                  [](Outcome& o) {
                      require_report(o, theorem2_verify(66, Method::Symbolic));
                      require_report(o, theorem2_verify(67, Method::Symbolic));
                      IrrDecomposition s48 = symbolic_decomposition(
                          S::wreath_bottom(24, WrBottomMember::S2wrA), 48);
                      o.require(is_multiplicity_free(s48).multiplicity_free,
                                "alternating member at k=24");
                      IrrDecomposition d64 = symbolic_decomposition(
                          S::wreath_bottom(32, WrBottomMember::Delta), 64);
                      o.require(is_multiplicity_free(d64).multiplicity_free,
                                "diagonal member at k=32");
                  });

    run_criterion(8, "constituent classes at 66 and 67, (n-4,3,1) excluded to 70", 0,
                  [](Outcome& o) {
                      require_report(o, corollary5_verify(66));
                      require_report(o, corollary5_verify(67));
                      for (int n = 20; n <= 70; ++n)
                          o.require(!corollary5_member(Partition{n - 4, 3, 1}).member,
                                    "clause hit at n=" + std::to_string(n));
                  });

    run_criterion(9, "oracle equivalence for ambient degree <= 12", 0, [](Outcome& o) {
        // paired-factor wreath lattice and its swap twist, by element walk
        for (int k = 2; 2 * k <= 12; ++k) {
            std::map<WrTopMember, SignedClassDistribution> walks;
            for (WrTopMember m :
                 {WrTopMember::Whole, WrTopMember::SxS, WrTopMember::AnCap, WrTopMember::Gamma,
                  WrTopMember::SxA, WrTopMember::AnCapSxS, WrTopMember::AwrS2, WrTopMember::AxA})
                walks.emplace(m, walk_distribution(2 * k, 0));
            SignedClassDistribution psi = walk_distribution(2 * k, 0);
            oracle::for_each_wreath_top_element(k, [&](const oracle::WreathTopElement& e) {
                CycleType t = cycle_type(e.perm);
                int sign = sign_of_class(t);
                auto tally = [&](WrTopMember m, bool keep) {
                    if (!keep) return;
                    walks.at(m).add_weight(t, 1);
                    walks.at(m).order += 1;
                };
                tally(WrTopMember::Whole, true);
                tally(WrTopMember::SxS, !e.swapped);
                tally(WrTopMember::AnCap, sign == 1);
                tally(WrTopMember::Gamma, sign == (e.swapped ? -1 : 1));
                tally(WrTopMember::SxA, !e.swapped && e.sgn_b == 1);
                tally(WrTopMember::AnCapSxS, !e.swapped && e.sgn_a == e.sgn_b);
                tally(WrTopMember::AwrS2, e.sgn_a == 1 && e.sgn_b == 1);
                tally(WrTopMember::AxA, !e.swapped && e.sgn_a == 1 && e.sgn_b == 1);
                psi.add_weight(t, e.swapped ? -1 : 1);
                psi.order += 1;
            });
            for (const auto& [member, walk] : walks)
                o.require(class_distribution(S::wreath_top(k, member)) == walk,
                          "wreath-top k=" + std::to_string(k) + " member " + member_name(member));
            o.require(class_distribution(S::twisted(S::wreath_top(k, WrTopMember::Whole),
                                                    TwistKind::Psi)) == psi,
                      "wreath-top psi twist k=" + std::to_string(k));
        }

        // paired-blocks wreath lattice and its top-sign twist
        for (int k = 1; 2 * k <= 12; ++k) {
            std::map<WrBottomMember, SignedClassDistribution> walks;
            for (WrBottomMember m : {WrBottomMember::Whole, WrBottomMember::HS,
                                     WrBottomMember::S2wrA, WrBottomMember::Delta,
                                     WrBottomMember::HA})
                walks.emplace(m, walk_distribution(2 * k, 0));
            SignedClassDistribution theta = walk_distribution(2 * k, 0);
            for (const auto& e : oracle::wreath_bottom_elements(k)) {
                CycleType t = cycle_type(e.perm);
                auto tally = [&](WrBottomMember m, bool keep) {
                    if (!keep) return;
                    walks.at(m).add_weight(t, 1);
                    walks.at(m).order += 1;
                };
                tally(WrBottomMember::Whole, true);
                tally(WrBottomMember::HS, e.delta == 1);
                tally(WrBottomMember::S2wrA, e.theta == 1);
                tally(WrBottomMember::Delta, e.delta * e.theta == 1);
                tally(WrBottomMember::HA, e.delta == 1 && e.theta == 1);
                theta.add_weight(t, e.theta);
                theta.order += 1;
            }
            for (const auto& [member, walk] : walks)
                o.require(class_distribution(S::wreath_bottom(k, member)) == walk,
                          "wreath-bottom k=" + std::to_string(k) + " member " +
                              member_name(member));
            o.require(class_distribution(S::twisted(S::wreath_bottom(k, WrBottomMember::Whole),
                                                    TwistKind::Theta)) == theta,
                      "wreath-bottom theta twist k=" + std::to_string(k));
        }

        // cyclic wreaths (l = 1 is the plain symmetric factor, walked below)
        for (int l = 2; l <= 12; ++l)
            for (int m = 1; l * m <= 12; ++m) {
                if (int_pow(l, m) * factorial(m) > 2'500'000) continue;
                auto elements = oracle::cyclic_wreath_elements(l, m);
                o.require(class_distribution(S::cyclic_wreath(l, m)) ==
                              oracle::distribution_of(elements, l * m),
                          "cyclic wreath l=" + std::to_string(l) + " m=" + std::to_string(m));
            }

        // split products with all sign variants, by pairwise type merging;
        // factor orders are capped so each walk stays element-exact
        for (int a = 1; a <= 11; ++a)
            for (int b = 1; b <= a && a + b <= 12; ++b) {
                if (factorial(a) * factorial(b) > 2'500'000) continue;
                std::vector<std::pair<CycleType, int>> left, right;
                for (const Perm& p : oracle::symmetric_group_elements(a))
                    left.emplace_back(cycle_type(p), perm_sign(p));
                for (const Perm& p : oracle::symmetric_group_elements(b))
                    right.emplace_back(cycle_type(p), perm_sign(p));
                SignedClassDistribution ss = walk_distribution(a + b, 0),
                                        as = walk_distribution(a + b, 0),
                                        sa = walk_distribution(a + b, 0),
                                        aa = walk_distribution(a + b, 0),
                                        cap = walk_distribution(a + b, 0),
                                        twisted = walk_distribution(a + b, 0);
                for (const auto& [ta, sgn_a] : left)
                    for (const auto& [tb, sgn_b] : right) {
                        CycleType merged = detail::merge_types(ta, tb);
                        auto tally = [&](SignedClassDistribution& d, bool keep, int weight) {
                            if (!keep) return;
                            d.add_weight(merged, weight);
                            d.order += 1;
                        };
                        tally(ss, true, 1);
                        tally(as, sgn_a == 1, 1);
                        tally(sa, sgn_b == 1, 1);
                        tally(aa, sgn_a == 1 && sgn_b == 1, 1);
                        tally(cap, sgn_a == sgn_b, 1);
                        tally(twisted, true, sgn_b);
                    }
                std::string at = std::to_string(a) + "," + std::to_string(b);
                o.require(class_distribution(S::product(S::sym(a), S::sym(b))) == ss,
                          "SxS(" + at + ")");
                o.require(class_distribution(S::product(S::alt(a), S::sym(b))) == as,
                          "AxS(" + at + ")");
                o.require(class_distribution(S::product(S::sym(a), S::alt(b))) == sa,
                          "SxA(" + at + ")");
                o.require(class_distribution(S::product(S::alt(a), S::alt(b))) == aa,
                          "AxA(" + at + ")");
                o.require(class_distribution(S::alt_cap(S::product(S::sym(a), S::sym(b)))) == cap,
                          "AnCap(SxS(" + at + "))");
                o.require(class_distribution(S::product(
                              S::sym(a), S::twisted(S::sym(b), TwistKind::Sgn))) == twisted,
                          "sign-twisted product (" + at + ")");
            }

        // named groups and a stabilized sample
        o.require(Integer(closure(frobenius20_generators(), 5).size()) ==
                      order(S::named_group(NamedGroup::G5)),
                  "order of the 5-point group");
        o.require(Integer(closure(pgl25_generators(), 6).size()) ==
                      order(S::named_group(NamedGroup::G6)),
                  "order of the 6-point group");
        o.require(Integer(closure(pgammal28_generators(), 9).size()) ==
                      order(S::named_group(NamedGroup::G9)),
                  "order of the 9-point group");
        {
            std::vector<Perm> extended;
            for (const auto& e : oracle::wreath_bottom_elements(3)) {
                Perm p = e.perm;
                p.push_back(6);
                extended.push_back(p);
            }
            o.require(class_distribution(S::stabilized(
                          S::wreath_bottom(3, WrBottomMember::Whole), 1)) ==
                          oracle::distribution_of(extended, 7),
                      "stabilized wreath");
        }

        // symbolic equals brute wherever a closed form exists
        for (const SubgroupSpec& spec : standard_spec_instances(12)) {
            int n = ambient_n(spec);
            if (n > 12) continue;
            IrrDecomposition brute = decompose(class_distribution(spec));
            try {
                o.require(symbolic_decomposition(spec, n) == brute,
                          "symbolic vs brute for " + to_string(spec));
            } catch (const SpecError&) {
                // no closed form
            }
        }

        // column orthogonality and the degree-sum identity
        for (int n = 1; n <= 12; ++n) {
            PartitionIndexer indexer(n);
            std::vector<std::vector<Integer>> cols;
            for (const Partition& rho : indexer.list())
                cols.push_back(character_column(rho, indexer));
            for (int i = 0; i < indexer.size(); ++i)
                for (int j = i; j < indexer.size(); ++j) {
                    Integer dot = 0;
                    for (int l = 0; l < indexer.size(); ++l)
                        dot += cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                               cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
                    bool ok = dot == (i == j ? centralizer_order(indexer.at(i)) : Integer(0));
                    if (!ok) {
                        o.require(false, "orthogonality at n=" + std::to_string(n));
                        i = indexer.size();
                        break;
                    }
                }
            Integer degree_sum = 0;
            for (const Partition& lambda : indexer.list()) degree_sum += degree(lambda);
            o.require(degree_sum == involution_count(n), "degree sum at n=" + std::to_string(n));
        }
    });

    run_criterion(10, "orbit-count identity for untwisted specs, n <= 12", 0, [](Outcome& o) {
        VerificationReport report = orbit_identity_verify(12);
        require_report(o, report);
        long long pair_checks = 0;
        for (const CheckResult& c : report.checks)
            if (c.id.rfind("pair orbits", 0) == 0) ++pair_checks;
        o.require(pair_checks >= 5, "pair-orbit formula coverage");
    });

    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << (10 - failures)
              << "/10)" << std::endl;
    return failures == 0 ? 0 : 1;
}
