#ifndef MFSYM_CLI_HPP
#define MFSYM_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "mfsym/classify.hpp"
#include "mfsym/serialize.hpp"

/* Command-line front end.  Every invocation is deterministic: reports
 * are emitted in canonical order with no timestamps, so identical runs
 * are byte-identical.
 *
 * Exit codes: 0 success / all checks pass; 1 verification failure or a
 * not-multiplicity-free verdict from check-mf; 2 malformed input;
 * 3 budget exceeded.
 */

namespace mfsym {

namespace cli_detail {

struct IntRange {
    int lo = 0;
    int hi = 0;
};

inline IntRange parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo) throw SpecError("empty range \"" + text + "\"");
        return {lo, hi};
    } catch (const SpecError&) {
        throw;
    } catch (const std::exception&) {
        throw SpecError("cannot parse range \"" + text + "\" (want N or A..B)");
    }
}

inline int thread_count() {
    const char* env = std::getenv("MFSYM_THREADS");
    if (env == nullptr) return 1;
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

// every generator closure behind the spec must fit the element budget
inline void enforce_closure_budget(const SubgroupSpec& spec, std::size_t budget) {
    if (spec.family == Family::Named) {
        std::size_t size = named_group_elements(spec.named).size();
        if (size > budget)
            throw BudgetError("closure of " + to_string(spec) + " needs " +
                              std::to_string(size) + " elements, over the budget of " +
                              std::to_string(budget));
    }
    for (const SubgroupSpec& child : spec.children) enforce_closure_budget(child, budget);
}

// spec at a possibly larger ambient degree: extra points become fixed
inline SubgroupSpec spec_at_degree(SubgroupSpec spec, std::optional<int> n) {
    if (!n) return spec;
    int ambient = ambient_n(spec);
    if (*n < ambient)
        throw SpecError("spec has ambient degree " + std::to_string(ambient) +
                        ", cannot shrink to n=" + std::to_string(*n));
    if (*n == ambient) return spec;
    return SubgroupSpec::stabilized(std::move(spec), *n - ambient);
}

struct Sink {
    std::ostream& out;
    std::string path;

    void write(const std::string& payload) const {
        out << payload;
        if (!path.empty()) {
            std::ofstream file(path);
            file << payload;
        }
    }
};

// per-n reports computed for a range, optionally in parallel; merge
// order is always ascending n
template <typename Fn>
std::vector<VerificationReport> reports_over_range(IntRange range, Fn&& make) {
    std::vector<VerificationReport> reports(static_cast<std::size_t>(range.hi - range.lo + 1));
    int threads = std::min(thread_count(), range.hi - range.lo + 1);
    if (threads <= 1) {
        for (int n = range.lo; n <= range.hi; ++n)
            reports[static_cast<std::size_t>(n - range.lo)] = make(n);
        return reports;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (int n = range.lo + t; n <= range.hi; n += threads)
                    reports[static_cast<std::size_t>(n - range.lo)] = make(n);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return reports;
}

} // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using cli_detail::IntRange;
    using cli_detail::Sink;

    CLI::App app{"exact decompositions and multiplicity-freeness checks for induced characters "
                 "of symmetric groups"};
    app.name("mfsym");

    std::string spec_text, format = "json", method_name = "brute", out_path;
    std::optional<int> opt_n;
    int max_degree = 23;
    std::size_t closure_budget = 10'000'000;
    std::string range_text, r_text = "1";
    std::string dioph_kind, suite;

    auto add_common = [&](CLI::App* cmd, bool with_method) {
        cmd->add_option("--format", format, "output format: json or tsv")
            ->check(CLI::IsMember({"json", "tsv"}));
        cmd->add_option("--out", out_path, "also write the payload to a file");
        cmd->add_option("--max-degree", max_degree,
                        "largest ambient degree for brute-force decompositions");
        cmd->add_option("--budget", closure_budget, "element budget for generator closures");
        if (with_method)
            cmd->add_option("--method", method_name, "brute, symbolic or both")
                ->check(CLI::IsMember({"brute", "symbolic", "both"}));
    };

    CLI::App* dec = app.add_subcommand("decompose", "decompose an induced character");
    dec->add_option("spec", spec_text, "subgroup spec, e.g. \"WrBottom(4):whole\"")->required();
    dec->add_option("--n", opt_n, "ambient degree; extra points are fixed");
    add_common(dec, true);

    CLI::App* chk = app.add_subcommand("check-mf", "multiplicity-freeness verdict");
    chk->add_option("spec", spec_text)->required();
    chk->add_option("--n", opt_n);
    add_common(chk, true);

    CLI::App* orb = app.add_subcommand("orbits", "orbit counts on r-subsets");
    orb->add_option("spec", spec_text)->required();
    orb->add_option("--r", r_text, "subset size or range, e.g. 2 or 0..5");
    add_common(orb, false);

    CLI::App* inv = app.add_subcommand("involutions", "elements of order at most 2");
    inv->add_option("--n", range_text, "degree or range")->required();
    add_common(inv, false);

    CLI::App* dio = app.add_subcommand("dioph", "strictly decreasing witness search");
    dio->add_option("kind", dioph_kind, "plus or minus")
        ->required()
        ->check(CLI::IsMember({"plus", "minus"}));
    dio->add_option("--k", range_text, "value or range")->required();
    add_common(dio, false);

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite,
                    "theorem2 | prop6 | lemma8 | irs | corollary5 | corollary6 | orbits")
        ->required()
        ->check(CLI::IsMember(
            {"theorem2", "prop6", "lemma8", "irs", "corollary5", "corollary6", "orbits"}));
    ver->add_option("--n", range_text, "degree or range (suite-dependent default)");
    ver->add_option("--k", range_text, "alias of --n for lemma8");
    add_common(ver, true);

    app.require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    Sink sink{out, out_path};
    bool json = format == "json";

    try {
        if (dec->parsed() || chk->parsed()) {
            SubgroupSpec spec = cli_detail::spec_at_degree(parse_subgroup_spec(spec_text), opt_n);
            cli_detail::enforce_closure_budget(spec, closure_budget);
            int n = ambient_n(spec);
            Method method = parse_method(method_name);
            bool brute = method != Method::Symbolic;
            if (brute && n > max_degree)
                throw BudgetError("brute decomposition capped at degree " +
                                  std::to_string(max_degree) + "; pass --max-degree or use "
                                  "--method symbolic");
            std::optional<IrrDecomposition> ds, db;
            if (method != Method::Brute) ds = symbolic_decomposition(spec, n);
            if (brute) db = decompose(class_distribution(spec));
            bool agree = !(ds && db) || *ds == *db;
            const IrrDecomposition& d = db ? *db : *ds;

            if (dec->parsed()) {
                if (json) {
                    nlohmann::json payload = to_json(d);
                    payload["spec"] = to_string(spec);
                    payload["method"] = method_name;
                    if (ds && db) payload["paths_agree"] = agree;
                    sink.write(payload.dump(2) + "\n");
                } else {
                    sink.write(to_tsv(d));
                }
                return agree ? 0 : 1;
            }

            MultiplicityCheck mf = is_multiplicity_free(d);
            if (json) {
                nlohmann::json violations = nlohmann::json::array();
                for (const MultiplicityViolation& v : mf.violations)
                    violations.push_back(
                        {{"lambda", v.lambda.to_string()}, {"mult", json_integer(v.mult)}});
                nlohmann::json payload = {{"spec", to_string(spec)},
                                          {"n", n},
                                          {"multiplicity_free", mf.multiplicity_free},
                                          {"violations", violations}};
                if (ds && db) payload["paths_agree"] = agree;
                sink.write(payload.dump(2) + "\n");
            } else {
                std::ostringstream os;
                os << "multiplicity-free\t" << (mf.multiplicity_free ? "true" : "false") << '\n';
                for (const MultiplicityViolation& v : mf.violations)
                    os << "violation\t" << v.lambda.to_string() << '\t' << v.mult << '\n';
                sink.write(os.str());
            }
            return agree && mf.multiplicity_free ? 0 : 1;
        }

        if (orb->parsed()) {
            SubgroupSpec spec = parse_subgroup_spec(spec_text);
            IntRange r = cli_detail::parse_range(r_text);
            nlohmann::json rows = nlohmann::json::array();
            std::ostringstream os;
            for (int i = r.lo; i <= r.hi; ++i) {
                Integer count = subset_orbit_count(spec, i);
                rows.push_back({{"r", i}, {"count", json_integer(count)}});
                os << i << '\t' << count << '\n';
            }
            if (json)
                sink.write(
                    nlohmann::json{{"spec", to_string(spec)}, {"orbits", rows}}.dump(2) + "\n");
            else
                sink.write(os.str());
            return 0;
        }

        if (inv->parsed()) {
            IntRange r = cli_detail::parse_range(range_text);
            nlohmann::json rows = nlohmann::json::array();
            std::ostringstream os;
            for (int n = r.lo; n <= r.hi; ++n) {
                Integer t = involution_count(n);
                rows.push_back({{"n", n}, {"count", json_integer(t)}});
                if (r.lo == r.hi)
                    os << t << '\n';
                else
                    os << n << '\t' << t << '\n';
            }
            sink.write(json ? nlohmann::json{{"involutions", rows}}.dump(2) + "\n" : os.str());
            return 0;
        }

        if (dio->parsed()) {
            IntRange r = cli_detail::parse_range(range_text);
            nlohmann::json rows = nlohmann::json::array();
            std::ostringstream os;
            for (int k = r.lo; k <= r.hi; ++k) {
                std::optional<DiophWitness> w =
                    dioph_kind == "plus" ? dioph_plus(k) : dioph_minus(k);
                nlohmann::json row = {{"k", k}, {"soluble", w.has_value()}};
                if (w) row["witness"] = w->to_string();
                rows.push_back(row);
                if (r.lo == r.hi)
                    os << (w ? w->to_string() : "insoluble") << '\n';
                else
                    os << k << '\t' << (w ? w->to_string() : "insoluble") << '\n';
            }
            sink.write(json ? nlohmann::json{{"equation", dioph_kind}, {"results", rows}}.dump(2) +
                                  "\n"
                            : os.str());
            return 0;
        }

        // verify suites
        Method method = parse_method(method_name);
        std::vector<VerificationReport> reports;
        auto over = [&](IntRange def, auto&& make) {
            IntRange r = range_text.empty() ? def : cli_detail::parse_range(range_text);
            reports = cli_detail::reports_over_range(r, make);
        };

        if (suite == "theorem2") {
            VerifyOptions opts;
            opts.brute_degree_cap = max_degree;
            over({20, 23}, [&](int n) { return theorem2_verify(n, method, opts); });
        } else if (suite == "prop6") {
            over({2, 11}, [&](int n) { return prop6_verify(n); });
        } else if (suite == "lemma8") {
            over({2, 5}, [&](int k) { return lemma8_verify(k); });
        } else if (suite == "irs") {
            IntRange r = range_text.empty() ? IntRange{12, 12} : cli_detail::parse_range(range_text);
            reports.push_back(irs_verify(r.hi));
        } else if (suite == "corollary5") {
            over({66, 67}, [&](int n) { return corollary5_verify(n); });
        } else if (suite == "corollary6") {
            over({20, 21}, [&](int n) { return corollary6_verify(n); });
        } else if (suite == "orbits") {
            IntRange r = range_text.empty() ? IntRange{12, 12} : cli_detail::parse_range(range_text);
            reports.push_back(orbit_identity_verify(r.hi));
        }

        bool all_pass = true;
        if (json) {
            nlohmann::json payload = nlohmann::json::array();
            for (const VerificationReport& rep : reports) {
                payload.push_back(to_json(rep));
                all_pass = all_pass && rep.all_pass();
            }
            sink.write(payload.dump(2) + "\n");
        } else {
            std::ostringstream os;
            for (const VerificationReport& rep : reports) {
                os << to_tsv(rep);
                all_pass = all_pass && rep.all_pass();
            }
            sink.write(os.str());
        }
        return all_pass ? 0 : 1;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const SpecError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DistributionError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace mfsym

#endif // MFSYM_CLI_HPP
