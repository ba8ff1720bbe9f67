#ifndef MFSYM_SERIALIZE_HPP
#define MFSYM_SERIALIZE_HPP

#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"

#include "mfsym/characters.hpp"
#include "mfsym/report.hpp"

namespace mfsym {

// multiplicities are emitted as JSON numbers while they fit, as decimal
// strings beyond that
inline nlohmann::json json_integer(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline nlohmann::json to_json(const IrrDecomposition& d) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lambda, mult] : d.terms())
        terms.push_back({{"lambda", lambda.to_string()}, {"mult", json_integer(mult)}});
    return {{"n", d.n()}, {"terms", terms}};
}

inline std::string to_tsv(const IrrDecomposition& d) {
    std::ostringstream os;
    for (const auto& [lambda, mult] : d.terms()) os << lambda.to_string() << '\t' << mult << '\n';
    return os.str();
}

inline nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::json entry = {
            {"id", c.id}, {"anchor", c.anchor}, {"pass", c.pass}, {"witness", c.witness}};
        if (c.informational) entry["informational"] = true;
        checks.push_back(entry);
    }
    return {{"scope", report.scope}, {"pass", report.all_pass()}, {"checks", checks}};
}

inline std::string to_tsv(const VerificationReport& report) {
    std::ostringstream os;
    for (const CheckResult& c : report.checks) {
        const char* status = c.informational ? "INFO" : c.pass ? "PASS" : "FAIL";
        os << status << '\t' << report.scope << '\t' << c.id << '\t' << c.anchor << '\t'
           << c.witness << '\n';
    }
    return os.str();
}

} // namespace mfsym

#endif // MFSYM_SERIALIZE_HPP
