#ifndef MFSYM_REPORT_HPP
#define MFSYM_REPORT_HPP

#include <string>
#include <vector>

namespace mfsym {

/* One verified statement.  `anchor` is the stable label of the result
 * the check exercises (documented in the README); `witness` carries the
 * offending partition or a short computed summary when it matters.
 * Informational entries report a computed status without asserting it,
 * and do not affect all_pass().
 */
struct CheckResult {
    std::string id;
    std::string anchor;
    bool pass = false;
    std::string witness;
    bool informational = false;
};

struct VerificationReport {
    std::string scope;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.informational && !c.pass) return false;
        return true;
    }

    void add(std::string id, std::string anchor, bool pass, std::string witness = "") {
        checks.push_back({std::move(id), std::move(anchor), pass, std::move(witness), false});
    }

    void note(std::string id, std::string anchor, std::string witness) {
        checks.push_back({std::move(id), std::move(anchor), true, std::move(witness), true});
    }

    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

} // namespace mfsym

#endif // MFSYM_REPORT_HPP
