#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etaq/claims.hpp"
#include "etaq/congruence.hpp"
#include "etaq/expr.hpp"

namespace etaq {

enum class ClaimKind { Identity, Congruence, Internal };
enum class ClaimStatus { Pass, Fail, Error };

const char* to_string(ClaimKind k);
const char* to_string(ClaimStatus s);

// For identities `index` is the exponent of the first disagreeing
// coefficient; for congruences it is the first failing n.
struct Witness {
    long index;
    Int lhs;
    Int rhs;
};

struct ClaimResult {
    std::string label;
    ClaimKind kind = ClaimKind::Identity;
    ClaimStatus status = ClaimStatus::Error;
    long checked = 0;
    std::optional<Witness> witness;
    std::string message; // set when status == Error
    double millis = 0;
};

struct Report {
    long order = 0;
    std::vector<ClaimResult> claims;
    bool passed = false;
    double total_millis = 0;

    long count(ClaimStatus s) const;
};

struct RunOptions {
    std::optional<long> forced_order; // overrides both defaults
    long identity_order = 500;
    long congruence_order = 2000;
    long min_witnesses = 10;
    bool parallel = true;
};

// Evaluates both sides at the given order and compares every tracked
// coefficient. Evaluation problems become status Error, not exceptions.
ClaimResult verify_identity(const std::string& label, const ExprPtr& lhs,
                            const ExprPtr& rhs, long order,
                            const EvalEnv& env);

ClaimResult verify_congruence(const std::string& label, const VanishingClaim& c,
                              long order, const EvalEnv& env,
                              long min_witnesses = 10);

ClaimResult verify_internal(const std::string& label, const InternalClaim& c,
                            long order, const EvalEnv& env,
                            long min_witnesses = 10);

// Runs every claim (claims are independent and may run concurrently); the
// report lists results in file order and passes iff every claim passes.
Report run(const ClaimFile& file, const SeriesCatalog& catalog,
           const RunOptions& options = {});

// {"order": N, "claims": [{label, kind, status, checked, witness}...],
//  "passed": bool} with witness values as decimal strings.
std::string report_to_json(const Report& report);

// One line per claim plus a summary, for terminals.
std::string report_to_text(const Report& report);

} // namespace etaq
