#include "etaq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>
#include <omp.h>

#include "etaq/errors.hpp"

namespace etaq {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

ClaimResult from_outcome(std::string label, ClaimKind kind,
                         const CongruenceOutcome& out) {
    ClaimResult r;
    r.label = std::move(label);
    r.kind = kind;
    r.checked = out.checked;
    if (out.witness) {
        r.status = ClaimStatus::Fail;
        r.witness = Witness{out.witness->n, out.witness->lhs, out.witness->rhs};
    } else {
        r.status = ClaimStatus::Pass;
    }
    return r;
}

} // namespace

const char* to_string(ClaimKind k) {
    switch (k) {
    case ClaimKind::Identity: return "identity";
    case ClaimKind::Congruence: return "congruence";
    case ClaimKind::Internal: return "internal";
    }
    return "?";
}

const char* to_string(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Error: return "error";
    }
    return "?";
}

long Report::count(ClaimStatus s) const {
    return std::count_if(claims.begin(), claims.end(),
                         [s](const ClaimResult& c) { return c.status == s; });
}

ClaimResult verify_identity(const std::string& label, const ExprPtr& lhs,
                            const ExprPtr& rhs, long order,
                            const EvalEnv& env) {
    auto start = Clock::now();
    ClaimResult r;
    r.label = label;
    r.kind = ClaimKind::Identity;
    try {
        LaurentSeries a = eval(lhs, order, env);
        LaurentSeries b = eval(rhs, order, env);
        long lo = std::min(a.is_zero() ? order : a.valuation(),
                           b.is_zero() ? order : b.valuation());
        r.checked = std::max(order - lo, 0L);
        if (auto w = first_mismatch(a, b, order)) {
            r.status = ClaimStatus::Fail;
            r.witness = Witness{w->exponent, w->lhs, w->rhs};
        } else {
            r.status = ClaimStatus::Pass;
        }
    } catch (const std::exception& e) {
        r.status = ClaimStatus::Error;
        r.message = e.what();
    }
    r.millis = ms_since(start);
    return r;
}

ClaimResult verify_congruence(const std::string& label,
                              const VanishingClaim& c, long order,
                              const EvalEnv& env, long min_witnesses) {
    auto start = Clock::now();
    ClaimResult r;
    try {
        LaurentSeries s = env.resolve(c.series, order);
        r = from_outcome(label, ClaimKind::Congruence,
                         check_vanishing(s, c.prog.step, c.prog.offset,
                                         c.modulus, min_witnesses));
    } catch (const std::exception& e) {
        r.label = label;
        r.kind = ClaimKind::Congruence;
        r.status = ClaimStatus::Error;
        r.message = e.what();
    }
    r.millis = ms_since(start);
    return r;
}

ClaimResult verify_internal(const std::string& label, const InternalClaim& c,
                            long order, const EvalEnv& env,
                            long min_witnesses) {
    auto start = Clock::now();
    ClaimResult r;
    try {
        LaurentSeries lhs = env.resolve(c.lhs_series, order);
        LaurentSeries rhs = env.resolve(c.rhs_series, order);
        r = from_outcome(label, ClaimKind::Internal,
                         check_internal(lhs, c.lhs.step, c.lhs.offset, rhs,
                                        c.rhs.step, c.rhs.offset, c.modulus,
                                        min_witnesses));
    } catch (const std::exception& e) {
        r.label = label;
        r.kind = ClaimKind::Internal;
        r.status = ClaimStatus::Error;
        r.message = e.what();
    }
    r.millis = ms_since(start);
    return r;
}

Report run(const ClaimFile& file, const SeriesCatalog& catalog,
           const RunOptions& options) {
    auto start = Clock::now();
    EvalEnv env(catalog);
    for (const SeriesDef* def : file.defs())
        env.define(def->name, def->expr);

    std::vector<const Claim*> claims = file.claims();
    long identity_order = options.forced_order.value_or(options.identity_order);
    long congruence_order =
        options.forced_order.value_or(options.congruence_order);

    Report report;
    report.claims.resize(claims.size());
    bool any_congruence = false;
    for (const Claim* c : claims)
        if (!std::holds_alternative<IdentityClaim>(c->body))
            any_congruence = true;
    report.order = options.forced_order.value_or(
        claims.empty() || any_congruence ? congruence_order : identity_order);

    auto run_one = [&](std::size_t i) {
        const Claim& c = *claims[i];
        if (const auto* id = std::get_if<IdentityClaim>(&c.body)) {
            report.claims[i] =
                verify_identity(c.label, id->lhs, id->rhs, identity_order, env);
        } else if (const auto* v = std::get_if<VanishingClaim>(&c.body)) {
            report.claims[i] = verify_congruence(c.label, *v, congruence_order,
                                                 env, options.min_witnesses);
        } else {
            report.claims[i] = verify_internal(
                c.label, std::get<InternalClaim>(c.body), congruence_order,
                env, options.min_witnesses);
        }
    };

    if (options.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < claims.size(); ++i)
            run_one(i);
    } else {
        for (std::size_t i = 0; i < claims.size(); ++i)
            run_one(i);
    }

    report.passed =
        std::all_of(report.claims.begin(), report.claims.end(),
                    [](const ClaimResult& r) {
                        return r.status == ClaimStatus::Pass;
                    });
    report.total_millis = ms_since(start);
    return report;
}

std::string report_to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["order"] = report.order;
    j["claims"] = nlohmann::ordered_json::array();
    for (const ClaimResult& c : report.claims) {
        nlohmann::ordered_json jc;
        jc["label"] = c.label;
        jc["kind"] = to_string(c.kind);
        jc["status"] = to_string(c.status);
        jc["checked"] = c.checked;
        if (c.witness) {
            jc["witness"] = {{"index", c.witness->index},
                             {"lhs", c.witness->lhs.get_str()},
                             {"rhs", c.witness->rhs.get_str()}};
        } else {
            jc["witness"] = nullptr;
        }
        j["claims"].push_back(std::move(jc));
    }
    j["passed"] = report.passed;
    return j.dump(2);
}

std::string report_to_text(const Report& report) {
    std::ostringstream os;
    for (const ClaimResult& c : report.claims) {
        os << (c.status == ClaimStatus::Pass   ? "[PASS] "
               : c.status == ClaimStatus::Fail ? "[FAIL] "
                                               : "[ERROR] ")
           << c.label << "  (" << to_string(c.kind) << ", checked "
           << c.checked << ", " << static_cast<long>(c.millis) << " ms)";
        if (c.witness) {
            os << "\n        first mismatch at "
               << (c.kind == ClaimKind::Identity ? "exponent " : "n = ")
               << c.witness->index << ": " << c.witness->lhs.get_str()
               << " vs " << c.witness->rhs.get_str();
        }
        if (!c.message.empty())
            os << "\n        " << c.message;
        os << "\n";
    }
    os << (report.passed ? "PASSED" : "FAILED") << ": "
       << report.count(ClaimStatus::Pass) << " passed, "
       << report.count(ClaimStatus::Fail) << " failed, "
       << report.count(ClaimStatus::Error) << " errors ("
       << static_cast<long>(report.total_millis) << " ms total)\n";
    return os.str();
}

} // namespace etaq
