#pragma once

#include <string>
#include <variant>
#include <vector>

#include "etaq/expr.hpp"

namespace etaq {

// coefficient subsequence a(step*n + offset); offset -1 means a(n-1) with
// a(-1) = 0
struct Progression {
    long step = 1;
    long offset = 0;
    bool operator==(const Progression&) const = default;
};

struct SeriesDef {
    std::string name;
    ExprPtr expr;
};

struct IdentityClaim {
    ExprPtr lhs;
    ExprPtr rhs;
};

// NAME[A*n+B] == 0 mod M
struct VanishingClaim {
    std::string series;
    Progression prog;
    Int modulus;
};

// NAME[A*n+B] == NAME[C*n+D] mod M
struct InternalClaim {
    std::string lhs_series;
    Progression lhs;
    std::string rhs_series;
    Progression rhs;
    Int modulus;
};

struct Claim {
    std::string label;
    std::variant<IdentityClaim, VanishingClaim, InternalClaim> body;
};

using Statement = std::variant<SeriesDef, Claim>;

struct ClaimFile {
    std::vector<Statement> statements;

    std::vector<const Claim*> claims() const;
    std::vector<const SeriesDef*> defs() const;
};

// Claim-file text that parses back to a structurally identical file.
std::string render(const ClaimFile& file);

} // namespace etaq
