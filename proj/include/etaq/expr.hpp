#pragma once

#include <condition_variable>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>

#include "etaq/catalog.hpp"
#include "etaq/laurent.hpp"

namespace etaq {

struct SeriesExpr;
using ExprPtr = std::shared_ptr<const SeriesExpr>;

// Expression tree over eta factors, q-monomials and integer constants.
// Division is desugared to Pow(-1) at construction time.
struct SeriesExpr {
    enum class Kind {
        EtaFactor, // f_m               (scale)
        QPower,    // q^j               (j, may be negative)
        IntConst,  // integer literal   (value)
        Add,
        Sub,
        Mul,
        Pow,     // lhs ^ e
        Extract, // extract(lhs, k, r)
        Huff,    // huff(lhs, k)
        Subst,   // subst(lhs, k)
        NamedRef // name
    };

    Kind kind;
    long scale = 0;  // EtaFactor
    long j = 0;      // QPower
    Int value;       // IntConst
    ExprPtr lhs, rhs;
    long e = 0;      // Pow exponent, Extract/Huff/Subst step k
    long r = 0;      // Extract residue
    std::string name;

    static ExprPtr eta(long m);
    static ExprPtr q(long j);
    static ExprPtr number(Int v);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr div(ExprPtr a, ExprPtr b); // a * b^-1
    static ExprPtr pow_of(ExprPtr base, long e);
    static ExprPtr extract_of(ExprPtr a, long k, long r);
    static ExprPtr huff_of(ExprPtr a, long k);
    static ExprPtr subst_of(ExprPtr a, long k);
    static ExprPtr ref(std::string name);
};

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
// Precedence-aware rendering; output reparses to a structurally equal tree.
std::string render(const ExprPtr& e);

// Name resolution and evaluation context: user definitions layered over the
// builtin catalog, with a thread-safe highest-order-so-far cache. Definitions
// only reference earlier names, so concurrent waits cannot cycle.
class EvalEnv {
  public:
    explicit EvalEnv(const SeriesCatalog& catalog) : catalog_(&catalog) {}

    void define(const std::string& name, ExprPtr expr);
    bool knows(const std::string& name) const;
    LaurentSeries resolve(const std::string& name, long order) const;

  private:
    const SeriesCatalog* catalog_;
    std::map<std::string, ExprPtr> defs_;
    mutable std::mutex mutex_;
    mutable std::condition_variable ready_;
    mutable std::map<std::string, LaurentSeries> cache_;
    mutable std::set<std::string> in_flight_;
};

// Evaluates to exactly the requested order. Internal targets are planned
// from static valuation bounds; when cancellation makes a result come out
// short the evaluation is retried at a higher target.
LaurentSeries eval(const ExprPtr& expr, long order, const EvalEnv& env);

} // namespace etaq
