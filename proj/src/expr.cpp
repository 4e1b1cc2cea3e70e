#include "etaq/expr.hpp"

#include <algorithm>
#include <mutex>

#include "etaq/dissect.hpp"
#include "etaq/errors.hpp"
#include "etaq/eta.hpp"

namespace etaq {

namespace {

ExprPtr node(SeriesExpr&& e) {
    return std::make_shared<const SeriesExpr>(std::move(e));
}

} // namespace

ExprPtr SeriesExpr::eta(long m) {
    if (m < 1)
        throw Error("eta factor scale must be >= 1");
    SeriesExpr e{Kind::EtaFactor};
    e.scale = m;
    return node(std::move(e));
}

ExprPtr SeriesExpr::q(long j) {
    SeriesExpr e{Kind::QPower};
    e.j = j;
    return node(std::move(e));
}

ExprPtr SeriesExpr::number(Int v) {
    SeriesExpr e{Kind::IntConst};
    e.value = std::move(v);
    return node(std::move(e));
}

ExprPtr SeriesExpr::add(ExprPtr a, ExprPtr b) {
    SeriesExpr e{Kind::Add};
    e.lhs = std::move(a);
    e.rhs = std::move(b);
    return node(std::move(e));
}

ExprPtr SeriesExpr::sub(ExprPtr a, ExprPtr b) {
    SeriesExpr e{Kind::Sub};
    e.lhs = std::move(a);
    e.rhs = std::move(b);
    return node(std::move(e));
}

ExprPtr SeriesExpr::mul(ExprPtr a, ExprPtr b) {
    SeriesExpr e{Kind::Mul};
    e.lhs = std::move(a);
    e.rhs = std::move(b);
    return node(std::move(e));
}

ExprPtr SeriesExpr::div(ExprPtr a, ExprPtr b) {
    return mul(std::move(a), pow_of(std::move(b), -1));
}

ExprPtr SeriesExpr::pow_of(ExprPtr base, long exp) {
    SeriesExpr e{Kind::Pow};
    e.lhs = std::move(base);
    e.e = exp;
    return node(std::move(e));
}

ExprPtr SeriesExpr::extract_of(ExprPtr a, long k, long r) {
    if (k < 1 || r < 0 || r >= k)
        throw ResidueOutOfRangeError("extract requires 0 <= r < k");
    SeriesExpr e{Kind::Extract};
    e.lhs = std::move(a);
    e.e = k;
    e.r = r;
    return node(std::move(e));
}

ExprPtr SeriesExpr::huff_of(ExprPtr a, long k) {
    if (k < 1)
        throw Error("huff requires k >= 1");
    SeriesExpr e{Kind::Huff};
    e.lhs = std::move(a);
    e.e = k;
    return node(std::move(e));
}

ExprPtr SeriesExpr::subst_of(ExprPtr a, long k) {
    if (k < 1)
        throw Error("subst requires k >= 1");
    SeriesExpr e{Kind::Subst};
    e.lhs = std::move(a);
    e.e = k;
    return node(std::move(e));
}

ExprPtr SeriesExpr::ref(std::string name) {
    SeriesExpr e{Kind::NamedRef};
    e.name = std::move(name);
    return node(std::move(e));
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b)
        return true;
    if (!a || !b || a->kind != b->kind)
        return false;
    switch (a->kind) {
    case SeriesExpr::Kind::EtaFactor:
        return a->scale == b->scale;
    case SeriesExpr::Kind::QPower:
        return a->j == b->j;
    case SeriesExpr::Kind::IntConst:
        return a->value == b->value;
    case SeriesExpr::Kind::Add:
    case SeriesExpr::Kind::Sub:
    case SeriesExpr::Kind::Mul:
        return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    case SeriesExpr::Kind::Pow:
        return a->e == b->e && expr_equal(a->lhs, b->lhs);
    case SeriesExpr::Kind::Extract:
        return a->e == b->e && a->r == b->r && expr_equal(a->lhs, b->lhs);
    case SeriesExpr::Kind::Huff:
    case SeriesExpr::Kind::Subst:
        return a->e == b->e && expr_equal(a->lhs, b->lhs);
    case SeriesExpr::Kind::NamedRef:
        return a->name == b->name;
    }
    return false;
}

namespace {

// precedence: Add/Sub 1, Mul 2, Pow 3, atoms 4
int precedence(const SeriesExpr& e) {
    switch (e.kind) {
    case SeriesExpr::Kind::Add:
    case SeriesExpr::Kind::Sub:
        return 1;
    case SeriesExpr::Kind::Mul:
        return 2;
    case SeriesExpr::Kind::Pow:
        return 3;
    default:
        return 4;
    }
}

void render_into(const ExprPtr& e, std::string& out, int parent_prec) {
    int prec = precedence(*e);
    bool parens = prec < parent_prec;
    if (parens)
        out += '(';
    switch (e->kind) {
    case SeriesExpr::Kind::EtaFactor:
        out += 'f';
        out += std::to_string(e->scale);
        break;
    case SeriesExpr::Kind::QPower:
        if (e->j == 1) {
            out += 'q';
        } else {
            out += "q^";
            out += std::to_string(e->j);
        }
        break;
    case SeriesExpr::Kind::IntConst:
        if (e->value < 0) {
            // negative literals only exist via the parser's unary minus
            out += "(0 - ";
            out += Int(-e->value).get_str();
            out += ')';
        } else {
            out += e->value.get_str();
        }
        break;
    case SeriesExpr::Kind::Add:
        render_into(e->lhs, out, 1);
        out += " + ";
        render_into(e->rhs, out, 2);
        break;
    case SeriesExpr::Kind::Sub:
        render_into(e->lhs, out, 1);
        out += " - ";
        render_into(e->rhs, out, 2);
        break;
    case SeriesExpr::Kind::Mul:
        render_into(e->lhs, out, 2);
        out += '*';
        render_into(e->rhs, out, 3);
        break;
    case SeriesExpr::Kind::Pow:
        render_into(e->lhs, out, 4);
        out += '^';
        out += std::to_string(e->e);
        break;
    case SeriesExpr::Kind::Extract:
        out += "extract(";
        render_into(e->lhs, out, 0);
        out += ", " + std::to_string(e->e) + ", " + std::to_string(e->r) + ")";
        break;
    case SeriesExpr::Kind::Huff:
        out += "huff(";
        render_into(e->lhs, out, 0);
        out += ", " + std::to_string(e->e) + ")";
        break;
    case SeriesExpr::Kind::Subst:
        out += "subst(";
        render_into(e->lhs, out, 0);
        out += ", " + std::to_string(e->e) + ")";
        break;
    case SeriesExpr::Kind::NamedRef:
        out += e->name;
        break;
    }
    if (parens)
        out += ')';
}

} // namespace

std::string render(const ExprPtr& e) {
    std::string out;
    render_into(e, out, 0);
    return out;
}

void EvalEnv::define(const std::string& name, ExprPtr expr) {
    if (SeriesCatalog::is_builtin(name))
        throw Error("cannot redefine builtin series " + name);
    if (defs_.count(name))
        throw Error("series " + name + " is already defined");
    defs_[name] = std::move(expr);
}

bool EvalEnv::knows(const std::string& name) const {
    return defs_.count(name) > 0 || SeriesCatalog::is_builtin(name);
}

LaurentSeries EvalEnv::resolve(const std::string& name, long order) const {
    auto it = defs_.find(name);
    if (it == defs_.end())
        return catalog_->get(name, order); // throws UnknownSeriesError
    std::unique_lock lock(mutex_);
    for (;;) {
        auto hit = cache_.find(name);
        if (hit != cache_.end() && hit->second.order() >= order)
            return hit->second.truncated(order);
        if (!in_flight_.count(name))
            break;
        ready_.wait(lock);
    }
    in_flight_.insert(name);
    lock.unlock();
    LaurentSeries s;
    try {
        s = eval(it->second, order, *this);
    } catch (...) {
        lock.lock();
        in_flight_.erase(name);
        ready_.notify_all();
        throw;
    }
    lock.lock();
    in_flight_.erase(name);
    auto [hit, inserted] = cache_.try_emplace(name, s);
    if (!inserted && hit->second.order() < s.order())
        hit->second = std::move(s);
    ready_.notify_all();
    return hit->second.truncated(order);
}

namespace {

struct ValBounds {
    long lo; // result valuation is at least this
    long hi; // ... and at most this, barring cancellation
};

// Static bounds; Add/Sub assume no leading-term cancellation for the upper
// bound, which the retry loop in eval() repairs when it is wrong.
ValBounds val_bounds(const ExprPtr& e, const EvalEnv& env);

ValBounds val_bounds_named(const std::string&, const EvalEnv&) {
    // builtin quotients and user definitions in practice start at q^0; a
    // wrong guess only costs a retry
    return {0, 0};
}

ValBounds val_bounds(const ExprPtr& e, const EvalEnv& env) {
    using K = SeriesExpr::Kind;
    switch (e->kind) {
    case K::EtaFactor:
        return {0, 0};
    case K::QPower:
        return {e->j, e->j};
    case K::IntConst:
        return {0, 0};
    case K::Add:
    case K::Sub: {
        ValBounds a = val_bounds(e->lhs, env);
        ValBounds b = val_bounds(e->rhs, env);
        long lo = std::min(a.lo, b.lo);
        return {lo, lo};
    }
    case K::Mul: {
        ValBounds a = val_bounds(e->lhs, env);
        ValBounds b = val_bounds(e->rhs, env);
        return {a.lo + b.lo, a.hi + b.hi};
    }
    case K::Pow: {
        ValBounds a = val_bounds(e->lhs, env);
        if (e->e >= 0)
            return {e->e * a.lo, e->e * a.hi};
        return {e->e * a.hi, e->e * a.lo};
    }
    case K::Extract:
        return {0, 0};
    case K::Huff: {
        ValBounds a = val_bounds(e->lhs, env);
        return {a.lo, a.hi};
    }
    case K::Subst: {
        ValBounds a = val_bounds(e->lhs, env);
        return {e->e * a.lo, e->e * a.hi};
    }
    case K::NamedRef:
        return val_bounds_named(e->name, env);
    }
    return {0, 0};
}

LaurentSeries eval_at(const ExprPtr& e, long target, const EvalEnv& env) {
    using K = SeriesExpr::Kind;
    switch (e->kind) {
    case K::EtaFactor:
        return euler_factor(e->scale, std::max(target, 1L));
    case K::QPower:
        return LaurentSeries::monomial(e->j, std::max(target, e->j + 1));
    case K::IntConst:
        return LaurentSeries::constant(e->value, std::max(target, 1L));
    case K::Add:
        return add(eval_at(e->lhs, target, env), eval_at(e->rhs, target, env));
    case K::Sub:
        return sub(eval_at(e->lhs, target, env), eval_at(e->rhs, target, env));
    case K::Mul: {
        long tl = target - val_bounds(e->rhs, env).lo;
        long tr = target - val_bounds(e->lhs, env).lo;
        return mul(eval_at(e->lhs, tl, env), eval_at(e->rhs, tr, env));
    }
    case K::Pow: {
        if (e->e == 0)
            return LaurentSeries::one(std::max(target, 1L));
        ValBounds vb = val_bounds(e->lhs, env);
        long v = (e->e >= 1) ? vb.lo : vb.hi;
        long tb = target - (e->e - 1) * v;
        return pow(eval_at(e->lhs, tb, env), e->e);
    }
    case K::Extract:
        return extract(eval_at(e->lhs, e->e * target + e->r, env), e->e, e->r);
    case K::Huff:
        return huff(eval_at(e->lhs, target, env), e->e);
    case K::Subst:
        return substitute_qk(eval_at(e->lhs, (target + e->e - 1) / e->e, env),
                             e->e);
    case K::NamedRef:
        return env.resolve(e->name, std::max(target, 1L));
    }
    throw Error("unhandled expression node");
}

} // namespace

LaurentSeries eval(const ExprPtr& expr, long order, const EvalEnv& env) {
    if (order < 1)
        throw Error("eval requires order >= 1");
    long target = order;
    for (int attempt = 0; attempt < 8; ++attempt) {
        LaurentSeries s = eval_at(expr, target, env);
        if (s.order() >= order)
            return s.truncated(order);
        target += (order - s.order()) + 8;
    }
    throw Error("evaluation failed to reach order " + std::to_string(order) +
                " for " + render(expr));
}

} // namespace etaq
