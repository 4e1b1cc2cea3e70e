#include "etaq/catalog.hpp"

#include <mutex>

#include "etaq/errors.hpp"

namespace etaq {

namespace {

// CORE<t> with t >= 1
bool parse_core_name(const std::string& name, long& t) {
    if (name.size() <= 4 || name.rfind("CORE", 0) != 0)
        return false;
    long v = 0;
    for (std::size_t i = 4; i < name.size(); ++i) {
        char c = name[i];
        if (c < '0' || c > '9')
            return false;
        v = v * 10 + (c - '0');
        if (v > 1000000)
            return false;
    }
    t = v;
    return v >= 1;
}

} // namespace

bool SeriesCatalog::is_builtin(const std::string& name) {
    long t;
    return name == "P" || name == "A_CUBIC" || name == "C3" ||
           name == "CP3" || name == "DQ" || parse_core_name(name, t);
}

EtaQuotientSpec SeriesCatalog::spec_for(const std::string& name) {
    if (name == "P")
        return {{1, -1}};
    if (name == "A_CUBIC")
        return {{1, -1}, {2, -1}};
    if (name == "C3")
        return {{3, 3}, {6, 3}, {1, -1}, {2, -1}};
    if (name == "CP3")
        return {{3, 6}, {6, 6}, {1, -2}, {2, -2}};
    if (name == "DQ")
        return {{1, 2}, {2, 2}, {3, 2}, {6, 2}};
    long t;
    if (parse_core_name(name, t))
        return EtaQuotientSpec{{t, t}, {1, -1}};
    throw UnknownSeriesError("unknown builtin series: " + name);
}

std::vector<CatalogEntry> SeriesCatalog::entries() {
    return {
        {"P", spec_for("P"), "partition numbers p(n)"},
        {"A_CUBIC", spec_for("A_CUBIC"),
         "cubic partitions a(n), second color on even parts"},
        {"CORE3", spec_for("CORE3"),
         "3-core partitions c_3(n); CORE<t> gives f_t^t/f1"},
        {"C3", spec_for("C3"), "3-core cubic partitions C_3(n)"},
        {"CP3", spec_for("CP3"), "3-core cubic bipartitions CP_3(n)"},
        {"DQ", spec_for("DQ"), "(f1 f2 f3 f6)^2, the d(n) series"},
    };
}

LaurentSeries SeriesCatalog::get(const std::string& name, long order) const {
    if (!is_builtin(name))
        throw UnknownSeriesError("unknown builtin series: " + name);
    std::unique_lock lock(mutex_);
    for (;;) {
        auto it = cache_.find(name);
        if (it != cache_.end() && it->second.order() >= order)
            return it->second.truncated(order);
        if (!in_flight_.count(name))
            break;
        ready_.wait(lock); // someone else is expanding this series
    }
    in_flight_.insert(name);
    lock.unlock();
    LaurentSeries s;
    try {
        s = eta_quotient(spec_for(name), order);
    } catch (...) {
        lock.lock();
        in_flight_.erase(name);
        ready_.notify_all();
        throw;
    }
    lock.lock();
    in_flight_.erase(name);
    auto [it, inserted] = cache_.try_emplace(name, s);
    if (!inserted && it->second.order() < s.order())
        it->second = std::move(s);
    ready_.notify_all();
    return it->second.truncated(order);
}

Int SeriesCatalog::coeff(const std::string& name, long n) const {
    return get(name, n + 1).coeff(n);
}

SeriesCatalog& builtin_catalog() {
    static SeriesCatalog catalog;
    return catalog;
}

LaurentSeries builtin_series(const std::string& name, long order) {
    return builtin_catalog().get(name, order);
}

} // namespace etaq
