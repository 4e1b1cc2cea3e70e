#pragma once

#include <condition_variable>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "etaq/eta.hpp"
#include "etaq/laurent.hpp"

namespace etaq {

struct CatalogEntry {
    std::string name;
    EtaQuotientSpec spec;
    std::string description;
};

// Built-in generating functions:
//   P       1/f1                  partition numbers p(n)
//   A_CUBIC 1/(f1 f2)             cubic partitions a(n)
//   CORE3   f3^3/f1               3-cores c_3(n)   (CORE<t> = f_t^t/f1 for any t)
//   C3      f3^3 f6^3/(f1 f2)     3-core cubic partitions C_3(n)
//   CP3     f3^6 f6^6/(f1^2 f2^2) 3-core cubic bipartitions CP_3(n)
//   DQ      (f1 f2 f3 f6)^2      the d(n) auxiliary series
//
// Expansions are cached at the highest order computed so far. The cache is
// safe for concurrent use; a thread asking for a series that another thread
// is already expanding waits for that result instead of recomputing it.
class SeriesCatalog {
  public:
    // Returns the expansion truncated to exactly `order`.
    LaurentSeries get(const std::string& name, long order) const;

    // Coefficient a(n) of the named series; grows the cache as needed.
    Int coeff(const std::string& name, long n) const;

    static bool is_builtin(const std::string& name);
    static EtaQuotientSpec spec_for(const std::string& name);
    static std::vector<CatalogEntry> entries();

  private:
    mutable std::mutex mutex_;
    mutable std::condition_variable ready_;
    mutable std::map<std::string, LaurentSeries> cache_;
    mutable std::set<std::string> in_flight_;
};

// Process-wide shared catalog instance.
SeriesCatalog& builtin_catalog();

// Convenience wrapper over builtin_catalog().get().
LaurentSeries builtin_series(const std::string& name, long order);

} // namespace etaq
