#pragma once

// Combinatorial ground-truth oracles, independent of all series algebra.
// Counts come from literal enumeration of the objects being counted.
namespace etaq::oracles {

// partitions of n
long count_partitions(long n);

// two-colored partitions where the second color appears only on even parts
long count_cubic_partitions(long n);

// partitions of n with no hook length divisible by 3
long count_3core_partitions(long n);

} // namespace etaq::oracles
