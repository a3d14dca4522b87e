#ifndef FQEXCESS_INTEGERS_HPP
#define FQEXCESS_INTEGERS_HPP

#include <cstdint>
#include <vector>

#include "fqexcess/bruteforce.hpp"  // BudgetError
#include "fqexcess/enclosure.hpp"

namespace fqexcess {

/// Eratosthenes. Deliberately self-contained.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Excess of n: sum of (alpha_i - 1) over the prime factorization; 0 for 1.
unsigned integer_excess(std::uint64_t n);

struct IntExcessCounts {
    std::uint64_t N = 0;
    std::vector<std::uint64_t> counts;  // counts[k], k = 0..K
    std::uint64_t overflow = 0;         // integers with excess > K
    // invariant: sum(counts) + overflow == N
};

/// Exact excess counts over [1, N] via a smallest-prime-factor sieve
/// (32-bit entries, N capped at 10^8). The counting pass is partitioned
/// across threads and merged by addition.
IntExcessCounts int_excess_counts(std::uint64_t N, unsigned K,
                                  unsigned threads = 0);

/// Certified enclosures of the integer excess densities d_k, k = 0..K,
/// from the Euler product prod_p (1 - 1/p)(1 + 1/(p - z)) truncated over
/// primes p <= P. The omitted primes multiply the head by 1 + R(z) with
/// |[z^j] R| <= e^{1/P} P^{-j} (j >= 1) and |R(0)| <= e^{1/P} - 1, so the
/// correction applied to d_k is a geometric convolution rather than a
/// uniform bound; widths behave like 4/P near k = 0 and stay proportional
/// to 2^{-k} afterwards. Throws AccuracyError if any width exceeds eps.
std::vector<Enclosure> renyi_density(unsigned K, std::uint32_t P, double eps);

/// Certified enclosure of delta = (1/4) prod_{p >= 3} (p-1)^2 / (p (p-2)),
/// the constant in d_k ~ delta / 2^k. Truncated over p <= P; the tail
/// multiplier lies in [1, e^{2/P}]. Throws AccuracyError if the width
/// exceeds eps.
Enclosure delta_constant(std::uint32_t P, double eps);

} // namespace fqexcess

#endif
