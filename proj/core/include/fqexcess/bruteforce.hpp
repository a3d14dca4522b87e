#ifndef FQEXCESS_BRUTEFORCE_HPP
#define FQEXCESS_BRUTEFORCE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "fqexcess/field.hpp"
#include "fqexcess/irreducibles.hpp"

namespace fqexcess {

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds GF(q) for a prime power q (factors q = p^e, default modulus).
FieldSpec field_from_order(std::uint64_t q);

/// Exact e_{n,k} for all k, by enumerating every monic polynomial of
/// degree n in code order and chasing its smallest-irreducible-factor
/// chain. Returns counts[k], k = 0..max(n-1, 0); the entries sum to q^n.
/// The enumeration is partitioned into contiguous code ranges across
/// threads (0 = hardware concurrency) and merged by entrywise addition,
/// so thread count never affects the result.
/// Requires irr to cover degree n; refuses q^n > budget.
std::vector<std::uint64_t> enumerate_excess(
    const FieldSpec& field, unsigned n, const IrreducibleStore& irr,
    unsigned threads = 0, std::uint64_t budget = std::uint64_t(1) << 24);

/// Exact number of squarefree monic polynomials of degree n, by sieving:
/// every product pi^2 * g (pi irreducible of degree d <= n/2, g monic of
/// degree n - 2d) is marked in a bitmap over the q^n monic codes and the
/// unmarked codes are counted. Products are generated incrementally by a
/// digit odometer over g, so the cost is a few field additions per marking.
/// Requires irr to cover degree n/2. Independent of the series module.
std::uint64_t count_squarefree(const FieldSpec& field, unsigned n,
                               const IrreducibleStore& irr);

struct Mismatch {
    unsigned n = 0, k = 0;
    mpz_class oracle, series;
};

struct VerifyReport {
    std::uint64_t q = 0;
    unsigned n_max = 0;
    unsigned K = 0;
    std::vector<std::vector<std::uint64_t>> oracle;  // rows n = 0..n_max
    std::vector<std::vector<mpz_class>> series;      // e_{n,k}, k = 0..K
    std::vector<Mismatch> mismatches;
    double wall_seconds = 0;
    double polys_per_second = 0;
    bool ok() const { return mismatches.empty(); }
};

/// Enumerates all monic polynomials of degree <= n_max, tabulates excess
/// counts, and diffs them against the generating-function extraction.
/// series_override substitutes the expected table (fault-injection tests).
VerifyReport verify_counts(
    std::uint64_t q, unsigned n_max, unsigned K, unsigned threads = 0,
    const std::vector<std::vector<mpz_class>>* series_override = nullptr);

} // namespace fqexcess

#endif
