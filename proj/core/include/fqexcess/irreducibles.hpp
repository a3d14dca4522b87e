#ifndef FQEXCESS_IRREDUCIBLES_HPP
#define FQEXCESS_IRREDUCIBLES_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "fqexcess/field.hpp"
#include "fqexcess/poly.hpp"

namespace fqexcess {

/// nu_i = (1/i) sum_{d|i} mu(d) q^{i/d}, the number of monic irreducibles of
/// degree i over GF(q). Throws if the Mobius sum is not divisible by i
/// (which would be an internal bug).
mpz_class nu_formula(std::uint64_t q, unsigned i);

/// Counts nu_1..nu_max_degree. Invariants: nu_1 = q and
/// sum_{d|n} d*nu_d = q^n for every n.
struct NuTable {
    std::uint64_t q = 0;
    std::vector<mpz_class> nu; // nu[i-1] = nu_i

    static NuTable build(std::uint64_t q, unsigned max_degree);
    const mpz_class& at(unsigned i) const { return nu.at(i - 1); }
    unsigned max_degree() const { return (unsigned)nu.size(); }
};

/// Per-degree lists of monic irreducible codes up to degree D, plus the
/// smallest-irreducible-factor array per degree: for each monic degree-n
/// code f, spf(f) is the code of the (degree, code)-smallest irreducible
/// dividing f. Immutable once built; shareable across threads.
class IrreducibleStore {
public:
    /// Builds by sieving all monic polynomials of degree <= D. The total
    /// number of table entries sum_{n<=D} q^n must not exceed max_entries.
    static IrreducibleStore sieve(const FieldSpec& field, unsigned D,
                                  std::uint64_t max_entries = std::uint64_t(1)
                                                              << 26);

    const FieldSpec& field() const { return *field_; }
    unsigned max_degree() const { return D_; }

    const std::vector<std::uint32_t>& irreducibles(unsigned degree) const {
        return irr_.at(degree - 1);
    }

    /// Smallest irreducible factor of the monic polynomial with this code.
    /// The code's degree must be within the sieve range.
    std::uint32_t spf(std::uint64_t code) const;
    bool covers(unsigned degree) const { return degree >= 1 && degree <= D_; }

private:
    const FieldSpec* field_ = nullptr;
    unsigned D_ = 0;
    std::vector<std::uint64_t> qpow_;                // q^0..q^(D+1)
    std::vector<std::vector<std::uint32_t>> irr_;    // codes per degree 1..D
    std::vector<std::vector<std::uint32_t>> spf_;    // per degree 1..D, q^n entries
};

} // namespace fqexcess

#endif
