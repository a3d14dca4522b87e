#ifndef FQEXCESS_DENSITIES_HPP
#define FQEXCESS_DENSITIES_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "fqexcess/enclosure.hpp"
#include "fqexcess/fit.hpp"

namespace fqexcess {

/// Thrown when a requested target width cannot be met within the configured
/// truncation/precision budget; carries the width actually achieved.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double achieved_width)
        : std::runtime_error(what), achieved_width(achieved_width) {}
    double achieved_width;
};

/// Certified enclosures of the excess densities d_k, k = 0..K.
struct DensityReport {
    std::uint64_t q = 0;
    unsigned K = 0;
    double eps = 0;
    std::vector<Enclosure> d;  // d[k] encloses d_k
    unsigned truncation_degree = 0;  // head product over degrees i <= I
    double tail_bound = 0;           // additive correction applied per k
    mpfr_prec_t precision = 0;
};

struct DensityOptions {
    double eps = 1e-10;
    /// 0 = choose automatically from the tail bound / eps.
    unsigned truncation_degree = 0;
    mpfr_prec_t precision = 0;
    /// Automatic retries (doubling precision, growing I) before failing.
    unsigned max_attempts = 4;
};

/// Enclosures of d_k via the grouped Euler product
/// prod_i [(1 - q^-i)(1 + q^-i / (1 - q^-i z))]^{nu_i}: head product over
/// i <= I in outward-rounded interval arithmetic, plus an additive tail
/// correction derived from the coefficient mass 2 q^-2i of each combined
/// factor on the closed unit z-disk.
DensityReport density_enclosures(std::uint64_t q, unsigned K,
                                 const DensityOptions& opts);
DensityReport density_enclosures(std::uint64_t q, unsigned K, double eps);

/// Exact d_{n,k} = e_{n,k} / q^n for n = 0..N, k = 0..K.
std::vector<std::vector<mpq_class>> dnk_table(std::uint64_t q, unsigned N,
                                              unsigned K);

/// Zeta of the affine line at integer s >= 2: 1/(1 - q^{1-s}), exact.
/// (The defining sum over monic polynomials is geometric: sum_n q^n q^{-ns}.)
mpq_class zeta_affine(std::uint64_t q, unsigned s);

/// The amplitude candidate paired with the exponent q-2:
/// (1/(q-2)!) (1/q - 1/q^2)^{q-1} prod_{i>=2} [(1-q^-i)(1 - 1/(q^i-q))]^{nu_i}.
/// The infinite product diverges to 0 (each grouped factor is bounded away
/// from 1 by ~2/i), so the certified enclosure is [0, tiny]; see
/// pole_order_asymptotic_A for the convergent alternative.
Enclosure low_exponent_asymptotic_A(std::uint64_t q, double eps);

/// The constant implied by a pole of multiplicity nu_1 = q at z = q:
/// (1/(q-1)!) (1/q - 1/q^2)^q prod_{i>=2} [(1-q^-i)(1 + 1/(q^i-q))]^{nu_i},
/// with predicted d_k ~ A' k^{q-1} / q^k.
Enclosure pole_order_asymptotic_A(std::uint64_t q, double eps);

/// Empirical adjudication of the asymptotic exponent: with u_k = d_k q^k,
/// forms the spec'd per-k estimates beta_k = ln(u_{k+1}/u_k)/ln((k+1)/k)
/// over the top half of the report and Richardson-extrapolates them to
/// k -> infinity (the raw beta_k converge only like 1/k). Returns interval
/// estimates for the limiting exponent and amplitude.
PowerLawFit exponent_fit(const DensityReport& report);

} // namespace fqexcess

#endif
