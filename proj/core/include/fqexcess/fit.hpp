#ifndef FQEXCESS_FIT_HPP
#define FQEXCESS_FIT_HPP

#include <string>
#include <vector>

#include "fqexcess/enclosure.hpp"

namespace fqexcess {

/// Result of fitting u_k ~ A k^beta from a sequence of certified u_k.
/// When the input enclosures are too wide (or not strictly positive) the
/// fit is indeterminate and the intervals must not be used.
struct PowerLawFit {
    bool indeterminate = true;
    std::string note;
    Enclosure beta;
    Enclosure amplitude;
    unsigned k_used = 0;  // largest k entering the per-k estimates
};

/// Fits a power law to (k, u_k) pairs (k ascending, consecutive).
/// Per-k exponent estimates beta_k = ln(u_{k+1}/u_k)/ln((k+1)/k) are formed
/// on a 5-point ladder ending at the largest usable k. Two discrepancy-
/// widened estimates of the limit are produced (Richardson extrapolation in
/// 1/k for polynomially converging beta_k, the top rung directly for
/// geometrically converging ones) and the narrower wins; `note` records the
/// branch taken.
PowerLawFit fit_power_law(const std::vector<std::pair<unsigned, Enclosure>>& u);

} // namespace fqexcess

#endif
