#include "fqexcess/fit.hpp"

#include <algorithm>
#include <cmath>

namespace fqexcess {

namespace {

// interval value of ln(a/b) for positive enclosures
Enclosure log_ratio(const Enclosure& a, const Enclosure& b) {
    return (a / b).log();
}

// Richardson extrapolation in h = 1/k over a 5-point ladder. vals[j] is the
// estimate at k = ks[j]; returns the order-4 extrapolant and the order-3 one
// for a discrepancy-based error estimate.
void richardson(const std::vector<unsigned>& ks,
                const std::vector<Enclosure>& vals, mpfr_prec_t prec,
                Enclosure& r44, Enclosure& r43) {
    const std::size_t n = ks.size();
    std::vector<Enclosure> h;
    h.reserve(n);
    for (unsigned k : ks)
        h.push_back(Enclosure::from_rational(mpq_class(1, k), prec));
    // tableau row by row: T[j][m], m-th column eliminates the O(h^m) term
    std::vector<std::vector<Enclosure>> t(n);
    for (std::size_t j = 0; j < n; ++j) {
        t[j].push_back(vals[j]);
        for (std::size_t m = 1; m <= j; ++m) {
            Enclosure num = h[j - m] * t[j][m - 1] - h[j] * t[j - 1][m - 1];
            t[j].push_back(num / (h[j - m] - h[j]));
        }
    }
    r44 = t[n - 1][n - 1];
    r43 = t[n - 1][n - 2];
}

Enclosure magnitude(const Enclosure& x) {
    mpq_class m = std::max(abs(x.lo_rational()), abs(x.hi_rational()));
    return Enclosure::from_endpoints(mpq_class(0), m, x.prec());
}

PowerLawFit fail(const std::string& note) {
    PowerLawFit f;
    f.indeterminate = true;
    f.note = note;
    return f;
}

} // namespace

PowerLawFit fit_power_law(const std::vector<std::pair<unsigned, Enclosure>>& u) {
    if (u.size() < 7) return fail("need at least 7 consecutive u_k");
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i].first != u[i - 1].first + 1)
            return fail("u_k indices must be consecutive");

    mpfr_prec_t prec = 64;
    for (const auto& [k, e] : u) prec = std::max(prec, e.prec());

    // largest T such that u_T and u_{T+1} are strictly positive and tight
    // enough for a meaningful log-ratio
    auto usable = [&](std::size_t i) {
        const Enclosure& e = u[i].second;
        if (!e.is_positive()) return false;
        return e.hi_rational() / e.lo_rational() < mpq_class(3, 2);
    };
    std::size_t last = u.size();  // one past the last usable index
    while (last > 0 && !usable(last - 1)) --last;
    if (last < 2) return fail("no usable positive u_k");

    unsigned t_top = u[last - 1].first - 1;  // beta_k needs u_{k+1}
    unsigned s = std::max(1u, t_top / 10);
    if (t_top < 4 * s + 2 || u[0].first > t_top - 4 * s)
        return fail("too few usable u_k for the 5-point ladder");

    auto at = [&](unsigned k) -> const Enclosure& {
        return u[k - u[0].first].second;
    };
    auto beta_at = [&](unsigned k) {
        Enclosure num = log_ratio(at(k + 1), at(k));
        mpq_class r(k + 1, k);
        Enclosure den = Enclosure::from_rational(r, prec).log();
        return num / den;
    };

    std::vector<unsigned> ks;
    std::vector<Enclosure> betas;
    for (int j = 4; j >= 0; --j) {
        unsigned k = t_top - (unsigned)j * s;
        if (!usable(k - u[0].first) || !usable(k + 1 - u[0].first))
            return fail("ladder point not usable");
        ks.push_back(k);
        betas.push_back(beta_at(k));
    }

    // branch 1: Richardson extrapolation in 1/k, right when beta_k - beta
    // decays polynomially in 1/k (the pole-driven case)
    Enclosure b44(prec), b43(prec);
    richardson(ks, betas, prec, b44, b43);
    Enclosure berr_r = magnitude(b44 - b43) * Enclosure::from_long(3, prec);
    Enclosure beta_r = b44.widen(berr_r);

    // branch 2: the top rung itself, widened by three times the step to the
    // previous rung; tighter when beta_k converges geometrically (then
    // extrapolation in 1/k only amplifies noise)
    Enclosure berr_d =
        magnitude(betas[4] - betas[3]) * Enclosure::from_long(3, prec) +
        magnitude(Enclosure::from_endpoints(
            mpq_class(0), betas[4].hi_rational() - betas[4].lo_rational(),
            prec));
    Enclosure beta_d = betas[4].widen(berr_d);

    bool use_richardson = beta_r.width() <= beta_d.width();

    PowerLawFit fit;
    fit.indeterminate = false;
    fit.k_used = t_top + 1;
    fit.beta = use_richardson ? beta_r : beta_d;
    const Enclosure& berr = use_richardson ? berr_r : berr_d;
    fit.note = use_richardson ? "richardson" : "direct";

    // amplitude: A_k = u_k / k^beta_mid, handled by the same branch, with an
    // extra term for the sensitivity of k^beta to the beta uncertainty
    Enclosure beta_mid =
        Enclosure::from_rational(fit.beta.mid_rational(), prec);
    std::vector<Enclosure> amps;
    for (unsigned k : ks) {
        Enclosure lnk =
            Enclosure::from_rational(mpq_class((long)k), prec).log();
        amps.push_back(at(k) / (beta_mid * lnk).exp());
    }
    Enclosure ln_t =
        Enclosure::from_rational(mpq_class((long)t_top), prec).log();
    Enclosure sens = magnitude(berr) * ln_t;
    if (use_richardson) {
        Enclosure a44(prec), a43(prec);
        richardson(ks, amps, prec, a44, a43);
        Enclosure aerr = magnitude(a44 - a43) * Enclosure::from_long(3, prec) +
                         magnitude(a44) * sens;
        fit.amplitude = a44.widen(aerr);
    } else {
        Enclosure aerr =
            magnitude(amps[4] - amps[3]) * Enclosure::from_long(3, prec) +
            magnitude(amps[4]) * sens;
        fit.amplitude = amps[4].widen(aerr);
    }
    return fit;
}

} // namespace fqexcess
