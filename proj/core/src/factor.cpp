#include "fqexcess/irreducibles.hpp"
#include "fqexcess/poly.hpp"

namespace fqexcess {

Factorization factor(const Poly& f, const IrreducibleStore& irr) {
    if (f.is_zero()) throw PolyError("factor: zero polynomial");
    Factorization fac;
    fac.unit = f.leading();
    Poly m = f.make_monic();
    int deg = m.degree().value();
    if (deg == 0) return fac;
    if (!irr.field().same_field(f.field()))
        throw PolyError("factor: store built over a different field");
    if (2 * irr.max_degree() < (unsigned)deg && !irr.covers((unsigned)deg))
        throw PolyError("factor: irreducible store range insufficient");

    if (irr.covers((unsigned)deg)) {
        // SPF chain: successive smallest factors come out already sorted
        while (m.degree().value() >= 1) {
            Poly pi = Poly::decode(f.field(), irr.spf(m.encode()));
            unsigned alpha = 0;
            for (;;) {
                auto [quo, rem] = m.divrem(pi);
                if (!rem.is_zero()) break;
                m = quo;
                ++alpha;
                if (m.degree().value() == 0) break;
            }
            fac.factors.emplace_back(pi, alpha);
        }
        return fac;
    }

    // trial division, (degree, code) ascending
    for (unsigned d = 1; 2 * d <= (unsigned)m.degree().value(); ++d) {
        if (!irr.covers(d))
            throw PolyError("factor: irreducible store range insufficient");
        for (std::uint32_t code : irr.irreducibles(d)) {
            if ((unsigned)m.degree().value() < 2 * d) break;
            Poly pi = Poly::decode(f.field(), code);
            unsigned alpha = 0;
            for (;;) {
                auto [quo, rem] = m.divrem(pi);
                if (!rem.is_zero()) break;
                m = quo;
                ++alpha;
            }
            if (alpha) fac.factors.emplace_back(pi, alpha);
        }
    }
    if (m.degree().value() >= 1) fac.factors.emplace_back(m, 1);
    return fac;
}

} // namespace fqexcess
