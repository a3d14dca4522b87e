// fqx: batch front end for the excess-distribution library.
// stdout carries data (json or csv), stderr carries progress/stats.
// exit 0 = success, 1 = verification mismatch or unachieved accuracy,
// 2 = invalid arguments.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqexcess/bruteforce.hpp"
#include "fqexcess/densities.hpp"
#include "fqexcess/integers.hpp"
#include "fqexcess/irreducibles.hpp"
#include "fqexcess/series.hpp"

using ojson = nlohmann::ordered_json;
using namespace fqexcess;

namespace {

struct Global {
    std::string format = "json";
    unsigned threads = 0;
    long precision = 0;

    int digits() const {
        if (precision <= 0) return 17;
        return (int)std::ceil((double)precision * 0.30103) + 1;
    }
};

std::string rat(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    return c.get_str();
}

// canonical output: fixed key order, fixed 2-space json indent, one trailing
// newline; identical inputs must produce identical bytes
void emit(const Global& g, const std::string& command, const ojson& params,
          const std::vector<std::string>& columns, const ojson& rows) {
    if (g.format == "json") {
        ojson doc;
        doc["command"] = command;
        doc["params"] = params;
        doc["schema"] = 1;
        doc["rows"] = rows;
        std::cout << doc.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i)
        std::cout << (i ? "," : "") << columns[i];
    std::cout << "\n";
    for (const auto& row : rows) {
        bool first = true;
        for (const auto& col : columns) {
            if (!first) std::cout << ",";
            first = false;
            const auto& v = row.at(col);
            if (v.is_string())
                std::cout << v.get<std::string>();
            else
                std::cout << v.dump();
        }
        std::cout << "\n";
    }
}

ojson enclosure_row(const Enclosure& e, int digits) {
    return ojson{{"lo", e.lo_string(digits)}, {"hi", e.hi_string(digits)}};
}

int run_nu(const Global& g, std::uint64_t q, unsigned D, bool sieve_check) {
    NuTable t = NuTable::build(q, D);
    if (sieve_check) {
        FieldSpec field = field_from_order(q);
        IrreducibleStore irr = IrreducibleStore::sieve(field, D);
        for (unsigned i = 1; i <= D; ++i)
            if (mpz_class(irr.irreducibles(i).size()) != t.at(i)) {
                std::cerr << "sieve check failed at degree " << i << "\n";
                return 1;
            }
        std::cerr << "sieve check ok through degree " << D << "\n";
    }
    ojson rows = ojson::array();
    for (unsigned i = 1; i <= D; ++i)
        rows.push_back({{"i", i}, {"nu_i", t.at(i).get_str()}});
    emit(g, "nu",
         {{"q", q}, {"max_degree", D}, {"sieve_check", sieve_check}},
         {"i", "nu_i"}, rows);
    return 0;
}

int run_count(const Global& g, std::uint64_t q, unsigned N, unsigned K) {
    ExcessTable t = ExcessTable::from_series(q, N, K);
    auto d = dnk_table(q, N, K);
    ojson rows = ojson::array();
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned k = 0; k <= K; ++k)
            rows.push_back({{"n", n},
                            {"k", k},
                            {"e_nk", t.rows[n][k].get_str()},
                            {"d_nk", rat(d[n][k])}});
    emit(g, "count", {{"q", q}, {"max_degree", N}, {"max_excess", K}},
         {"n", "k", "e_nk", "d_nk"}, rows);
    return 0;
}

int run_density(const Global& g, std::uint64_t q, unsigned K, double eps) {
    DensityOptions opts;
    opts.eps = eps;
    if (g.precision > 0) opts.precision = g.precision;
    DensityReport rep = density_enclosures(q, K, opts);
    ojson rows = ojson::array();
    for (unsigned k = 0; k <= K; ++k) {
        ojson r = {{"k", k}};
        r.update(enclosure_row(rep.d[k], g.digits()));
        rows.push_back(r);
    }
    emit(g, "density",
         {{"q", q},
          {"max_excess", K},
          {"eps", eps},
          {"truncation_degree", rep.truncation_degree},
          {"tail_bound", rep.tail_bound},
          {"precision", (long)rep.precision}},
         {"k", "lo", "hi"}, rows);
    return 0;
}

int run_verify(const Global& g, std::uint64_t q, unsigned N) {
    VerifyReport rep = verify_counts(q, N, N, g.threads);
    std::cerr << "verify q=" << q << " n<=" << N << ": "
              << rep.mismatches.size() << " mismatches, " << rep.wall_seconds
              << "s, " << (std::uint64_t)rep.polys_per_second << " polys/s\n";
    ojson rows = ojson::array();
    for (const auto& m : rep.mismatches)
        rows.push_back({{"n", m.n},
                        {"k", m.k},
                        {"oracle", m.oracle.get_str()},
                        {"series", m.series.get_str()}});
    emit(g, "verify",
         {{"q", q},
          {"max_degree", N},
          {"mismatch_count", rep.mismatches.size()}},
         {"n", "k", "oracle", "series"}, rows);
    return rep.ok() ? 0 : 1;
}

int run_asymptotic(const Global& g, std::uint64_t q, unsigned K, double eps) {
    if (eps == 0) eps = std::pow((double)q, -(double)K) * 1e-8;
    DensityOptions opts;
    opts.eps = eps;
    if (g.precision > 0) opts.precision = g.precision;
    DensityReport rep = density_enclosures(q, K, opts);
    PowerLawFit fit = exponent_fit(rep);
    Enclosure lowA = low_exponent_asymptotic_A(q, 1e-12);
    Enclosure pole = pole_order_asymptotic_A(q, 1e-12);

    std::string verdict = "indeterminate";
    if (!fit.indeterminate) {
        bool low = fit.beta.contains(mpq_class((long)q - 2));
        bool high = fit.beta.contains(mpq_class((long)q - 1));
        if (high && !low && fit.amplitude.intersects(pole))
            verdict = "pole_order: d_k ~ A k^(q-1) / q^k";
        else if (low && !high && fit.amplitude.intersects(lowA))
            verdict = "low_exponent: d_k ~ A k^(q-2) / q^k";
        else
            verdict = "inconclusive";
    }

    int dg = g.digits();
    ojson rows = ojson::array();
    auto push = [&](const std::string& name, const Enclosure& e) {
        ojson r = {{"quantity", name}};
        r.update(enclosure_row(e, dg));
        rows.push_back(r);
    };
    push("low_exponent_A", lowA);
    push("pole_order_A", pole);
    if (!fit.indeterminate) {
        push("beta", fit.beta);
        push("amplitude", fit.amplitude);
    }
    rows.push_back({{"quantity", "verdict"}, {"lo", verdict}, {"hi", verdict}});
    emit(g, "asymptotic",
         {{"q", q},
          {"max_excess", K},
          {"eps", eps},
          {"fit_note", fit.note},
          {"k_used", fit.k_used}},
         {"quantity", "lo", "hi"}, rows);
    return 0;
}

int run_integers(const Global& g, std::uint64_t N, unsigned K,
                 std::uint32_t P, double eps) {
    IntExcessCounts counts = int_excess_counts(N, K, g.threads);
    std::vector<Enclosure> d = renyi_density(K, P, eps);
    Enclosure delta = delta_constant(P, eps);
    int dg = g.digits();
    ojson rows = ojson::array();
    for (unsigned k = 0; k <= K; ++k) {
        ojson r = {{"k", std::to_string(k)},
                   {"count", std::to_string(counts.counts[k])},
                   {"empirical",
                    rat(mpq_class((unsigned long)counts.counts[k],
                                  (unsigned long)N))}};
        r.update(enclosure_row(d[k], dg));
        rows.push_back(r);
    }
    ojson dr = {{"k", "delta"}, {"count", ""}, {"empirical", ""}};
    dr.update(enclosure_row(delta, dg));
    rows.push_back(dr);
    emit(g, "integers",
         {{"limit", N}, {"max_excess", K}, {"prime_limit", P}, {"eps", eps}},
         {"k", "count", "empirical", "lo", "hi"}, rows);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"factorization excess statistics over finite fields"};
    app.require_subcommand(1);

    Global g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
    app.add_option("--precision", g.precision, "working precision in bits");

    std::uint64_t q = 2, limit = 1000000;
    unsigned max_degree = 10, max_excess = 10;
    std::uint32_t prime_limit = 100000;
    double eps = 1e-10;
    bool sieve_check = false;

    auto* nu = app.add_subcommand("nu", "count monic irreducibles by degree");
    nu->add_option("--q", q, "field order")->required();
    nu->add_option("--max-degree", max_degree, "largest degree")->required();
    nu->add_flag("--sieve-check", sieve_check,
                 "cross-check the formula against an exhaustive sieve");

    auto* count = app.add_subcommand("count", "exact e_{n,k} and d_{n,k}");
    count->add_option("--q", q)->required();
    count->add_option("--max-degree", max_degree)->required();
    count->add_option("--max-excess", max_excess)->required();

    auto* density =
        app.add_subcommand("density", "certified excess density enclosures");
    density->add_option("--q", q)->required();
    density->add_option("--max-excess", max_excess)->required();
    density->add_option("--eps", eps, "target enclosure width")
        ->capture_default_str();

    auto* verify = app.add_subcommand(
        "verify", "exhaustive enumeration vs generating function");
    verify->add_option("--q", q)->required();
    verify->add_option("--max-degree", max_degree)->required();

    double aeps = 0;
    auto* asym = app.add_subcommand(
        "asymptotic", "asymptotic constants and empirical exponent fit");
    asym->add_option("--q", q)->required();
    asym->add_option("--max-excess", max_excess)->required();
    asym->add_option("--eps", aeps,
                     "density target width (default q^-K * 1e-8)");

    double ieps = 1e-3;
    auto* integers =
        app.add_subcommand("integers", "classical integer-side counterpart");
    integers->add_option("--limit", limit, "sieve limit N")->required();
    integers->add_option("--max-excess", max_excess)->required();
    integers->add_option("--prime-limit", prime_limit, "Euler product cutoff")
        ->required();
    integers->add_option("--eps", ieps, "target enclosure width")
        ->capture_default_str();

    // let global flags (--format etc) appear after the subcommand too
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (nu->parsed()) return run_nu(g, q, max_degree, sieve_check);
        if (count->parsed()) return run_count(g, q, max_degree, max_excess);
        if (density->parsed()) return run_density(g, q, max_excess, eps);
        if (verify->parsed()) return run_verify(g, q, max_degree);
        if (asym->parsed()) return run_asymptotic(g, q, max_excess, aeps);
        if (integers->parsed())
            return run_integers(g, limit, max_excess, prime_limit, ieps);
    } catch (const AccuracyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
