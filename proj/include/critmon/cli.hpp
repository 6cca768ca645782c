#pragma once

#include "critmon/binomial_gb.hpp"
#include "critmon/invariants.hpp"
#include "critmon/json_io.hpp"
#include "critmon/northcott.hpp"
#include "critmon/numsgp.hpp"
#include "critmon/random_instance.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace critmon {
namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitMismatch = 3;

namespace detail {

inline std::size_t worker_count() {
    if (const char* env = std::getenv("CRITMON_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

inline nlohmann::json read_instance(const std::string& path, std::istream& in) {
    nlohmann::json j;
    if (path.empty() || path == "-") {
        in >> j;
    } else {
        std::ifstream f(path);
        if (!f) throw std::invalid_argument("cannot open instance file: " + path);
        f >> j;
    }
    return j;
}

inline std::string criticality_name(numsgp::Criticality c) {
    switch (c) {
        case numsgp::Criticality::Yes: return "true";
        case numsgp::Criticality::No: return "false";
        default: return "inconclusive";
    }
}

inline std::vector<long> weight_as_longs(const MonoidPresentation& p) {
    std::vector<long> gens;
    for (const Int& a : p.weight) {
        if (!a.fits_slong_p())
            throw std::invalid_argument("generators too large for the oracle toolkit");
        gens.push_back(a.get_si());
    }
    return gens;
}

/// The full single-instance report, optionally cross-checked against the
/// brute-force oracle. Sets mismatch=true when any oracle comparison fails.
inline nlohmann::json build_report(const NorthcottExponents& e, bool with_oracle,
                                   bool& mismatch) {
    const MonoidPresentation p = monoid_presentation(e);
    const SaturationResult sat = saturation_index(e);
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["instance"] = instance_to_json(e);
    j["generators"] = to_json(p.weight);
    j["invariant_factors"] = to_json(p.invariant_factors);
    j["is_numerical"] = p.is_numerical;
    j["is_prime"] = sat.is_prime;
    j["saturation_index"] = to_json(sat.index);
    mismatch = false;

    if (!p.is_numerical) return j;  // closed-form section only applies to semigroups

    const InvariantReport rep = invariant_report(e, p);
    j.update(report_to_json(rep));

    const numsgp::NumericalSemigroup s(weight_as_longs(p));
    const numsgp::Presentation oracle_pres = numsgp::betti_and_presentation(s);
    j["uniquely_presented"] = oracle_pres.uniquely_presented;
    j["is_critical"] = criticality_name(numsgp::is_critical(s));

    if (with_oracle) {
        const numsgp::Invariants oinv = numsgp::basic_invariants(s);
        const std::vector<long> oap = s.apery(p.weight.back().get_si());
        const numsgp::DeltaCatenary odc = numsgp::delta_and_catenary(s);

        auto eq_vec = [](const std::vector<Int>& a, const std::vector<long>& b) {
            if (a.size() != b.size()) return false;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return false;
            return true;
        };
        nlohmann::json cmp;
        cmp["apery"] = eq_vec(rep.apery, oap);
        cmp["frobenius"] = rep.frobenius == oinv.frobenius;
        cmp["pf"] = eq_vec(rep.pseudo_frobenius, oinv.pseudo_frobenius);
        cmp["type"] = rep.type == oinv.type;
        cmp["genus"] = rep.genus == oinv.genus;
        cmp["delta_min"] = rep.delta_min == odc.delta_min;
        cmp["delta_max"] = rep.delta_max == odc.delta_max;
        cmp["catenary"] = rep.catenary == odc.catenary;
        j["oracle_match"] = cmp;
        for (const auto& [key, ok] : cmp.items())
            if (!ok.get<bool>()) mismatch = true;
    }
    return j;
}

}  // namespace detail

/// Entry point shared by the critmon binary and the in-process CLI tests.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Northcott type monoids: construction, invariants, verification"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build an instance and its presentation");
    NorthcottExponents exps;
    std::string out_path;
    construct->add_option("--n", exps.n, "number of variables")->required();
    construct->add_option("--diag", exps.diag, "diagonal exponents")->required()->delimiter(',');
    construct->add_option("--xn", exps.xn, "x_n exponents")->required()->delimiter(',');
    construct->add_option("--mvec", exps.mvec, "monomial vector exponents")
        ->required()
        ->delimiter(',');
    construct->add_option("--out", out_path, "write the report to a file instead of stdout");

    // invariants
    auto* invariants = app.add_subcommand("invariants", "closed-form invariant report");
    std::string in_path;
    bool with_oracle = false;
    invariants->add_option("--in", in_path, "instance JSON file ('-' = stdin)");
    invariants->add_flag("--oracle", with_oracle, "cross-check against the brute-force oracle");
    invariants->add_option("--out", out_path, "output file");

    // verify
    auto* verify = app.add_subcommand("verify", "Groebner and congruence verification");
    verify->add_option("--in", in_path, "instance JSON file ('-' = stdin)");

    // glue
    auto* glue_cmd = app.add_subcommand("glue", "glue two numerical semigroups");
    std::vector<long> s1_gens, s2_gens;
    long lam = 0, mu = 0;
    glue_cmd->add_option("--s1", s1_gens, "generators of S1")->required()->delimiter(',');
    glue_cmd->add_option("--s2", s2_gens, "generators of S2")->required()->delimiter(',');
    glue_cmd->add_option("--lam", lam, "multiplier of S1, taken from S2")->required();
    glue_cmd->add_option("--mu", mu, "multiplier of S2, taken from S1")->required();

    // presentation
    auto* presentation = app.add_subcommand("presentation", "minimal presentation of a semigroup");
    std::vector<long> gens;
    presentation->add_option("--gens", gens, "generators")->required()->delimiter(',');

    // search
    auto* search = app.add_subcommand("search", "sample random instances as JSON lines");
    int search_n = 4;
    long max_exp = 3;
    bool numerical_only = false;
    std::uint64_t seed = 0;
    std::size_t count = 10;
    search->add_option("--n", search_n, "number of variables")->required();
    search->add_option("--max-exp", max_exp, "maximum exponent");
    search->add_flag("--numerical-only", numerical_only, "keep numerical instances only");
    search->add_option("--seed", seed, "RNG seed");
    search->add_option("--count", count, "number of instances to emit");

    try {
        std::vector<const char*> argv{"critmon"};
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << ex.what() << "\n";
        return kExitBadInput;
    }

    std::ofstream out_file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) {
            err << "cannot open output file: " << out_path << "\n";
            return kExitBadInput;
        }
        sink = &out_file;
    }

    try {
        if (construct->parsed()) {
            validate(exps);
            *sink << presentation_to_json(exps, monoid_presentation(exps)).dump(2) << "\n";
            return kExitOk;
        }
        if (invariants->parsed()) {
            const NorthcottExponents e = instance_from_json(detail::read_instance(in_path, in));
            bool mismatch = false;
            *sink << detail::build_report(e, with_oracle, mismatch).dump(2) << "\n";
            return mismatch ? kExitMismatch : kExitOk;
        }
        if (verify->parsed()) {
            const NorthcottExponents e = instance_from_json(detail::read_instance(in_path, in));
            const gb::GroebnerReport rep = gb::verify_groebner(e);
            const bool initial_ok = rep.initial_gens == gb::expected_initial_gens(e);
            nlohmann::json j;
            j["schema"] = kSchemaVersion;
            j["instance"] = instance_to_json(e);
            j["is_groebner_basis"] = rep.is_basis;
            j["initial_gens_match"] = initial_ok;
            *sink << j.dump(2) << "\n";
            return rep.is_basis && initial_ok ? kExitOk : kExitMismatch;
        }
        if (glue_cmd->parsed()) {
            const numsgp::NumericalSemigroup s1(s1_gens), s2(s2_gens);
            const numsgp::GluingResult g = numsgp::glue(s1, s2, lam, mu);
            const numsgp::Presentation pres = numsgp::betti_and_presentation(g.semigroup);
            nlohmann::json j;
            j["schema"] = kSchemaVersion;
            j["generators"] = g.semigroup.minimal_generators();
            j["gluing_degree"] = g.degree;
            j["gluing_relation"] = {g.relation.first, g.relation.second};
            j["uniquely_presented"] = pres.uniquely_presented;
            j["is_critical"] = detail::criticality_name(numsgp::is_critical(g.semigroup));
            nlohmann::json decs = nlohmann::json::array();
            for (const auto& d : numsgp::detect_gluing(g.semigroup))
                decs.push_back({d.part1, d.part2});
            j["gluings"] = decs;
            *sink << j.dump(2) << "\n";
            return kExitOk;
        }
        if (presentation->parsed()) {
            const numsgp::NumericalSemigroup s(gens);
            nlohmann::json j = presentation_oracle_to_json(numsgp::betti_and_presentation(s));
            j["schema"] = kSchemaVersion;
            j["minimal_generators"] = s.minimal_generators();
            const numsgp::DeltaCatenary dc = numsgp::delta_and_catenary(s);
            j["delta_min"] = dc.delta_min ? nlohmann::json(*dc.delta_min) : nullptr;
            j["delta_max"] = dc.delta_max ? nlohmann::json(*dc.delta_max) : nullptr;
            j["catenary"] = dc.catenary;
            nlohmann::json decs = nlohmann::json::array();
            for (const auto& d : numsgp::detect_gluing(s)) decs.push_back({d.part1, d.part2});
            j["gluings"] = decs;
            *sink << j.dump(2) << "\n";
            return kExitOk;
        }
        if (search->parsed()) {
            if (search_n < 3 || max_exp < 1 || count == 0) {
                err << "search: invalid parameters\n";
                return kExitBadInput;
            }
            InstanceSampler sampler(seed);
            const std::size_t workers = detail::worker_count();
            std::size_t emitted = 0;
            while (emitted < count) {
                // sample a batch, evaluate presentations in parallel, emit the
                // survivors in sampling order
                std::vector<NorthcottExponents> batch;
                for (std::size_t i = 0; i < workers * 4 && batch.size() < 4 * (count - emitted);
                     ++i)
                    batch.push_back(sampler.sample(search_n, max_exp));
                std::vector<std::future<nlohmann::json>> results;
                for (const NorthcottExponents& e : batch)
                    results.push_back(std::async(
                        workers > 1 ? std::launch::async : std::launch::deferred, [e]() {
                            const MonoidPresentation p = monoid_presentation(e);
                            nlohmann::json j;
                            j["schema"] = kSchemaVersion;
                            j["instance"] = instance_to_json(e);
                            j["is_numerical"] = p.is_numerical;
                            j["generators"] = to_json(p.weight);
                            j["invariant_factors"] = to_json(p.invariant_factors);
                            return j;
                        }));
                for (auto& f : results) {
                    nlohmann::json j = f.get();
                    if (numerical_only && !j["is_numerical"].get<bool>()) continue;
                    if (emitted == count) break;
                    *sink << j.dump() << "\n";
                    ++emitted;
                }
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitBadInput;
    } catch (const nlohmann::json::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}

}  // namespace cli
}  // namespace critmon
