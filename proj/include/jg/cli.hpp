#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "jg/constructions.hpp"
#include "jg/expseq.hpp"
#include "jg/io.hpp"
#include "jg/jstructure.hpp"
#include "jg/lie.hpp"
#include "jg/rings.hpp"
#include "jg/rng.hpp"
#include "jg/search.hpp"
#include "jg/version.hpp"

namespace jg::cli {

// Everything a command invocation needs, echoed back in its report.
struct RunConfig {
    std::string command;
    std::string subcommand;
    // verify
    std::string structure_path;
    // search
    std::string group_spec;
    std::string variant = "J2";
    bool no_prune = false;
    std::string order = "canonical";
    std::string budget = "60s";
    std::uint64_t max_results = 0;
    std::uint32_t max_group_order = 64;
    // construct
    std::uint32_t mod_m = 0;
    std::uint32_t padic_p = 0;
    std::uint32_t precision = 12;
    std::string torsion;
    std::string free_part;
    std::uint32_t truncation = 12;
    std::string h_spec;
    std::int64_t window = 25;
    std::string alpha = "sqrt2/2";
    std::string witness = "1";
    std::string module_ring = "Q";
    std::uint32_t rank = 2;
    std::uint32_t proj_index = 0;
    std::uint32_t dim = 3;
    std::string nil_witness;
    std::string nil_proj;
    // demo
    std::string padic = "";
    std::uint32_t demo_mod = 0;
    std::string sequence = "geometric:3";
    // shared
    std::uint32_t samples = 200;
    std::uint64_t seed = 0;
    std::string json_path;
};

struct CommandResult {
    int exit_code = 0;
    Json report;
};

inline Json base_report(const RunConfig& c, Json config_echo) {
    config_echo["seed"] = c.seed;
    Json r;
    r["schema"] = "jgroup-report/1";
    r["version"] = version_string;
    r["command"] = c.subcommand.empty() ? c.command : c.command + " " + c.subcommand;
    r["config"] = std::move(config_echo);
    return r;
}

inline Json error_outcome(const std::string& reason) { return Json{{"error", reason}}; }

inline Json matrix_to_json(const NilpotentElement& x) {
    Json rows = Json::array();
    for (std::uint32_t i = 0; i < x.n; ++i) {
        Json row = Json::array();
        for (std::uint32_t j = 0; j < x.n; ++j) row.push_back(rat_to_string(x.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ------------------------------------------------------------------ verify

inline CommandResult cmd_verify(const RunConfig& c) {
    Json rep = base_report(c, Json{{"structure", c.structure_path}});
    JStructure s;
    try {
        s = structure_from_json(read_json_file(c.structure_path));
        check_well_formed(s);
    } catch (const std::exception& e) {
        rep["outcome"] = error_outcome(e.what());
        return {1, rep};
    }
    auto v = verify_axiom(s);
    Json violations = Json::array();
    for (const auto& viol : v.violations)
        violations.push_back(Json{{"x", viol.x}, {"lhs", viol.lhs}, {"rhs", viol.rhs}});
    rep["outcome"] = Json{{"valid", v.valid},
                          {"checks", v.checks_performed},
                          {"violations", std::move(violations)},
                          {"group", s.group->name()},
                          {"order", s.group->order()},
                          {"witness", s.witness},
                          {"variant", variant_name(s.variant)}};
    return {v.valid ? 0 : 2, rep};
}

// ------------------------------------------------------------------ search

inline CommandResult cmd_search(const RunConfig& c) {
    Json rep = base_report(c, Json{{"group", c.group_spec},
                                   {"variant", c.variant},
                                   {"prune", !c.no_prune},
                                   {"order", c.order},
                                   {"budget", c.budget},
                                   {"max_results", c.max_results},
                                   {"max_group_order", c.max_group_order}});
    GroupPtr g;
    SearchOptions opts;
    try {
        g = share(group_from_spec(c.group_spec));
        opts.variant = variant_from_name(c.variant);
        opts.witness_filter = c.no_prune ? WitnessFilter::All : WitnessFilter::CentralizerPruned;
        if (c.order != "canonical" && c.order != "reversed")
            throw ParseError("search: --order must be canonical or reversed");
        opts.enumeration_order =
            c.order == "reversed" ? EnumerationOrder::Reversed : EnumerationOrder::Canonical;
        opts.time_budget_seconds = duration_seconds(c.budget);
        opts.max_results = c.max_results;
        opts.max_group_order = c.max_group_order;
        if (g->order() > opts.max_group_order)
            throw ParseError("search: group order " + std::to_string(g->order()) +
                             " exceeds --max-order " + std::to_string(opts.max_group_order));
    } catch (const std::exception& e) {
        rep["outcome"] = error_outcome(e.what());
        return {1, rep};
    }

    SearchOutcome outcome;
    try {
        outcome = search_coset(g, opts);
    } catch (const Error& e) {
        rep["outcome"] = error_outcome(e.what());
        return {1, rep};
    }
    Json structures = Json::array();
    for (const auto& s : outcome.structures)
        structures.push_back(Json{{"witness", s.witness},
                                  {"fmap", s.fmap},
                                  {"variant", variant_name(s.variant)},
                                  {"verified", s.verified}});
    Json out{{"group", Json{{"spec", c.group_spec}, {"name", g->name()}, {"order", g->order()}}},
             {"count", outcome.structures.size()},
             {"exhaustive", outcome.exhaustive},
             {"witnesses_pruned", outcome.witnesses_pruned},
             {"seeds_tested", outcome.seeds_tested},
             {"structures", std::move(structures)}};

    if (!outcome.structures.empty()) {
        rep["outcome"] = std::move(out);
        return {0, rep};
    }
    auto cert = certify_non_jgroup(g, opts);
    out["certificate"] = Json{{"certified", cert.certified},
                              {"method", certify_method_name(cert.method)},
                              {"detail", cert.detail},
                              {"conclusive", cert.conclusive}};
    rep["outcome"] = std::move(out);
    return {cert.certified && cert.conclusive ? 3 : 4, rep};
}

// --------------------------------------------------------------- construct

inline CommandResult cmd_construct_ring(const RunConfig& c) {
    Json rep = base_report(c, Json{{"mod", c.mod_m}});
    if (c.mod_m == 0) {
        rep["outcome"] = error_outcome("construct ring: --mod is required");
        return {1, rep};
    }
    try {
        auto ring = RingDescriptor::mod(c.mod_m);
        auto rj = ring_to_jgroup(ring);
        rep["outcome"] = Json{{"ring", ring.str()},
                              {"structure", structure_to_json(*rj.finite)},
                              {"verified", rj.finite->verified}};
        return {0, rep};
    } catch (const Error& e) {
        rep["outcome"] = error_outcome(e.what());
        return {2, rep};
    }
}

inline CommandResult cmd_construct_padic(const RunConfig& c) {
    Json rep = base_report(
        c, Json{{"p", c.padic_p}, {"precision", c.precision}, {"samples", c.samples}});
    if (c.padic_p == 0) {
        rep["outcome"] = error_outcome("construct padic: --p is required");
        return {1, rep};
    }
    try {
        auto ring = RingDescriptor::padic(c.padic_p, c.precision);
        auto rj = ring_to_jgroup(ring);
        TruncatedPAdicInt w = std::get<TruncatedPAdicInt>(rj.witness_element());
        std::uint32_t out_precision = c.padic_p == 2 ? c.precision - 1 : c.precision;

        SampleRng rng(c.seed);
        Int modulus = int_pow(Int(c.padic_p), c.precision);
        std::uint32_t passes = 0;
        for (std::uint32_t i = 0; i < c.samples; ++i) {
            TruncatedPAdicInt x(c.padic_p, c.precision, rng.big_below(modulus));
            auto fx = std::get<TruncatedPAdicInt>(rj.apply(x));
            auto fxw = std::get<TruncatedPAdicInt>(rj.apply(padic_add(x, w)));
            if (padic_congruent(fxw, padic_add(fx, x))) ++passes;
        }
        rep["outcome"] = Json{{"ring", ring.str()},
                              {"witness", padic_to_json(w)},
                              {"samples", c.samples},
                              {"axiom_passes", passes},
                              {"output_precision", out_precision}};
        return {passes == c.samples ? 0 : 2, rep};
    } catch (const Error& e) {
        rep["outcome"] = error_outcome(e.what());
        return {2, rep};
    }
}

inline CommandResult cmd_construct_profinite(const RunConfig& c) {
    Json rep = base_report(c, Json{{"torsion", c.torsion},
                                   {"free", c.free_part},
                                   {"truncation", c.truncation}});
    ProfiniteProductDescriptor d;
    try {
        d.torsion = torsion_from_spec(c.torsion);
        d.torsion_free = free_from_spec(c.free_part);
        d.truncation = c.truncation;
    } catch (const std::exception& e) {
        rep["outcome"] = error_outcome(e.what());
        return {1, rep};
    }
    try {
        auto built = profinite_product(d);
        if (std::holds_alternative<JStructure>(built)) {
            const auto& s = std::get<JStructure>(built);
            rep["outcome"] = Json{{"kind", "finite"},
                                  {"structure", structure_to_json(s)},
                                  {"verified", s.verified}};
        } else {
            const auto& prod = std::get<PAdicProductStructure>(built);
            Json witness = Json::array();
            for (const auto& w : prod.witness()) witness.push_back(padic_to_json(w));
            rep["outcome"] = Json{{"kind", "padic-product"},
                                  {"primes", prod.primes},
                                  {"truncation", prod.truncation},
                                  {"witness", std::move(witness)}};
        }
        return {0, rep};
    } catch (const Error& e) {
        rep["outcome"] = error_outcome(e.what());
        return {2, rep};
    }
}

inline CommandResult cmd_construct_ztimesh(const RunConfig& c) {
    Json rep = base_report(c, Json{{"h", c.h_spec}, {"window", c.window}});
    GroupPtr h;
    try {
        if (c.h_spec.empty()) throw ParseError("construct ztimesh: --group is required");
        h = share(group_from_spec(c.h_spec));
    } catch (const std::exception& e) {
        rep["outcome"] = error_outcome(e.what());
        return {1, rep};
    }
    try {
        auto s = z_times_h(h, Int(c.window));
        Json values = Json::array();
        for (std::int64_t k = -2; k <= 2; ++k)
            for (element_t u = 0; u < std::min<std::uint32_t>(h->order(), 6); ++u) {
                auto [fk, fu] = s.apply(Int(k), u);
                values.push_back(Json{{"k", k}, {"u", u}, {"f_k", fk.str()}, {"f_u", fu}});
            }
        rep["outcome"] = Json{{"h", h->name()},
                              {"h_order", h->order()},
                              {"window", c.window},
                              {"window_verified", s.window_verified},
                              {"witness", Json{{"k", "1"}, {"u", h->identity()}}},
                              {"values", std::move(values)}};
        return {0, rep};
    } catch (const Error& e) {
        rep["outcome"] = error_outcome(e.what());
        return {2, rep};
    }
}

inline CommandResult cmd_construct_realsub(const RunConfig& c) {
    Json rep = base_report(
        c, Json{{"witness", c.witness}, {"alpha", c.alpha}, {"samples", c.samples}});
    RealSubgroupDescriptor d;
    try {
        d.witness = quad_from_string(c.witness);
        d.alpha = quad_from_string(c.alpha);
    } catch (const std::exception& e) {
        rep["outcome"] = error_outcome(e.what());
        return {1, rep};
    }
    try {
        check_real_subgroup(d);
        SampleRng rng(c.seed);
        std::uint32_t shift_passes = 0;
        std::uint32_t axiom_passes = 0;
        for (std::uint32_t i = 0; i < c.samples; ++i) {
            QuadRat x{Rat(rng.big_signed(10000)), Rat(rng.big_signed(10000))};
            if (real_subgroup_project(d, x + d.witness) == real_subgroup_project(d, x) + 1)
                ++shift_passes;
            if (real_subgroup_structure(d, x + d.witness) ==
                real_subgroup_structure(d, x) + x)
                ++axiom_passes;
        }
        rep["outcome"] = Json{{"witness", quad_to_string(d.witness)},
                              {"alpha", quad_to_string(d.alpha)},
                              {"samples", c.samples},
                              {"shift_passes", shift_passes},
                              {"axiom_passes", axiom_passes}};
        return {shift_passes == c.samples && axiom_passes == c.samples ? 0 : 2, rep};
    } catch (const Error& e) {
        rep["outcome"] = error_outcome(e.what());
        return {2, rep};
    }
}

inline CommandResult cmd_construct_module(const RunConfig& c) {
    Json rep = base_report(c, Json{{"ring", c.module_ring},
                                   {"rank", c.rank},
                                   {"proj", c.proj_index},
                                   {"samples", c.samples}});
    try {
        if (c.module_ring != "Q")
            throw ValidationError(
                "construct module: only the rational field Q is supported as the base ring");
        auto m = ModuleDescriptor::coordinate(c.rank, c.proj_index);
        SampleRng rng(c.seed);
        std::uint32_t shift_passes = 0;
        for (std::uint32_t i = 0; i < c.samples; ++i) {
            std::vector<Rat> x(c.rank);
            for (auto& e : x) e = rng.rational(1000, 40);
            std::vector<Rat> xw(c.rank);
            for (std::uint32_t k = 0; k < c.rank; ++k) xw[k] = x[k] + m.witness[k];
            auto lhs = module_projection_structure(m, xw);
            auto rhs = module_projection_structure(m, x);
            bool ok = true;
            for (std::uint32_t k = 0; k < c.rank; ++k)
                if (lhs[k] != rhs[k] + x[k]) ok = false;
            if (ok) ++shift_passes;
        }
        Json witness = Json::array();
        for (const auto& e : m.witness) witness.push_back(rat_to_string(e));
        rep["outcome"] = Json{{"ring", "Q"},
                              {"rank", c.rank},
                              {"projection_index", c.proj_index},
                              {"witness", std::move(witness)},
                              {"samples", c.samples},
                              {"shift_passes", shift_passes}};
        return {shift_passes == c.samples ? 0 : 2, rep};
    } catch (const Error& e) {
        rep["outcome"] = error_outcome(e.what());
        return {2, rep};
    }
}

inline CommandResult cmd_construct_nilpotent(const RunConfig& c) {
    Json rep = base_report(c, Json{{"dim", c.dim},
                                   {"witness", c.nil_witness},
                                   {"proj", c.nil_proj},
                                   {"samples", c.samples}});
    std::pair<std::uint32_t, std::uint32_t> wpos, ppos;
    try {
        if (c.dim < 2 || c.dim > 8)
            throw ParseError("construct nilpotent: --dim must be between 2 and 8");
        wpos = c.nil_witness.empty()
                   ? std::pair<std::uint32_t, std::uint32_t>{0, c.dim - 1}
                   : elementary_from_spec(c.nil_witness, c.dim);
        ppos = c.nil_proj.empty() ? wpos : elementary_from_spec(c.nil_proj, c.dim);
    } catch (const std::exception& e) {
        rep["outcome"] = error_outcome(e.what());
        return {1, rep};
    }
    try {
        auto w = nil_basis(c.dim, wpos.first, wpos.second);
        auto s = nilpotent_jstructure(c.dim, w,
                                      coefficient_functional(c.dim, ppos.first, ppos.second));
        SampleRng rng(c.seed);
        std::uint32_t axiom_passes = 0;
        for (std::uint32_t i = 0; i < c.samples; ++i) {
            NilpotentElement x = nil_zero(c.dim);
            for (auto [a, b] : strict_upper_positions(c.dim)) x.at(a, b) = rng.rational(20, 8);
            if (s.apply(bch_product(x, w)) == bch_product(s.apply(x), x)) ++axiom_passes;
        }
        Json coeffs = Json::array();
        for (const auto& e : s.coeffs) coeffs.push_back(rat_to_string(e));
        rep["outcome"] = Json{{"dim", c.dim},
                              {"witness", matrix_to_json(w)},
                              {"projection", std::move(coeffs)},
                              {"samples", c.samples},
                              {"axiom_passes", axiom_passes}};
        return {axiom_passes == c.samples ? 0 : 2, rep};
    } catch (const Error& e) {
        rep["outcome"] = error_outcome(e.what());
        return {2, rep};
    }
}

// -------------------------------------------------------------------- demo

inline CommandResult cmd_demo_expseq(const RunConfig& c) {
    Json rep = base_report(c, Json{{"padic", c.padic},
                                   {"mod", c.demo_mod},
                                   {"sequence", c.sequence},
                                   {"samples", c.samples}});
    RingDescriptor ring = RingDescriptor::integers();
    ExponentSequence seq;
    try {
        if (!c.padic.empty()) {
            auto [p, n] = padic_spec_from_string(c.padic);
            ring = RingDescriptor::padic(p, n);
        } else if (c.demo_mod > 0) {
            ring = RingDescriptor::mod(c.demo_mod);
        } else {
            throw ParseError("demo expseq: give --padic p:N or --mod M");
        }
        seq = sequence_from_spec(c.sequence);
    } catch (const std::exception& e) {
        rep["outcome"] = error_outcome(e.what());
        return {1, rep};
    }
    try {
        auto structure = ring_to_jgroup(ring);
        auto report = pointwise_propagation_demo(structure, seq, c.samples, c.seed);
        Json terms = Json::array();
        for (const auto& t : seq.terms) terms.push_back(t.str());
        rep["outcome"] = Json{{"ring", ring.str()},
                              {"terms", std::move(terms)},
                              {"witness_ok", report.witness_ok},
                              {"binom_claim_ok", report.binom_claim_ok},
                              {"valuation_target", report.valuation_target},
                              {"witness_valuations", report.witness_valuations},
                              {"samples_requested", report.samples_requested},
                              {"samples_passed", report.samples_passed},
                              {"all_pass", report.all_pass()}};
        return {report.all_pass() ? 0 : 2, rep};
    } catch (const Error& e) {
        rep["outcome"] = error_outcome(e.what());
        return {2, rep};
    }
}

// ---------------------------------------------------------------- dispatch

inline CommandResult dispatch(const RunConfig& c) {
    if (c.command == "verify") return cmd_verify(c);
    if (c.command == "search") return cmd_search(c);
    if (c.command == "construct") {
        if (c.subcommand == "ring") return cmd_construct_ring(c);
        if (c.subcommand == "padic") return cmd_construct_padic(c);
        if (c.subcommand == "profinite") return cmd_construct_profinite(c);
        if (c.subcommand == "ztimesh") return cmd_construct_ztimesh(c);
        if (c.subcommand == "realsub") return cmd_construct_realsub(c);
        if (c.subcommand == "module") return cmd_construct_module(c);
        if (c.subcommand == "nilpotent") return cmd_construct_nilpotent(c);
    }
    if (c.command == "demo" && c.subcommand == "expseq") return cmd_demo_expseq(c);
    Json rep = base_report(c, Json::object());
    rep["outcome"] = error_outcome("unknown command");
    return {1, rep};
}

inline std::uint32_t default_precision_from_env() {
    const char* env = std::getenv("JGROUP_PRECISION");
    if (!env || !*env) return 12;
    try {
        std::uint32_t v = parse_u32(env);
        return v >= 1 ? v : 12;
    } catch (const Error&) {
        return 12;
    }
}

inline int run_cli(int argc, const char* const* argv) {
    RunConfig c;
    c.precision = default_precision_from_env();

    CLI::App app{"exact construction, verification, and search of J-group structures"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--json", c.json_path, "also write the report to this file");
        sub->add_option("--seed", c.seed, "seed for sampled checks");
    };

    auto* verify = app.add_subcommand("verify", "check a structure file against its axiom");
    verify->add_option("structure", c.structure_path, "structure JSON file")->required();
    add_common(verify);

    auto* search = app.add_subcommand("search", "enumerate all structures on a finite group");
    search->add_option("spec", c.group_spec, "group spec, e.g. cyclic:9 or product:cyclic:3xsym:3")
        ->required();
    search->add_option("--variant", c.variant, "axiom flavor J1..J4 (default J2)");
    search->add_flag("--no-prune", c.no_prune, "skip the witness admissibility pruning");
    search->add_option("--order", c.order, "enumeration order: canonical or reversed");
    search->add_option("--budget", c.budget, "time budget, e.g. 60s, 1ms (default 60s)");
    search->add_option("--max-results", c.max_results, "stop after this many structures (0 = all)");
    search->add_option("--max-order", c.max_group_order, "largest group order accepted");
    add_common(search);

    auto* construct = app.add_subcommand("construct", "build a structure from a recipe");
    construct->require_subcommand(1);

    auto* ring = construct->add_subcommand("ring", "modular ring with the binomial map");
    ring->add_option("--mod", c.mod_m, "modulus m for Z/m")->required();
    add_common(ring);

    auto* padic = construct->add_subcommand("padic", "truncated p-adic ring structure");
    padic->add_option("--p", c.padic_p, "prime p")->required();
    padic->add_option("--precision", c.precision, "digits to track (default 12 or $JGROUP_PRECISION)");
    padic->add_option("--samples", c.samples, "sampled axiom checks");
    add_common(padic);

    auto* profinite = construct->add_subcommand("profinite", "product of p-power factors");
    profinite->add_option("--torsion", c.torsion, "factors p:i:multiplicity, comma separated");
    profinite->add_option("--free", c.free_part, "factors p:multiplicity, comma separated");
    profinite->add_option("--truncation", c.truncation, "p-adic truncation for free factors");
    add_common(profinite);

    auto* ztimesh = construct->add_subcommand("ztimesh", "power structure on Z x H");
    ztimesh->add_option("--group", c.h_spec, "finite group spec for H")->required();
    ztimesh->add_option("--window", c.window, "verification window for k (default 25)");
    add_common(ztimesh);

    auto* realsub = construct->add_subcommand("realsub", "dense subgroup Z + Z*sqrt2 of R");
    realsub->add_option("--alpha", c.alpha, "cut point outside the subgroup (default sqrt2/2)");
    realsub->add_option("--witness", c.witness, "witness in the subgroup (default 1)");
    realsub->add_option("--samples", c.samples, "sampled checks (default 200)");
    add_common(realsub);

    auto* module = construct->add_subcommand("module", "rational vector space with projection");
    module->add_option("--ring", c.module_ring, "base ring (only Q)");
    module->add_option("--rank", c.rank, "dimension of the space");
    module->add_option("--proj", c.proj_index, "coordinate index of the projection");
    module->add_option("--samples", c.samples, "sampled checks");
    add_common(module);

    auto* nilpotent = construct->add_subcommand("nilpotent", "strictly upper triangular algebra");
    nilpotent->add_option("--dim", c.dim, "matrix dimension (2..8)")->required();
    nilpotent->add_option("--witness", c.nil_witness, "central witness, e.g. E14 (default E1n)");
    nilpotent->add_option("--proj", c.nil_proj, "functional coordinate, e.g. E14");
    nilpotent->add_option("--samples", c.samples, "sampled axiom checks");
    add_common(nilpotent);

    auto* demo = app.add_subcommand("demo", "run a demonstration");
    demo->require_subcommand(1);
    auto* expseq = demo->add_subcommand("expseq", "exponent sequence propagation");
    expseq->add_option("--padic", c.padic, "p-adic ring as p:precision");
    expseq->add_option("--mod", c.demo_mod, "finite ring Z/m instead of a p-adic one");
    expseq->add_option("--sequence", c.sequence, "geometric:B[:len] or constant:V[:len]");
    expseq->add_option("--samples", c.samples, "random elements to test");
    add_common(expseq);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    for (auto* sub : app.get_subcommands()) {
        c.command = sub->get_name();
        for (auto* nested : sub->get_subcommands()) c.subcommand = nested->get_name();
    }

    auto start = std::chrono::steady_clock::now();
    CommandResult res = dispatch(c);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    res.report["timing"] = Json{{"seconds", seconds}};
    std::cout << res.report.dump(2) << std::endl;
    if (!c.json_path.empty()) {
        try {
            write_json_file(c.json_path, res.report);
        } catch (const Error& e) {
            std::cerr << e.what() << std::endl;
            return 1;
        }
    }
    return res.exit_code;
}

}  // namespace jg::cli
