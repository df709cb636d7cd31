// finmod: decide subinjectivity/subprojectivity predicates over finite
// rings, enumerate module catalogs, and run the claim-verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "finmod/domains.hpp"
#include "finmod/errors.hpp"
#include "finmod/ringprops.hpp"
#include "finmod/suites.hpp"

using namespace finmod;
using nlohmann::ordered_json;

namespace {

constexpr const char* kReportFormat = "finmod.report/1";

struct RunConfig {
    std::string ring = "R8";
    u64 max_size = 64;
    unsigned max_gens = 2;
    unsigned jobs = 1;
    std::string cache_dir;
    std::string format = "table";  // or json
    u64 seed = 0;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--ring", cfg.ring, "built-in ring name or ring-definition file");
    cmd->add_option("--max-size", cfg.max_size, "catalog size bound")->default_val(64);
    cmd->add_option("--max-gens", cfg.max_gens, "catalog generator bound")->default_val(2);
    cmd->add_option("--jobs", cfg.jobs, "parallel workers")->default_val(1);
    cmd->add_option("--cache-dir", cfg.cache_dir, "catalog/memo cache directory");
    cmd->add_option("--format", cfg.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->default_val("table");
    cmd->add_option("--seed", cfg.seed, "seed for hull construction cross-checks")->default_val(0);
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["ring"] = cfg.ring;
    j["max_size"] = cfg.max_size;
    j["max_gens"] = cfg.max_gens;
    j["jobs"] = cfg.jobs;
    j["seed"] = cfg.seed;
    return j;
}

// --module selectors: catalog class id, R, J, R/J, simple:<i>, sum:<a>+<b>
FiniteModule resolve_selector(const std::string& sel, const RingPtr& ring, const Catalog& cat) {
    if (sel == "R") return regular_module(ring);
    if (sel == "J") return submodule_as_module(jacobson_radical(ring));
    if (sel == "R/J") {
        FiniteModule r = regular_module(ring);
        return quotient(r, jacobson_radical(ring)).first;
    }
    if (sel == "0") return zero_module(ring);
    if (sel.rfind("simple:", 0) == 0) {
        auto simples = simple_modules(ring);
        std::size_t i = std::stoul(sel.substr(7));
        if (i >= simples.size())
            fail(Errc::UnknownSelector, "only " + std::to_string(simples.size()) + " simples");
        return simples[i];
    }
    if (sel.rfind("sum:", 0) == 0) {
        const std::string body = sel.substr(4);
        const auto plus = body.find('+');
        if (plus == std::string::npos) fail(Errc::UnknownSelector, "sum selector needs a +");
        return direct_sum(resolve_selector(body.substr(0, plus), ring, cat),
                          resolve_selector(body.substr(plus + 1), ring, cat));
    }
    if (const CatalogClass* c = cat.class_by_id(sel)) return c->rep;
    fail(Errc::UnknownSelector, "unknown module selector: " + sel);
}

void emit(const RunConfig& cfg, const std::string& command, const ordered_json& results,
          const std::string& table) {
    if (cfg.format == "json") {
        ordered_json j;
        j["format"] = kReportFormat;
        j["command"] = command;
        j["config"] = config_json(cfg);
        j["results"] = results;
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << table;
    }
}

int cmd_ring_info(const RunConfig& cfg) {
    RingPtr ring = resolve_ring(cfg.ring);
    Catalog cat = load_or_build_catalog(ring, cfg.max_size, cfg.max_gens, cfg.cache_dir);
    RingProfile p = ring_profile(ring, cat);
    auto simples = simple_modules(ring);
    ordered_json res;
    res["ring"] = ring->name;
    res["ring_hash"] = ring->hash_hex();
    res["elements"] = ring->num_elements();
    res["radical_size"] = jacobson_radical(ring).size();
    res["simple_modules"] = simples.size();
    auto sizes = ordered_json::array();
    for (const auto& s : simples) sizes.push_back(s.size());
    res["simple_sizes"] = sizes;
    res["catalog_classes"] = cat.classes.size();
    res["profile"] = ordered_json::parse(ring_profile_json(ring, p));

    std::ostringstream tbl;
    tbl << "ring " << ring->name << "  (" << ring->num_elements() << " elements, hash "
        << ring->hash_hex() << ")\n";
    tbl << "  |J(R)| = " << jacobson_radical(ring).size() << ", simple modules: "
        << simples.size() << ", catalog classes at bound " << cfg.max_size << ": "
        << cat.classes.size() << "\n";
    auto flag = [&](const char* name, bool v, const char* prov) {
        tbl << "  " << name << ": " << (v ? "yes" : "no") << "  [" << prov << "]\n";
    };
    const std::string at = "at-scale(" + std::to_string(cat.max_size) + ")";
    flag("semisimple", p.semisimple, "exact");
    flag("local", p.local, "exact");
    flag("chain", p.chain, "exact");
    flag("self-injective (QF)", p.qf, "exact");
    flag("Kasch", p.kasch, "exact");
    flag("dual Kasch", p.dual_kasch, "exact");
    flag("V-ring", p.v_ring, "exact");
    flag("right hereditary", p.right_hereditary, "exact");
    flag("property (Q)", p.q, at.c_str());
    emit(cfg, "ring-info", res, tbl.str());
    return 0;
}

ordered_json verdict_json(const Verdict& v, const Catalog& cat) {
    ordered_json j;
    j["kind"] = v.certified() ? "CertifiedUpToBound" : "Counterexample";
    j["bound"] = v.bound;
    if (v.witness) {
        ordered_json w;
        const CatalogClass* bc = cat.class_of(v.witness->b);
        w["B"] = bc ? bc->id : "(module)";
        w["B_size"] = v.witness->b.size();
        w["A_size"] = v.witness->a.size();
        w["C_size"] = v.witness->c.size();
        j["witness"] = w;
    }
    return j;
}

int cmd_check(const RunConfig& cfg, const std::string& predicate, const std::string& module_sel,
              const std::string& b_sel, const std::string& a_sel, const std::string& m_sel,
              const std::string& n_sel) {
    RingPtr ring = resolve_ring(cfg.ring);
    Catalog cat = load_or_build_catalog(ring, cfg.max_size, cfg.max_gens, cfg.cache_dir);
    ordered_json results = ordered_json::array();
    std::ostringstream tbl;

    auto subjects = [&](const std::string& sel) {
        std::vector<std::pair<std::string, FiniteModule>> out;
        if (sel == "all") {
            for (const auto& c : cat.classes) out.push_back({c.id, c.rep});
        } else {
            out.push_back({sel, resolve_selector(sel, ring, cat)});
        }
        return out;
    };

    if (predicate == "subinjective" || predicate == "subprojective") {
        const std::string first = predicate == "subinjective" ? b_sel : m_sel;
        const std::string second = predicate == "subinjective" ? a_sel : n_sel;
        if (first.empty() || second.empty())
            fail(Errc::UnknownSelector, predicate + " needs both module selectors");
        FiniteModule x = resolve_selector(first, ring, cat);
        FiniteModule y = resolve_selector(second, ring, cat);
        const bool v = predicate == "subinjective" ? is_subinjective(x, y)
                                                   : is_subprojective(x, y);
        ordered_json r;
        r["predicate"] = predicate;
        r["first"] = first;
        r["second"] = second;
        r["value"] = v;
        results.push_back(r);
        tbl << predicate << "(" << first << ", " << second << ") = " << (v ? "true" : "false")
            << "\n";
    } else if (predicate == "sier" || predicate == "sper") {
        for (const auto& [name, mod] : subjects(module_sel)) {
            Verdict v = predicate == "sier" ? sier_verdict(mod, cat) : sper_verdict(mod, cat);
            ordered_json r;
            r["predicate"] = predicate;
            r["module"] = name;
            r["verdict"] = verdict_json(v, cat);
            results.push_back(r);
            tbl << predicate << "(" << name << ") = "
                << (v.certified() ? "CertifiedUpToBound(" + std::to_string(v.bound) + ")"
                                  : "Counterexample")
                << "\n";
            if (v.witness)
                tbl << "  witness: B of size " << v.witness->b.size() << ", A of size "
                    << v.witness->a.size() << ", C of size " << v.witness->c.size() << "\n";
        }
    } else if (predicate == "injective-hull") {
        for (const auto& [name, mod] : subjects(module_sel)) {
            HullResult h = injective_hull(mod, cfg.seed);
            ordered_json r;
            r["predicate"] = predicate;
            r["module"] = name;
            r["hull_size"] = h.hull.size();
            const CatalogClass* hc = cat.class_of(h.hull);
            if (hc) r["hull_class"] = hc->id;
            results.push_back(r);
            tbl << "E(" << name << "): size " << h.hull.size();
            if (hc) tbl << ", class " << hc->id;
            tbl << "\n";
        }
    } else if (predicate == "classify") {
        for (const auto& [name, mod] : subjects(module_sel)) {
            ClassifyRecord c = classify_at_scale(mod, cat);
            ordered_json r;
            r["predicate"] = predicate;
            r["module"] = name;
            r["bound"] = c.bound;
            r["indigent"] = c.indigent;
            r["p_indigent"] = c.p_indigent;
            r["tibs"] = c.tibs;
            r["fg_injective"] = c.fg_injective;
            r["c_injective"] = c.c_injective;
            r["fg_projective"] = c.fg_projective;
            r["c_projective"] = c.c_projective;
            results.push_back(r);
            tbl << name << " @" << c.bound << ": indigent=" << c.indigent
                << " p-indigent=" << c.p_indigent << " tibs=" << c.tibs
                << " FG-inj=" << c.fg_injective << " C-inj=" << c.c_injective
                << " FG-proj=" << c.fg_projective << " C-proj=" << c.c_projective << "\n";
        }
    } else if (predicate == "middle-class") {
        MiddleClassReport mc = middle_class_report(ring, cat);
        ordered_json r;
        r["predicate"] = predicate;
        r["bound"] = mc.bound;
        r["no_subinjective_middle_class"] = mc.no_subinjective_middle_class;
        r["no_subprojective_middle_class"] = mc.no_subprojective_middle_class;
        auto rows = ordered_json::array();
        for (const auto& row : mc.rows) {
            ordered_json jr;
            jr["id"] = row.id;
            jr["injective"] = row.injective;
            jr["indigent"] = row.indigent;
            jr["projective"] = row.projective;
            jr["p_indigent"] = row.p_indigent;
            rows.push_back(jr);
        }
        r["classes"] = rows;
        results.push_back(r);
        tbl << "middle-class report at bound " << mc.bound << "\n";
        for (const auto& row : mc.rows)
            tbl << "  " << row.id << ": injective=" << row.injective
                << " indigent=" << row.indigent << " projective=" << row.projective
                << " p-indigent=" << row.p_indigent << "\n";
        tbl << "  no subinjective middle class: " << mc.no_subinjective_middle_class << "\n";
        tbl << "  no subprojective middle class: " << mc.no_subprojective_middle_class << "\n";
    } else {
        fail(Errc::UnknownSelector, "unknown predicate: " + predicate);
    }
    emit(cfg, "check " + predicate, results, tbl.str());
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& selector, const std::string& corpus,
               const std::string& report_dir) {
    std::vector<RingPtr> rings;
    if (!corpus.empty()) {
        if (corpus != "builtin") fail(Errc::UnknownSelector, "unknown corpus: " + corpus);
        for (const auto& n : builtin_ring_names()) rings.push_back(builtin_ring(n));
    } else {
        rings.push_back(resolve_ring(cfg.ring));
    }
    if (selector != "all" && !suite_exists(selector))
        fail(Errc::UnknownSelector, "unknown suite: " + selector);
    if (!report_dir.empty()) std::filesystem::create_directories(report_dir);

    ordered_json results = ordered_json::array();
    std::ostringstream tbl;
    unsigned failed = 0, skipped = 0, passed = 0;
    for (const auto& ring : rings) {
        Catalog cat = load_or_build_catalog(ring, cfg.max_size, cfg.max_gens, cfg.cache_dir);
        std::vector<SuiteReport> reports;
        if (selector == "all") {
            reports = run_all_suites(ring, cat, cfg.jobs);
        } else {
            const Suite* s = nullptr;
            for (const auto& cand : suite_registry())
                if (cand.id == selector) s = &cand;
            SuiteReport rep;
            rep.suite_id = s->id;
            rep.title = s->title;
            rep.ring = ring->name;
            rep.bound = cat.max_size;
            const std::string reason = s->gate(ring);
            if (!reason.empty()) {
                rep.skipped = true;
                rep.skip_reason = reason;
            } else {
                rep = run_suite(selector, ring, cat);
            }
            reports.push_back(std::move(rep));
        }
        for (auto& rep : reports) {
            rep.seed = cfg.seed;
            failed += rep.failed_count();
            passed += rep.passed_count();
            skipped += rep.skipped ? 1 : 0;
            results.push_back(ordered_json::parse(suite_report_json(rep)));
            if (rep.skipped)
                tbl << "suite " << rep.suite_id << " [" << rep.ring << "] SKIP: "
                    << rep.skip_reason << "\n";
            else
                tbl << suite_report_table(rep);
            if (!report_dir.empty()) {
                std::ofstream f(report_dir + "/" + rep.ring + "-" + rep.suite_id + ".json");
                f << suite_report_json(rep) << "\n";
            }
        }
    }
    tbl << "total: " << passed << " checks passed, " << failed << " failed, " << skipped
        << " suites skipped\n";
    emit(cfg, "verify " + selector, results, tbl.str());
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact subinjectivity/subprojectivity engine over finite rings"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* info = app.add_subcommand("ring-info", "ring invariants and predicate profile");
    add_common(info, cfg);

    auto* check = app.add_subcommand("check", "run one predicate");
    add_common(check, cfg);
    std::string predicate, module_sel, b_sel, a_sel, m_sel, n_sel;
    check->add_option("predicate", predicate,
                      "subinjective | subprojective | sier | sper | injective-hull | classify | "
                      "middle-class")
        ->required();
    check->add_option("--module", module_sel, "module selector (or 'all')");
    check->add_option("--b", b_sel, "first module for subinjective");
    check->add_option("--a", a_sel, "second module for subinjective");
    check->add_option("--m", m_sel, "first module for subprojective");
    check->add_option("--n", n_sel, "second module for subprojective");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, cfg);
    std::string suite_sel = "all", corpus, report_dir;
    verify->add_option("suite", suite_sel, "suite id or 'all'")->default_val("all");
    verify->add_option("--corpus", corpus, "'builtin' sweeps every built-in ring");
    verify->add_option("--report-dir", report_dir, "write one JSON report per suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) return cmd_ring_info(cfg);
        if (check->parsed()) return cmd_check(cfg, predicate, module_sel, b_sel, a_sel, m_sel, n_sel);
        if (verify->parsed()) return cmd_verify(cfg, suite_sel, corpus, report_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case Errc::BoundExceeded: return 3;
            case Errc::UnknownSelector:
            case Errc::MalformedSpec:
            case Errc::IoFailure: return 2;
            default: return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
