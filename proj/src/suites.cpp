#include "finmod/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "finmod/errors.hpp"

namespace finmod {

namespace {

std::string b2s(bool v) { return v ? "true" : "false"; }

void check_bool(SuiteReport& rep, const std::string& claim, bool expected, bool observed,
                const std::string& witness = "") {
    CheckResult c;
    c.claim = claim;
    c.expected = b2s(expected);
    c.observed = b2s(observed);
    c.pass = expected == observed;
    if (!c.pass) c.witness = witness;
    rep.checks.push_back(std::move(c));
}

void check_count(SuiteReport& rep, const std::string& claim, u64 expected, u64 observed,
                 const std::string& witness = "") {
    CheckResult c;
    c.claim = claim;
    c.expected = std::to_string(expected);
    c.observed = std::to_string(observed);
    c.pass = expected == observed;
    if (!c.pass) c.witness = witness;
    rep.checks.push_back(std::move(c));
}

void note(SuiteReport& rep, const std::string& claim, const std::string& observed) {
    CheckResult c;
    c.claim = claim;
    c.expected = "(report)";
    c.observed = observed;
    c.pass = true;
    rep.checks.push_back(std::move(c));
}

FiniteModule simple_top(const RingPtr& ring) {
    FiniteModule r = regular_module(ring);
    return quotient(r, jacobson_radical(ring)).first;
}

FiniteModule sum_of_distinct_simples(const RingPtr& ring) {
    FiniteModule s = zero_module(ring);
    for (const auto& x : simple_modules(ring)) s = direct_sum(s, x);
    return s;
}

bool embeds_in(const FiniteModule& m, const FiniteModule& c) {
    if (m.size() > c.size()) return false;
    auto hs = hom_set(m, c);
    bool found = false;
    enumerate_homs(*hs, 1u << 22, [&](const ModuleHom& h) {
        if (hom_injective(h)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

bool image_of(const FiniteModule& c, const FiniteModule& m) {
    if (m.size() > c.size()) return false;
    auto hs = hom_set(c, m);
    bool found = false;
    enumerate_homs(*hs, 1u << 22, [&](const ModuleHom& h) {
        if (hom_surjective(h)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

std::vector<std::string> ininv_members(const FiniteModule& m, const Catalog& cat) {
    return domain_at_scale(m, DomainKind::InInv, cat).members;
}

// classes N with is_subinjective(N, A) for every A in the family
std::vector<std::string> intersect_ininv(const std::vector<const CatalogClass*>& family,
                                         const Catalog& cat) {
    std::vector<std::string> out;
    for (const auto& n : cat.classes) {
        bool all = true;
        for (const auto* a : family)
            if (!is_subinjective(n.rep, a->rep)) {
                all = false;
                break;
            }
        if (all) out.push_back(n.id);
    }
    return out;
}

// classes N with is_subprojective(B, N) for every B in the family
std::vector<std::string> intersect_prinv(const std::vector<const CatalogClass*>& family,
                                         const Catalog& cat) {
    std::vector<std::string> out;
    for (const auto& n : cat.classes) {
        bool all = true;
        for (const auto* b : family)
            if (!is_subprojective(b->rep, n.rep)) {
                all = false;
                break;
            }
        if (all) out.push_back(n.id);
    }
    return out;
}

std::vector<const CatalogClass*> family_of(const Catalog& cat, const char* which) {
    std::vector<const CatalogClass*> out;
    for (const auto& c : cat.classes) {
        if (std::string(which) == "S" && c.simple_flag) out.push_back(&c);
        if (std::string(which) == "C" && c.cyclic) out.push_back(&c);
        if (std::string(which) == "FL") out.push_back(&c);
        if (std::string(which) == "FG") out.push_back(&c);
    }
    return out;
}

std::string no_gate(const RingPtr&) { return ""; }

std::string qf_gate(const RingPtr& r) {
    return is_qf(r) ? "" : "requires a self-injective (QF) ring";
}

std::string hereditary_gate(const RingPtr& r) {
    return is_right_hereditary(r) ? "" : "requires a right hereditary ring";
}

std::function<std::string(const RingPtr&)> same_structure_gate(const char* builtin_name,
                                                               const char* what) {
    std::string name = builtin_name;
    std::string reason = std::string("requires the ") + what;
    return [name, reason](const RingPtr& r) -> std::string {
        return r->same_structure(*builtin_ring(name)) ? "" : reason;
    };
}

// ---------------------------------------------------------------------------

void suite_l21(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    u64 in_violations = 0, pr_violations = 0, triples = 0;
    std::string witness;
    for (const auto& ncls : cat.classes) {
        for (const auto& bcls : cat.classes) {
            for (const auto& a : submodules(bcls.rep)) {
                FiniteModule amod = submodule_as_module(a);
                FiniteModule c = quotient(bcls.rep, a).first;
                ++triples;
                if (is_subinjective(amod, ncls.rep) && is_subinjective(c, ncls.rep) &&
                    !is_subinjective(bcls.rep, ncls.rep)) {
                    ++in_violations;
                    if (witness.empty())
                        witness = "In: N=" + ncls.id + " B=" + bcls.id;
                }
                if (is_subprojective(ncls.rep, amod) && is_subprojective(ncls.rep, c) &&
                    !is_subprojective(ncls.rep, bcls.rep)) {
                    ++pr_violations;
                    if (witness.empty())
                        witness = "Pr: N=" + ncls.id + " B=" + bcls.id;
                }
            }
        }
    }
    note(rep, "triples swept (N x SES)", std::to_string(triples));
    check_count(rep, "extension-closure violations of In-domains", 0, in_violations, witness);
    check_count(rep, "extension-closure violations of Pr-domains", 0, pr_violations, witness);
}

void suite_e24(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    FiniteModule r = regular_module(ring);
    FiniteModule j = submodule_as_module(jacobson_radical(ring));
    FiniteModule k = simple_top(ring);
    check_bool(rep, "dual Kasch", true, is_dual_kasch(ring));
    check_bool(rep, "self-injective (QF)", false, is_qf(ring));
    check_bool(rep, "R in In-1(J)", true, is_subinjective(r, j));
    check_bool(rep, "R in In-1(R/J)", true, is_subinjective(r, k));
    check_bool(rep, "R in In-1(R)", false, is_subinjective(r, r));
    Verdict v = sier_verdict(r, cat);
    check_bool(rep, "verdict for R is a counterexample", true, !v.certified());
    if (v.witness) check_bool(rep, "returned witness re-verifies", true,
                              verify_sier_witness(r, *v.witness));
    // the canonical witness 0 -> J -> R -> R/J -> 0 verifies as well
    const CatalogClass* rc = cat.class_of(r);
    if (rc) {
        SesWitness pinned;
        pinned.b = rc->rep;
        pinned.a = SubmoduleHandle{rc->rep, radical(rc->rep).span};
        pinned.c = quotient(rc->rep, pinned.a).first;
        auto failing = restriction_witness(injective_hull(iso_canonical_rep(r)).embedding, rc->rep);
        check_bool(rep, "a hom R -> R fails to extend", true, failing.has_value());
        if (failing) {
            pinned.failing = *failing;
            check_bool(rep, "the (J, R, R/J) sequence is a counterexample", true,
                       verify_sier_witness(r, pinned));
        }
    }
}

void suite_e25(const RingPtr&, const Catalog&, SuiteReport& rep) {
    rep.skipped = true;
    rep.skip_reason = "OUT_OF_SCOPE: quantifies over an infinite base ring";
}

void suite_e26(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    u64 bad_inj = 0, bad_proj = 0, bad_sums = 0;
    for (const auto& c : cat.classes) {
        if (c.injective && !sier_certified(c.rep, cat)) ++bad_inj;
        if (c.projective && !sper_certified(c.rep, cat)) ++bad_proj;
    }
    check_count(rep, "injective classes that fail si.e.r. certification", 0, bad_inj);
    check_count(rep, "projective classes that fail sp.e.r. certification", 0, bad_proj);
    for (const auto& m : cat.classes) {
        if (!sier_certified(m.rep, cat)) continue;
        for (const auto& e : cat.classes) {
            if (!e.injective || m.size * e.size > cat.max_size) continue;
            if (!sier_certified(direct_sum(m.rep, e.rep), cat)) ++bad_sums;
        }
    }
    check_count(rep, "si.e.r. sums with injectives that fail certification", 0, bad_sums);
    if (is_right_hereditary(ring)) {
        // over a hereditary (noetherian) ring the In-domain of R is exactly
        // the injectives, so R is si.e.r.
        auto in_r = domain_at_scale(regular_module(ring), DomainKind::In, cat);
        check_bool(rep, "hereditary: In(R) = injective classes", true,
                   in_r.members == injective_class_ids(cat));
        check_bool(rep, "hereditary: R is si.e.r. at scale", true,
                   sier_certified(regular_module(ring), cat));
    }
}

void suite_p27(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    // exact pointwise laws: a direct sum lies in a domain exactly when both
    // summands do, in either argument
    u64 law_mism = 0;
    std::string witness;
    for (std::size_t i = 0; i < cat.classes.size(); ++i)
        for (std::size_t j = i; j < cat.classes.size(); ++j) {
            const auto& a = cat.classes[i];
            const auto& b = cat.classes[j];
            if (a.size * b.size > 16) continue;
            FiniteModule s = direct_sum(a.rep, b.rep);
            for (const auto& n : cat.classes) {
                if (is_subinjective(s, n.rep) !=
                    (is_subinjective(a.rep, n.rep) && is_subinjective(b.rep, n.rep)))
                    ++law_mism;
                if (is_subinjective(n.rep, s) !=
                    (is_subinjective(n.rep, a.rep) && is_subinjective(n.rep, b.rep)))
                    ++law_mism;
                if (is_subprojective(s, n.rep) !=
                    (is_subprojective(a.rep, n.rep) && is_subprojective(b.rep, n.rep)))
                    ++law_mism;
                if (is_subprojective(n.rep, s) !=
                    (is_subprojective(n.rep, a.rep) && is_subprojective(n.rep, b.rep)))
                    ++law_mism;
                if (law_mism && witness.empty()) witness = a.id + "+" + b.id + " vs " + n.id;
            }
        }
    check_count(rep, "pointwise direct-sum law mismatches (both arguments)", 0, law_mism,
                witness);
    // closure: certified summands give a certified sum
    u64 closure_mism = 0;
    const u64 sum_cap = cat.classes.size() > 24 ? std::min<u64>(cat.max_size, 32) : cat.max_size;
    note(rep, "closure swept for sums up to size", std::to_string(sum_cap));
    for (std::size_t i = 0; i < cat.classes.size(); ++i)
        for (std::size_t j = i; j < cat.classes.size(); ++j) {
            const auto& a = cat.classes[i];
            const auto& b = cat.classes[j];
            if (a.size * b.size > sum_cap) continue;
            if (!sier_certified(a.rep, cat) || !sier_certified(b.rep, cat)) continue;
            FiniteModule s = direct_sum(a.rep, b.rep);
            if (!sier_certified(s, cat)) {
                ++closure_mism;
                if (witness.empty()) witness = a.id + "+" + b.id;
            }
        }
    for (std::size_t i = 0; i < cat.classes.size(); ++i)
        for (std::size_t j = i; j < cat.classes.size(); ++j) {
            const auto& a = cat.classes[i];
            const auto& b = cat.classes[j];
            if (a.size * b.size > sum_cap) continue;
            if (!sper_certified(a.rep, cat) || !sper_certified(b.rep, cat)) continue;
            FiniteModule s = direct_sum(a.rep, b.rep);
            if (!sper_certified(s, cat)) {
                ++closure_mism;
                if (witness.empty()) witness = a.id + "+" + b.id;
            }
        }
    check_count(rep, "certified summands with an uncertified sum", 0, closure_mism, witness);
}

void suite_p28(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    u64 bad = 0;
    std::string witness;
    for (const auto& c : cat.classes) {
        if (!classify_at_scale(c.rep, cat).tibs) continue;
        if (!sier_certified(c.rep, cat)) {
            ++bad;
            if (witness.empty()) witness = c.id;
        }
    }
    check_count(rep, "t.i.b.s. classes failing si.e.r. certification", 0, bad, witness);
}

void suite_p210(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    u64 bad = 0, applicable = 0;
    std::string witness;
    for (const auto& m : cat.classes) {
        bool hosted = false;
        for (const auto& c : cat.classes) {
            if (!c.injective || !c.projective) continue;
            if (embeds_in(m.rep, c.rep)) {
                hosted = true;
                break;
            }
        }
        if (!hosted) continue;
        ++applicable;
        if (!sier_certified(m.rep, cat)) {
            ++bad;
            if (witness.empty()) witness = m.id;
        }
    }
    note(rep, "classes embedded in an injective-projective class", std::to_string(applicable));
    check_count(rep, "embedded classes failing si.e.r. certification", 0, bad, witness);
}

void suite_p211(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    u64 bad = 0, applicable = 0;
    std::string witness;
    for (const auto& m : cat.classes) {
        bool hosted = false;
        for (const auto& c : cat.classes) {
            if (!c.injective || !c.projective) continue;
            if (image_of(c.rep, m.rep)) {
                hosted = true;
                break;
            }
        }
        if (!hosted) continue;
        ++applicable;
        if (!sper_certified(m.rep, cat)) {
            ++bad;
            if (witness.empty()) witness = m.id;
        }
    }
    note(rep, "classes covered by an injective-projective class", std::to_string(applicable));
    check_count(rep, "covered classes failing sp.e.r. certification", 0, bad, witness);
}

void suite_c213(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    u64 bad_in = 0, bad_pr = 0;
    std::string witness;
    for (const auto& c : cat.classes) {
        if (!sier_certified(c.rep, cat)) {
            ++bad_in;
            if (witness.empty()) witness = "sier " + c.id;
        }
        if (!sper_certified(c.rep, cat)) {
            ++bad_pr;
            if (witness.empty()) witness = "sper " + c.id;
        }
    }
    check_count(rep, "classes failing si.e.r. certification", 0, bad_in, witness);
    check_count(rep, "classes failing sp.e.r. certification", 0, bad_pr, witness);
}

void suite_c214(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    u64 mism = 0;
    std::string witness;
    for (const auto& m : cat.classes) {
        if (!sier_certified(m.rep, cat)) continue;
        bool exists = false;
        for (const auto& k : submodules(m.rep)) {
            FiniteModule kmod = submodule_as_module(k);
            FiniteModule q = quotient(m.rep, k).first;
            if (is_subinjective(m.rep, kmod) && is_subinjective(m.rep, q)) {
                exists = true;
                break;
            }
        }
        if (exists != m.injective) {
            ++mism;
            if (witness.empty()) witness = m.id;
        }
        // forward direction at K = 0: injective modules satisfy the pair
        if (m.injective) {
            FiniteModule z = submodule_as_module(zero_submodule(m.rep));
            if (!(is_subinjective(m.rep, z) && is_subinjective(m.rep, m.rep))) {
                ++mism;
                if (witness.empty()) witness = m.id + " (K=0)";
            }
        }
    }
    check_count(rep, "mismatches of [some split pair exists] vs injectivity", 0, mism, witness);
}

void suite_p215(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    MiddleClassReport mc = middle_class_report(ring, cat);
    note(rep, "no subinjective middle class at scale", b2s(mc.no_subinjective_middle_class));
    if (!mc.no_subinjective_middle_class) return;
    u64 bad = 0;
    for (const auto& c : cat.classes)
        if (!sier_certified(c.rep, cat)) ++bad;
    check_count(rep, "classes failing si.e.r. under no-middle-class", 0, bad);
}

void suite_p216(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    bool fully_sier = true;
    for (const auto& c : cat.classes)
        if (!sier_certified(c.rep, cat)) {
            fully_sier = false;
            break;
        }
    note(rep, "ring fully si.e.r. at scale", b2s(fully_sier));
    const auto inj = injective_class_ids(cat);
    auto run_equiv = [&](const std::string& tag) {
        u64 mism = 0;
        std::string witness;
        for (const auto& b : cat.classes) {
            const bool indigent =
                domain_at_scale(b.rep, DomainKind::InInv, cat).members == inj;
            bool all_pairs = true;
            for (const auto& a : submodules(b.rep)) {
                FiniteModule amod = submodule_as_module(a);
                FiniteModule q = quotient(b.rep, a).first;
                std::vector<std::string> meet;
                for (const auto& n : cat.classes)
                    if (is_subinjective(n.rep, amod) && is_subinjective(n.rep, q))
                        meet.push_back(n.id);
                if (meet != inj) {
                    all_pairs = false;
                    break;
                }
            }
            if (indigent != all_pairs) {
                ++mism;
                if (witness.empty()) witness = b.id;
            }
        }
        check_count(rep, tag, 0, mism, witness);
    };
    if (fully_sier)
        run_equiv("indigence equivalence under the stated fully-si.e.r. hypothesis");
    else
        note(rep, "indigence equivalence under the stated hypothesis",
             "hypothesis not met at this bound");
    if (is_qf(ring)) run_equiv("indigence equivalence under the QF hypothesis");
}

void suite_p217(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    MiddleClassReport mc = middle_class_report(ring, cat);
    note(rep, "no subprojective middle class at scale", b2s(mc.no_subprojective_middle_class));
    if (!mc.no_subprojective_middle_class) return;
    u64 bad = 0;
    for (const auto& c : cat.classes)
        if (!sper_certified(c.rep, cat)) ++bad;
    check_count(rep, "classes failing sp.e.r. under no-middle-class", 0, bad);
}

void suite_p218(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    u64 mism = 0;
    std::string witness;
    for (const auto& m : cat.classes) {
        if (!sier_certified(m.rep, cat)) continue;
        bool all_simples = true, all_fl = true;
        for (const auto& n : cat.classes) {
            if (n.simple_flag && !is_subinjective(m.rep, n.rep)) all_simples = false;
            if (!is_subinjective(m.rep, n.rep)) all_fl = false;
        }
        if (all_simples != all_fl) {
            ++mism;
            if (witness.empty()) witness = m.id;
        }
    }
    check_count(rep, "si.e.r. classes where [all simples] differs from [all catalog]", 0, mism,
                witness);
}

void suite_p219(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    u64 mism = 0;
    std::string witness;
    for (const auto& m : cat.classes) {
        if (!sier_certified(m.rep, cat)) continue;
        auto cr = classify_at_scale(m.rep, cat);
        if (cr.c_injective != cr.fg_injective) {
            ++mism;
            if (witness.empty()) witness = m.id;
        }
    }
    check_count(rep, "si.e.r. classes where C-injective differs from FG-injective", 0, mism,
                witness);
}

void suite_p226(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    // (1) a semisimple class is cyclic iff it is an image of R/J
    FiniteModule top = simple_top(ring);
    u64 mism = 0;
    std::string witness;
    for (const auto& c : cat.classes) {
        if (!c.semisimple) continue;
        const bool img = image_of(top, c.rep);
        if (img != c.cyclic) {
            ++mism;
            if (witness.empty()) witness = c.id;
        }
    }
    check_count(rep, "semisimple classes where cyclic differs from image-of-R/J", 0, mism,
                witness);
    // (2) the direct sum of the distinct simples is cyclic
    check_bool(rep, "sum of distinct simples is cyclic", true,
               is_cyclic(sum_of_distinct_simples(ring)));
    // (3) both readings of the si.e.r. hypothesis
    auto smallest = [&]() {
        const CatalogClass* topc = cat.class_of(top);
        if (!topc) return std::string("R/J missing from catalog");
        u64 bad = 0;
        for (const auto& m : cat.classes)
            for (const auto& x : cat.classes)
                if (is_subinjective(x.rep, topc->rep) && !is_subinjective(x.rep, m.rep)) ++bad;
        return std::string(bad == 0 ? "smallest" : "not smallest (" + std::to_string(bad) + ")");
    };
    const bool reg_sier = sier_certified(regular_module(ring), cat);
    note(rep, "reading 1: R_R si.e.r. at scale", b2s(reg_sier));
    if (reg_sier)
        check_bool(rep, "reading 1: In-1(R/J) smallest over the catalog", true,
                   smallest() == "smallest");
    bool fully = true;
    for (const auto& c : cat.classes)
        if (!sier_certified(c.rep, cat)) {
            fully = false;
            break;
        }
    note(rep, "reading 2: ring fully si.e.r. at scale", b2s(fully));
    if (fully)
        check_bool(rep, "reading 2: In-1(R/J) smallest over the catalog", true,
                   smallest() == "smallest");
}

void suite_c227(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    FiniteModule s = sum_of_distinct_simples(ring);
    check_bool(rep, "In-1(sum of simples) = injective classes", true,
               ininv_members(s, cat) == injective_class_ids(cat));
    // smallest element of the catalog-restricted profile for each family
    for (const char* fam : {"S", "C", "FL", "FG"}) {
        auto family = family_of(cat, fam);
        const CatalogClass* best = nullptr;
        for (const auto* m : family) {
            bool minimal = true;
            auto dm = ininv_members(m->rep, cat);
            for (const auto* other : family) {
                auto d2 = ininv_members(other->rep, cat);
                if (!std::includes(d2.begin(), d2.end(), dm.begin(), dm.end())) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                best = m;
                break;
            }
        }
        note(rep, std::string("smallest element of the ") + fam + "-profile",
             best ? best->id : "none");
    }
}

void suite_c228(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    const auto inj = injective_class_ids(cat);
    const auto proj = projective_class_ids(cat);
    check_bool(rep, "injective classes = projective classes", true, inj == proj);
    for (const char* fam : {"S", "C", "FL", "FG"}) {
        auto members = intersect_ininv(family_of(cat, fam), cat);
        check_bool(rep, std::string("In-intersection over ") + fam + " = injective classes", true,
                   members == inj);
    }
}

void suite_c229(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    const auto proj = projective_class_ids(cat);
    for (const char* fam : {"S", "C", "FL", "FG"}) {
        auto members = intersect_prinv(family_of(cat, fam), cat);
        check_bool(rep, std::string("Pr-intersection over ") + fam + " = projective classes", true,
                   members == proj);
    }
}

void suite_c230(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    const auto inj = injective_class_ids(cat);
    const auto proj = projective_class_ids(cat);
    check_bool(rep, "injective classes = projective classes", true, inj == proj);
    bool all_equal = true;
    std::string witness;
    for (const char* fam : {"S", "C", "FL", "FG"}) {
        if (intersect_ininv(family_of(cat, fam), cat) != inj) {
            all_equal = false;
            witness = std::string("In/") + fam;
        }
        if (intersect_prinv(family_of(cat, fam), cat) != proj) {
            all_equal = false;
            witness = std::string("Pr/") + fam;
        }
    }
    check_bool(rep, "all eight domain intersections coincide", true, all_equal, witness);
}

void suite_p231(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    u64 mism = 0;
    std::string witness;
    for (const auto& m : cat.classes) {
        auto cr = classify_at_scale(m.rep, cat);
        if (sier_certified(m.rep, cat) && cr.fg_injective != cr.c_injective) {
            ++mism;
            if (witness.empty()) witness = "inj " + m.id;
        }
        if (sper_certified(m.rep, cat) && cr.fg_projective != cr.c_projective) {
            ++mism;
            if (witness.empty()) witness = "proj " + m.id;
        }
    }
    check_count(rep, "FG/C mismatches on certified classes", 0, mism, witness);
}

void suite_c233(const RingPtr&, const Catalog& cat, SuiteReport& rep) {
    u64 mism = 0;
    std::string witness;
    for (const auto& m : cat.classes) {
        auto cr = classify_at_scale(m.rep, cat);
        const bool all_same = cr.fg_injective == m.injective && cr.c_injective == m.injective &&
                              cr.fg_projective == m.injective && cr.c_projective == m.injective;
        if (!all_same) {
            ++mism;
            if (witness.empty()) witness = m.id;
        }
    }
    check_count(rep, "classes where FG-/C-injective/projective differ from injective", 0, mism,
                witness);
}

void suite_p31(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    const bool q = satisfies_q(ring, cat);
    FiniteModule r = regular_module(ring);
    bool r_in_all = true;
    for (const auto& c : cat.classes)
        if (!is_subinjective(r, c.rep)) {
            r_in_all = false;
            break;
        }
    bool proj_in_all = true;
    for (const auto& p : cat.classes) {
        if (!p.projective) continue;
        for (const auto& c : cat.classes)
            if (!is_subinjective(p.rep, c.rep)) {
                proj_in_all = false;
                break;
            }
        if (!proj_in_all) break;
    }
    check_bool(rep, "(Q) iff R lies in every In-domain of the catalog", true, q == r_in_all);
    check_bool(rep, "(Q) iff every projective lies in every In-domain", true, q == proj_in_all);
}

void suite_l32(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    check_bool(rep, "(Q) sweep equals self-injectivity", true,
               satisfies_q(ring, cat) == is_qf(ring));
}

void suite_l34(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    const bool v = is_v_ring(ring);
    note(rep, "V-ring", b2s(v));
    if (v) check_bool(rep, "V-ring satisfies (Q)", true, satisfies_q(ring, cat));
}

void suite_l35(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    const bool q = satisfies_q(ring, cat);
    check_bool(rep, "(Q) iff dual Kasch over a hereditary ring", true,
               q == is_dual_kasch(ring));
    check_bool(rep, "(Q) iff V-ring over a hereditary ring", true, q == is_v_ring(ring));
}

void suite_p37(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    HullResult h = injective_hull(regular_module(ring));
    const bool proj_hull = is_projective(h.hull);
    note(rep, "hull of R is projective", b2s(proj_hull));
    if (proj_hull)
        check_bool(rep, "dual Kasch iff (Q) when the hull of R is projective", true,
                   is_dual_kasch(ring) == satisfies_q(ring, cat));
}

void suite_p38(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    auto f2 = builtin_ring("F2");
    Catalog catf2 = build_catalog(f2, cat.max_size, cat.max_gens);
    check_bool(rep, "(Q) matches the base ring across the matrix equivalence", true,
               satisfies_q(ring, cat) == satisfies_q(f2, catf2));
}

void suite_e31(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    check_bool(rep, "the four-dimensional symmetric local algebra is QF", true, is_qf(ring));
    check_bool(rep, "it satisfies (Q)", true, satisfies_q(ring, cat));
}

void suite_e32(const RingPtr& ring, const Catalog& cat, SuiteReport& rep) {
    check_bool(rep, "the eight-element local quotient is not self-injective", false, is_qf(ring));
    check_bool(rep, "it does not satisfy (Q)", false, satisfies_q(ring, cat));
    check_bool(rep, "it is dual Kasch (strict containment witness)", true, is_dual_kasch(ring));
}

}  // namespace

unsigned SuiteReport::passed_count() const {
    unsigned n = 0;
    for (const auto& c : checks) n += c.pass;
    return n;
}

unsigned SuiteReport::failed_count() const {
    unsigned n = 0;
    for (const auto& c : checks) n += !c.pass;
    return n;
}

const std::vector<Suite>& suite_registry() {
    static const std::vector<Suite> reg = {
        {"L2.1", "extension closure of subinjectivity and subprojectivity domains", no_gate,
         suite_l21},
        {"E2.4", "eight-element local ring: dual Kasch, not QF, counterexample sequence",
         same_structure_gate("R8", "eight-element local trivial extension"), suite_e24},
        {"E2.5", "rationals over the integers", no_gate, suite_e25},
        {"E2.6", "injectives are si.e.r., projectives are sp.e.r., hereditary regular module",
         no_gate, suite_e26},
        {"P2.7", "si.e.r. and sp.e.r. are closed under finite direct sums", no_gate, suite_p27},
        {"P2.8", "test modules for injectivity are si.e.r.", no_gate, suite_p28},
        {"P2.10", "submodules of injective-projective modules are si.e.r.", no_gate, suite_p210},
        {"P2.11", "images of injective-projective modules are sp.e.r.", no_gate, suite_p211},
        {"C2.13", "over a QF ring every module is si.e.r. and sp.e.r.", qf_gate, suite_c213},
        {"C2.14", "split-pair membership characterizes injectivity of si.e.r. modules", no_gate,
         suite_c214},
        {"P2.15", "no subinjective middle class implies fully si.e.r.", no_gate, suite_p215},
        {"P2.16", "indigence via domain intersections of all sub/quotient pairs", no_gate,
         suite_p216},
        {"P2.17", "no subprojective middle class implies fully sp.e.r.", no_gate, suite_p217},
        {"P2.18", "for si.e.r. modules: all simples iff all finite-length targets", no_gate,
         suite_p218},
        {"P2.19", "for si.e.r. modules: all cyclic iff all finitely generated targets", no_gate,
         suite_p219},
        {"P2.26", "semilocal facts: cyclic semisimples, sums of simples, smallest domain",
         no_gate, suite_p226},
        {"C2.27", "the sum of the simples is indigent over a QF ring; profile minima", qf_gate,
         suite_c227},
        {"C2.28", "In-domain intersections over S, C, FL, FG collapse to the injectives", qf_gate,
         suite_c228},
        {"C2.29", "Pr-domain intersections over S, C, FL, FG collapse to the projectives",
         qf_gate, suite_c229},
        {"C2.30", "all eight domain intersections coincide over a QF ring", qf_gate, suite_c230},
        {"P2.31", "FG-injective iff C-injective for si.e.r. modules (and the dual)", no_gate,
         suite_p231},
        {"C2.33", "FG-/C-injectivity and -projectivity coincide with injectivity over QF",
         qf_gate, suite_c233},
        {"P3.1", "(Q) via In-domain membership of the regular module", no_gate, suite_p31},
        {"L3.2", "for a finite ring, (Q) holds exactly for the self-injective rings", no_gate,
         suite_l32},
        {"L3.4", "V-rings satisfy (Q)", no_gate, suite_l34},
        {"L3.5", "over hereditary rings: (Q), dual Kasch, and V-ring coincide", hereditary_gate,
         suite_l35},
        {"P3.7", "with projective hull of R: dual Kasch iff (Q)", no_gate, suite_p37},
        {"P3.8", "(Q) is invariant under the matrix-ring equivalence",
         same_structure_gate("M2F2", "2x2 matrix ring over the two-element field"), suite_p38},
        {"E3.1", "the four-dimensional symmetric algebra satisfies (Q)",
         same_structure_gate("K4", "four-dimensional symmetric local algebra"), suite_e31},
        {"E3.2", "its eight-element quotient fails (Q) but stays dual Kasch",
         same_structure_gate("R8", "eight-element local trivial extension"), suite_e32},
    };
    return reg;
}

bool suite_exists(const std::string& id) {
    for (const auto& s : suite_registry())
        if (s.id == id) return true;
    return false;
}

SuiteReport run_suite(const std::string& suite_id, const RingPtr& ring, const Catalog& cat) {
    const Suite* suite = nullptr;
    for (const auto& s : suite_registry())
        if (s.id == suite_id) suite = &s;
    if (!suite) fail(Errc::UnknownSelector, "unknown suite: " + suite_id);
    SuiteReport rep;
    rep.suite_id = suite->id;
    rep.title = suite->title;
    rep.ring = ring->name;
    rep.bound = cat.max_size;
    const std::string reason = suite->gate(ring);
    if (!reason.empty()) {
        rep.skipped = true;
        rep.skip_reason = reason;
        throw Error(Errc::InapplicableSuite, suite_id + " on " + ring->name + ": " + reason);
    }
    const auto t0 = std::chrono::steady_clock::now();
    suite->run(ring, cat, rep);
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<SuiteReport> run_all_suites(const RingPtr& ring, const Catalog& cat, unsigned jobs) {
    const auto& reg = suite_registry();
    std::vector<SuiteReport> reports(reg.size());
    auto work = [&](std::size_t i) {
        const Suite& s = reg[i];
        SuiteReport rep;
        rep.suite_id = s.id;
        rep.title = s.title;
        rep.ring = ring->name;
        rep.bound = cat.max_size;
        const std::string reason = s.gate(ring);
        if (!reason.empty()) {
            rep.skipped = true;
            rep.skip_reason = reason;
        } else {
            const auto t0 = std::chrono::steady_clock::now();
            s.run(ring, cat, rep);
            rep.wall_time_s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
        reports[i] = std::move(rep);
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < reg.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= reg.size()) return;
                    work(i);
                }
            });
        for (auto& th : pool) th.join();
    }
    return reports;
}

std::string suite_report_json(const SuiteReport& rep) {
    nlohmann::ordered_json j;
    j["suite"] = rep.suite_id;
    j["title"] = rep.title;
    j["ring"] = rep.ring;
    j["bound"] = rep.bound;
    j["seed"] = rep.seed;
    j["skipped"] = rep.skipped;
    if (rep.skipped) j["skip_reason"] = rep.skip_reason;
    j["passed"] = rep.passed_count();
    j["failed"] = rep.failed_count();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) {
        nlohmann::ordered_json jc;
        jc["claim"] = c.claim;
        jc["expected"] = c.expected;
        jc["observed"] = c.observed;
        jc["pass"] = c.pass;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        arr.push_back(jc);
    }
    j["checks"] = arr;
    j["wall_time_s"] = rep.wall_time_s;
    return j.dump(1);
}

std::string suite_report_table(const SuiteReport& rep) {
    std::ostringstream os;
    os << "suite " << rep.suite_id << " [" << rep.ring << ", bound " << rep.bound << "] "
       << rep.title << "\n";
    if (rep.skipped) {
        os << "  SKIP " << rep.skip_reason << "\n";
        return os.str();
    }
    for (const auto& c : rep.checks) {
        os << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.claim << ": expected " << c.expected
           << ", observed " << c.observed;
        if (!c.witness.empty()) os << "  [" << c.witness << "]";
        os << "\n";
    }
    os << "  " << rep.passed_count() << " passed, " << rep.failed_count() << " failed ("
       << rep.wall_time_s << " s)\n";
    return os.str();
}

}  // namespace finmod
