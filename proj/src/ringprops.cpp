#include "finmod/ringprops.hpp"

#include <json.hpp>

#include "finmod/errors.hpp"
#include "finmod/memo.hpp"

namespace finmod {

bool is_qf(const RingPtr& ring) {
    return memo().memo_bool("qf|" + ring->hash_hex(),
                            [&]() { return is_injective(regular_module(ring)); });
}

bool is_kasch(const RingPtr& ring) {
    return memo().memo_bool("kasch|" + ring->hash_hex(), [&]() {
        FiniteModule r = regular_module(ring);
        for (const auto& s : simple_modules(ring))
            if (hom_set(s, r)->size <= 1) return false;
        return true;
    });
}

bool is_dual_kasch(const RingPtr& ring) {
    return memo().memo_bool("dualkasch|" + ring->hash_hex(), [&]() {
        for (const auto& s : simple_modules(ring))
            if (!is_image_of_injective(s)) return false;
        return true;
    });
}

bool is_v_ring(const RingPtr& ring) {
    return memo().memo_bool("vring|" + ring->hash_hex(), [&]() {
        for (const auto& s : simple_modules(ring))
            if (!is_injective(s)) return false;
        return true;
    });
}

bool is_right_hereditary(const RingPtr& ring) {
    return memo().memo_bool("hered|" + ring->hash_hex(), [&]() {
        FiniteModule r = regular_module(ring);
        for (const auto& ideal : submodules(r))
            if (!is_projective(submodule_as_module(ideal))) return false;
        return true;
    });
}

bool is_semisimple_ring(const RingPtr& ring) {
    return jacobson_radical_basis(ring).rows.empty();
}

bool is_local_ring(const RingPtr& ring) {
    FiniteModule r = regular_module(ring);
    auto subs = submodules(r);
    unsigned maximal = 0;
    for (const auto& a : subs) {
        if (span_equal(a.span, r.V)) continue;
        bool is_max = true;
        for (const auto& b : subs) {
            if (span_equal(b.span, r.V) || span_equal(b.span, a.span)) continue;
            if (span_size(b.span) > span_size(a.span) && span_contains(b.span, a.span)) {
                is_max = false;
                break;
            }
        }
        if (is_max) ++maximal;
    }
    return maximal == 1;
}

bool is_chain_ring(const RingPtr& ring) {
    FiniteModule r = regular_module(ring);
    auto subs = submodules(r);
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = i + 1; j < subs.size(); ++j) {
            if (!span_contains(subs[j].span, subs[i].span) &&
                !span_contains(subs[i].span, subs[j].span))
                return false;
        }
    return true;
}

bool satisfies_q(const RingPtr& ring, const Catalog& cat) {
    if (!ring->same_as(*cat.ring)) fail(Errc::RingMismatch, "catalog belongs to another ring");
    bool q = true;
    for (const auto& c : cat.classes)
        if (!is_image_of_injective(c.rep)) {
            q = false;
            break;
        }
    // for a finite (hence artinian) ring the direct sweep must agree with
    // self-injectivity of the regular module
    if (cat.max_size >= regular_module(ring).size() && q != is_qf(ring))
        fail(Errc::InternalInconsistency,
             "finite-length sweep disagrees with self-injectivity on " + ring->name);
    return q;
}

RingProfile ring_profile(const RingPtr& ring, const Catalog& cat) {
    RingProfile p;
    p.qf = is_qf(ring);
    p.kasch = is_kasch(ring);
    p.dual_kasch = is_dual_kasch(ring);
    p.v_ring = is_v_ring(ring);
    p.right_hereditary = is_right_hereditary(ring);
    p.semisimple = is_semisimple_ring(ring);
    p.local = is_local_ring(ring);
    p.chain = is_chain_ring(ring);
    p.q = satisfies_q(ring, cat);
    p.q_bound = cat.max_size;
    const std::string at_scale = "at-scale(" + std::to_string(cat.max_size) + ")";
    p.provenance = {
        {"is_qf", "exact"},          {"is_kasch", "exact"},   {"is_dual_kasch", "exact"},
        {"is_v_ring", "exact"},      {"is_right_hereditary", "exact"},
        {"is_semisimple", "exact"},  {"is_local", "exact"},   {"is_chain", "exact"},
        {"satisfies_q", at_scale},
    };
    // implication lattice: qf => q => dual Kasch, v-ring => q
    if (p.qf && !p.q) fail(Errc::InternalInconsistency, "qf without (Q)");
    if (p.q && !p.dual_kasch) fail(Errc::InternalInconsistency, "(Q) without dual Kasch");
    if (p.v_ring && !p.q) fail(Errc::InternalInconsistency, "V-ring without (Q)");
    return p;
}

std::string ring_profile_json(const RingPtr& ring, const RingProfile& p) {
    nlohmann::ordered_json j;
    j["ring"] = ring->name;
    j["ring_hash"] = ring->hash_hex();
    j["flags"] = {
        {"is_qf", p.qf},
        {"is_kasch", p.kasch},
        {"is_dual_kasch", p.dual_kasch},
        {"satisfies_q", p.q},
        {"is_v_ring", p.v_ring},
        {"is_right_hereditary", p.right_hereditary},
        {"is_semisimple", p.semisimple},
        {"is_local", p.local},
        {"is_chain", p.chain},
    };
    nlohmann::ordered_json prov;
    for (const auto& [k, v] : p.provenance) prov[k] = v;
    j["provenance"] = prov;
    return j.dump(1);
}

}  // namespace finmod
