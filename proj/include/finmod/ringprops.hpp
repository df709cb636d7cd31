#pragma once

// Ring-level predicates.  Everything here is exact for finite rings except
// satisfies_q, which sweeps a catalog (finite length = everything at desk
// scale) and is reported with its bound.

#include "finmod/catalog.hpp"

namespace finmod {

bool is_qf(const RingPtr& ring);               // regular module self-injective
bool is_kasch(const RingPtr& ring);            // every simple embeds in R
bool is_dual_kasch(const RingPtr& ring);       // every simple an image of an injective
bool is_v_ring(const RingPtr& ring);           // every simple injective
bool is_right_hereditary(const RingPtr& ring); // every right ideal projective
bool is_semisimple_ring(const RingPtr& ring);
bool is_local_ring(const RingPtr& ring);       // unique maximal right ideal
bool is_chain_ring(const RingPtr& ring);       // right ideals totally ordered

// Every catalog module is an image of an injective.  Cross-checked against
// is_qf (they must agree over a finite ring); a mismatch signals an
// implementation bug, not a mathematical fact.
bool satisfies_q(const RingPtr& ring, const Catalog& cat);

struct RingProfile {
    bool qf = false, kasch = false, dual_kasch = false, v_ring = false;
    bool right_hereditary = false, semisimple = false, local = false, chain = false;
    bool q = false;
    u64 q_bound = 0;
    // "exact" or "at-scale(<bound>)" per flag
    std::vector<std::pair<std::string, std::string>> provenance;
};

RingProfile ring_profile(const RingPtr& ring, const Catalog& cat);
std::string ring_profile_json(const RingPtr& ring, const RingProfile& p);

}  // namespace finmod
