#pragma once

// Finite right modules, represented exactly as subquotients M = V/U of a
// free module R^n.  V and U are R-submodules of the ambient (Z/mZ)^{n*d},
// stored as Howell bases, so equal submodules have bit-identical
// representations and every element has a unique canonical coset
// representative (an ambient vector reduced mod U).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finmod/ring.hpp"
#include "finmod/zmod.hpp"

namespace finmod {

struct ModuleDerived;

struct FiniteModule {
    RingPtr ring;
    unsigned n = 0;  // ambient rank over R; ambient Z-dimension is n * rank
    Mat V, U;        // canonical Howell bases, U <= V

    std::size_t zdim() const { return (std::size_t)n * ring->rank; }
    u64 size() const { return span_size(V) / span_size(U); }
    const std::string& key() const { return *key_; }

    std::shared_ptr<const std::string> key_;
};

struct SubmoduleHandle {
    FiniteModule parent;
    Mat span;  // Howell basis of the full preimage W, U_parent <= W <= V_parent
    u64 size() const { return span_size(span) / span_size(parent.U); }
};

struct ModuleHom {
    FiniteModule source, target;
    // canonical representatives in the target, one per stored minimal
    // generator of the source
    std::vector<Vec> images;
};

bool same_ring(const FiniteModule& a, const FiniteModule& b);
void require_same_ring(const FiniteModule& a, const FiniteModule& b);
bool module_eq(const FiniteModule& a, const FiniteModule& b);

// Construction.  make_module closes the generating rows under the ring
// action; module_from_canonical trusts its inputs to be closed Howell bases.
FiniteModule make_module(RingPtr ring, unsigned n, const std::vector<Vec>& gens_v,
                         const std::vector<Vec>& gens_u);
FiniteModule module_from_canonical(RingPtr ring, unsigned n, Mat v, Mat u);
FiniteModule zero_module(RingPtr ring);
FiniteModule free_module(RingPtr ring, unsigned g);
FiniteModule regular_module(RingPtr ring);

// Right action on ambient vectors (not reduced).
Vec act_basis(const FiniteModule& m, const Vec& x, unsigned basis_idx);
Vec act_elem_ambient(const RingPtr& ring, unsigned n, const Vec& x, const Vec& r);
// Canonical action on module elements: x*r reduced mod U.
Vec act(const FiniteModule& m, const Vec& x, const Vec& r);
// Howell span of {x*r : r in R} + U (the cyclic submodule generated by x).
Mat cyclic_span(const FiniteModule& m, const Vec& x);

// Canonical element enumeration, zero first, deterministic order.
const std::vector<Vec>& elements(const FiniteModule& m);
void for_each_element(const FiniteModule& m, const std::function<bool(const Vec&)>& emit);

// Minimal generators (Nakayama lift of a generating set of M/rad M chosen
// greedily by maximal cyclic span; deterministic).
const std::vector<Vec>& min_generators(const FiniteModule& m);
// Howell kernel of R^g -> M over the minimal generators; rows are ring
// coefficient tuples in (Z/mZ)^{g*d}.
const Mat& presentation_kernel(const FiniteModule& m);
// ring coefficient tuple t with sum gens[i]*t_i == x (exists for x in V)
Vec express(const FiniteModule& m, const Vec& x);

SubmoduleHandle submodule_from_gens(const FiniteModule& m, const std::vector<Vec>& gens);
SubmoduleHandle zero_submodule(const FiniteModule& m);
SubmoduleHandle full_submodule(const FiniteModule& m);
FiniteModule submodule_as_module(const SubmoduleHandle& h);
bool handle_eq(const SubmoduleHandle& a, const SubmoduleHandle& b);

// Full submodule lattice, deterministically ordered (by size then basis).
std::vector<SubmoduleHandle> submodules(const FiniteModule& m, u64 max_elems = 4096);

std::pair<FiniteModule, ModuleHom> quotient(const FiniteModule& m, const SubmoduleHandle& u);
FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b);
FiniteModule direct_sum_power(const FiniteModule& a, unsigned t);
ModuleHom direct_sum_injection(const FiniteModule& a, const FiniteModule& b, int which);
ModuleHom direct_sum_projection(const FiniteModule& a, const FiniteModule& b, int which);

SubmoduleHandle socle(const FiniteModule& m);
SubmoduleHandle radical(const FiniteModule& m);
unsigned comp_length(const FiniteModule& m);
bool is_cyclic(const FiniteModule& m);
bool is_simple(const FiniteModule& m);
bool is_semisimple(const FiniteModule& m);
// U essential in M: every nonzero element's cyclic span meets U.  For finite
// modules this is equivalent to soc(M) <= U, which is how it is computed.
bool is_essential(const SubmoduleHandle& u, const FiniteModule& m);

struct StructuralInvariants {
    u64 size = 0;
    unsigned length = 0;
    SubmoduleHandle socle;
    SubmoduleHandle radical;
    unsigned min_generator_count = 0;
    bool is_cyclic = false;
    bool is_simple = false;
    bool is_semisimple = false;
};
StructuralInvariants structural_invariants(const FiniteModule& m);

// Invariant factors of the underlying abelian group, largest first.
std::vector<u64> abelian_type_of_span(const Mat& v, const Mat& u, unsigned p, unsigned k);
const std::vector<u64>& abelian_type(const FiniteModule& m);
// Isomorphism-invariant fingerprint used to bucket candidates.
u64 inv_hash(const FiniteModule& m);

// Jacobson radical of the ring: intersection of the maximal submodules of
// the regular module.  Returned as a handle on regular_module(ring); the
// element basis (rows in (Z/mZ)^d) is cached per ring.
SubmoduleHandle jacobson_radical(const RingPtr& ring);
const Mat& jacobson_radical_basis(const RingPtr& ring);

// One representative per isomorphism class of simple right modules,
// deterministically ordered.  (Defined in hom.cpp: needs are_isomorphic.)
std::vector<FiniteModule> simple_modules(const RingPtr& ring);

std::string module_json(const FiniteModule& m);
FiniteModule module_from_json(const RingPtr& ring, const std::string& text);

}  // namespace finmod
