#pragma once

// The central predicates.
//
// is_subinjective(B, A) decides B ∈ In⁻¹(A): every hom B -> A extends along
// the hull embedding B -> E(B) (equivalently along every extension of B).
// is_subprojective(M, N) decides N ∈ Pr⁻¹(M): every hom M -> N lifts through
// the free cover of N (equivalently through every epimorphism onto N).
//
// Verdicts are bounded certifications over a catalog, never theorems: a
// CertifiedUpToBound carries the bound it swept; a Counterexample carries a
// re-checkable witness and is exact.

#include "finmod/catalog.hpp"

namespace finmod {

bool is_subinjective(const FiniteModule& b, const FiniteModule& a);
bool is_subprojective(const FiniteModule& m, const FiniteModule& n);

enum class VerdictKind { CertifiedUpToBound, Counterexample };

struct SesWitness {
    FiniteModule b;
    SubmoduleHandle a;  // A <= B
    FiniteModule c;     // B/A
    ModuleHom failing;  // the non-extendable (resp. non-liftable) hom
};

struct Verdict {
    VerdictKind kind = VerdictKind::CertifiedUpToBound;
    u64 bound = 0;
    std::optional<SesWitness> witness;
    bool certified() const { return kind == VerdictKind::CertifiedUpToBound; }
};

// In(M) closed under extensions, swept over every catalog B and every
// submodule A <= B: is_subinjective(M,A) and is_subinjective(M,B/A) must
// imply is_subinjective(M,B).
Verdict sier_verdict(const FiniteModule& m, const Catalog& cat);
// Pr-domain membership dual: is_subprojective(A,M) and is_subprojective(B/A,M)
// must imply is_subprojective(B,M).
Verdict sper_verdict(const FiniteModule& m, const Catalog& cat);

bool verify_sier_witness(const FiniteModule& m, const SesWitness& w);
bool verify_sper_witness(const FiniteModule& m, const SesWitness& w);

// Memoized certified-or-not summaries (witness details dropped).
bool sier_certified(const FiniteModule& m, const Catalog& cat);
bool sper_certified(const FiniteModule& m, const Catalog& cat);

enum class DomainKind { InInv, PrInv, In, Pr };
const char* domain_kind_name(DomainKind k);

struct DomainSet {
    DomainKind kind = DomainKind::InInv;
    u64 bound = 0;
    std::vector<std::string> members;  // catalog class ids, sorted
};

// InInv(M) = In⁻¹(M) = {A : is_subinjective(A, M)};
// In(M)             = {N : is_subinjective(M, N)};
// PrInv(M) = Pr⁻¹(M) = {A : is_subprojective(M, A)};
// Pr(M)             = {N : is_subprojective(N, M)}.
DomainSet domain_at_scale(const FiniteModule& m, DomainKind kind, const Catalog& cat);

struct ClassifyRecord {
    u64 bound = 0;
    bool indigent = false;      // In⁻¹(M) ∩ cat == injective classes
    bool p_indigent = false;    // Pr⁻¹(M) ∩ cat == projective classes
    bool tibs = false;          // In(M) ∩ cat ⊆ injective classes
    bool fg_injective = false;  // is_subinjective(M, N) for every N in cat
    bool c_injective = false;   // ... for every cyclic N
    bool fg_projective = false;  // is_subprojective(N, M) for every N in cat
    bool c_projective = false;   // ... for every cyclic N
};
ClassifyRecord classify_at_scale(const FiniteModule& m, const Catalog& cat);

struct MiddleClassRow {
    std::string id;
    bool injective = false, indigent = false;
    bool projective = false, p_indigent = false;
};
struct MiddleClassReport {
    u64 bound = 0;
    std::vector<MiddleClassRow> rows;
    bool no_subinjective_middle_class = false;
    bool no_subprojective_middle_class = false;
};
MiddleClassReport middle_class_report(const RingPtr& ring, const Catalog& cat);

// sorted ids of the flagged classes, for set comparisons in reports
std::vector<std::string> injective_class_ids(const Catalog& cat);
std::vector<std::string> projective_class_ids(const Catalog& cat);

}  // namespace finmod
