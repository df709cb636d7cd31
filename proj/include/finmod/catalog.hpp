#pragma once

// Isomorphism-class catalog of modules up to a size bound: every quotient
// R^g/K with g <= max_gens and |R^g/K| <= max_size appears exactly once.
// Class ids are stable across runs: hex of the invariant fingerprint plus a
// tie-break index ordered by the representative's canonical serialization.

#include <optional>
#include <string>

#include "finmod/envelopes.hpp"
#include "finmod/hom.hpp"
#include "finmod/module.hpp"

namespace finmod {

struct CatalogClass {
    std::string id;
    FiniteModule rep;
    u64 size = 0;
    unsigned length = 0;
    bool injective = false;
    bool projective = false;
    bool simple_flag = false;
    bool cyclic = false;
    bool semisimple = false;
};

struct Catalog {
    RingPtr ring;
    u64 max_size = 64;
    unsigned max_gens = 2;
    std::vector<CatalogClass> classes;  // sorted by id

    const CatalogClass* class_by_id(const std::string& id) const;
    // class containing a module isomorphic to m, or nullptr
    const CatalogClass* class_of(const FiniteModule& m) const;
};

Catalog build_catalog(RingPtr ring, u64 max_size = 64, unsigned max_gens = 2);

struct SES {
    SubmoduleHandle sub;   // A <= B
    FiniteModule quot;     // C = B/A
    ModuleHom projection;  // B -> C
};
// One triple per submodule of B; count equals the lattice size.
std::vector<SES> short_exact_sequences(const FiniteModule& b, u64 max_elems = 4096);

// Memo key for a pairwise predicate over iso-class representatives; the
// catalog cache persists these rows.
std::string pair_memo_key(const char* op, const FiniteModule& a, const FiniteModule& b);

void cache_store(const std::string& path, const Catalog& cat);
// Throws VersionMismatch when the file does not match (format, ring, bounds),
// IoFailure when unreadable.  Also reseeds persisted predicate memo rows.
Catalog cache_load(const std::string& path, const RingPtr& ring, u64 max_size, unsigned max_gens);
// Convenience: load when a valid cache exists, else build and store.
Catalog load_or_build_catalog(RingPtr ring, u64 max_size, unsigned max_gens,
                              const std::string& cache_dir);

}  // namespace finmod
