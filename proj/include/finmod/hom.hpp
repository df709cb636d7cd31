#pragma once

// Hom groups between finite modules.  A hom is determined by the images of
// the source's stored minimal generators; the assignment is a well-defined
// R-linear map iff it kills the presentation kernel of the source.  The
// whole of Hom(A, B) is the solution group of that linear condition, solved
// exactly over Z/mZ: T is the solution span in coordinate space (one block
// of coefficients over B's Howell basis per generator), T0 the subgroup of
// coordinates decoding to the zero map, and Hom(A, B) = T/T0.

#include <functional>
#include <memory>

#include "finmod/module.hpp"

namespace finmod {

ModuleHom make_hom(FiniteModule source, FiniteModule target, std::vector<Vec> images);
bool hom_is_valid(const ModuleHom& h);
ModuleHom identity_hom(const FiniteModule& m);
ModuleHom zero_hom(const FiniteModule& src, const FiniteModule& tgt);
ModuleHom inclusion_hom(const SubmoduleHandle& h);  // W/U -> M

Vec hom_apply(const ModuleHom& h, const Vec& x);
ModuleHom hom_compose(const ModuleHom& g, const ModuleHom& f);  // g after f
Mat hom_image(const ModuleHom& h);   // full span (includes U_target)
Mat hom_kernel(const ModuleHom& h);  // full span (includes U_source)
bool hom_injective(const ModuleHom& h);
bool hom_surjective(const ModuleHom& h);
bool hom_is_zero(const ModuleHom& h);
// flattened canonical value tuple, one target block per source generator
Vec hom_value_tuple(const ModuleHom& h);

struct HomSet {
    FiniteModule source, target;
    Mat T, T0;
    u64 size = 1;
    std::vector<u64> orders;  // invariant factors of the hom group
    std::vector<ModuleHom> basis;
};
using HomSetPtr = std::shared_ptr<const HomSet>;

HomSetPtr hom_set(const FiniteModule& a, const FiniteModule& b);
ModuleHom decode_hom(const HomSet& hs, const Vec& t);
bool hom_member(const HomSet& hs, const ModuleHom& h);
// Enumerate every hom exactly once (zero map first, deterministic order);
// stop when visit returns false.  Returns false if stopped early.
bool enumerate_homs(const HomSet& hs, u64 guard, const std::function<bool(const ModuleHom&)>& visit);
std::vector<ModuleHom> all_homs(const FiniteModule& a, const FiniteModule& b, u64 guard = 1u << 22);

// Every f: X -> target extends along e: X -> Y (i.e. the restriction map
// Hom(Y, target) -> Hom(X, target) is onto).
bool restriction_surjective(const ModuleHom& e, const FiniteModule& target);
// A hom X -> target with no extension along e, if one exists.
std::optional<ModuleHom> restriction_witness(const ModuleHom& e, const FiniteModule& target);
// h: Y -> target with h∘e == f, if any.
std::optional<ModuleHom> extend_along(const ModuleHom& e, const ModuleHom& f);
// Some h: M -> P satisfies pi∘h == f.
bool factors_through(const ModuleHom& pi, const ModuleHom& f);
// Every f: M -> N factors through pi: P -> N.
bool all_factor_through(const ModuleHom& pi, const FiniteModule& m);
// A hom M -> N that does not factor through pi, if one exists.
std::optional<ModuleHom> factor_witness(const ModuleHom& pi, const FiniteModule& m);

bool are_isomorphic(const FiniteModule& a, const FiniteModule& b);
// The first isomorphism in the canonical enumeration, if any.
std::optional<ModuleHom> find_isomorphism(const FiniteModule& a, const FiniteModule& b,
                                          u64 guard = 1u << 22);

// Process-wide representative of the isomorphism class of m: the first
// registered module isomorphic to m.  Expensive per-class data (hulls, hom
// sets, predicate memos) is keyed on these representatives.
FiniteModule iso_canonical_rep(const FiniteModule& m);

}  // namespace finmod
