#pragma once

// Injectivity and projectivity machinery.
//
// Injectivity is the Baer test (exact over a finite ring): every hom from
// every right ideal into M extends to the ring.  Projectivity asks whether
// the free cover R^g -> M splits.  The injective cogenerator is the
// character dual of the left regular module: all group homs (R,+) -> Z/mZ
// with the right action (f*r)(x) = f(rx); every simple embeds into it and
// indecomposable injectives are its summands, which is what makes the
// injective-trace test below exact.

#include "finmod/hom.hpp"
#include "finmod/module.hpp"

namespace finmod {

bool is_injective(const FiniteModule& m);
bool is_projective(const FiniteModule& m);

// pi : R^g -> N over the stored minimal generators of N
ModuleHom free_cover(const FiniteModule& n);

FiniteModule injective_cogenerator(const RingPtr& ring);

// Character dual Hom_Z(M, Z/mZ) as a right module over the opposite ring.
FiniteModule character_dual(const FiniteModule& m);

struct HullResult {
    FiniteModule hull;
    ModuleHom embedding;  // injective, essential image, hull injective
};

// Injective hull by embedding into a power of the cogenerator (one
// character per step until the assembled map is injective) and climbing to
// a maximal complement of the image.  seed 0 uses the canonical iteration
// order; other seeds permute the choices, which must not change the hull up
// to isomorphism.
HullResult injective_hull(const FiniteModule& m, u64 seed = 0);

// trace of the cogenerator: M is a homomorphic image of an injective module
// iff the images of all homs E0 -> M sum to M
bool is_image_of_injective(const FiniteModule& m);

// Certified comparison of two injective hulls of the same module: extends
// the identity between the two embedded copies and checks bijectivity.
bool hulls_isomorphic(const HullResult& a, const HullResult& b);

}  // namespace finmod
