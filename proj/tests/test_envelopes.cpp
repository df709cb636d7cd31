#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finmod/envelopes.hpp"
#include "finmod/errors.hpp"
#include "oracles.hpp"

using namespace finmod;

namespace {

FiniteModule simple_of(const char* ring_name) {
    auto ring = builtin_ring(ring_name);
    FiniteModule r = regular_module(ring);
    return quotient(r, jacobson_radical(ring)).first;
}

// Baer straight from the definition: every hom from every submodule of
// every probe module extends to the probe.
bool brute_injective(const FiniteModule& m, const std::vector<FiniteModule>& probes) {
    for (const auto& c : probes)
        for (const auto& w : submodules(c)) {
            if (w.size() <= 1) continue;
            if (!restriction_surjective(inclusion_hom(w), m)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("injectivity over the fixtures") {
    // every module over a semisimple ring is injective
    auto f2 = builtin_ring("F2");
    CHECK(is_injective(regular_module(f2)));
    CHECK(is_injective(free_module(f2, 2)));
    CHECK(is_injective(zero_module(f2)));
    CHECK(is_injective(regular_module(builtin_ring("M2F2"))));
    // Z4 and Z8 are self-injective
    CHECK(is_injective(regular_module(builtin_ring("Z4"))));
    CHECK(is_injective(regular_module(builtin_ring("Z8"))));
    CHECK(is_injective(regular_module(builtin_ring("E2"))));
    CHECK(is_injective(regular_module(builtin_ring("K4"))));
    // the eight-element local ring is not self-injective
    CHECK_FALSE(is_injective(regular_module(builtin_ring("R8"))));
    CHECK_FALSE(is_injective(simple_of("R8")));
    CHECK_FALSE(is_injective(simple_of("Z4")));
}

TEST_CASE("projectivity") {
    auto r8 = builtin_ring("R8");
    CHECK(is_projective(regular_module(r8)));
    CHECK(is_projective(free_module(r8, 2)));
    CHECK(is_projective(zero_module(r8)));
    CHECK_FALSE(is_projective(simple_of("R8")));
    CHECK_FALSE(is_projective(simple_of("Z4")));
    // the indecomposable projectives of T2 are the summands e*T2
    auto t2 = builtin_ring("T2");
    FiniteModule rt2 = regular_module(t2);
    FiniteModule e11 = submodule_as_module(submodule_from_gens(rt2, {{1, 0, 0}}));
    FiniteModule e22 = submodule_as_module(submodule_from_gens(rt2, {{0, 0, 1}}));
    CHECK(is_projective(e11));
    CHECK(is_projective(e22));
    CHECK(e11.size() * e22.size() == 8);
}

TEST_CASE("injective cogenerator") {
    auto f2 = builtin_ring("F2");
    CHECK(are_isomorphic(injective_cogenerator(f2), regular_module(f2)));
    auto z4 = builtin_ring("Z4");
    CHECK(are_isomorphic(injective_cogenerator(z4), regular_module(z4)));
    auto r8 = builtin_ring("R8");
    FiniteModule e0 = injective_cogenerator(r8);
    CHECK(e0.size() == 8);
    CHECK(is_injective(e0));
    CHECK_FALSE(are_isomorphic(e0, regular_module(r8)));
    // cogenerates: the unique simple embeds
    CHECK(hom_set(simple_of("R8"), e0)->size > 1);
}

TEST_CASE("character dual sizes and double dual") {
    for (const char* name : {"Z4", "R8", "T2", "E2"}) {
        auto ring = builtin_ring(name);
        FiniteModule r = regular_module(ring);
        FiniteModule dual = character_dual(r);
        CHECK(dual.size() == r.size());
        CHECK(dual.ring->same_structure(*opposite_ring(ring)));
        FiniteModule ddual = character_dual(dual);
        CHECK(ddual.size() == r.size());
        CHECK(are_isomorphic(ddual, r));
    }
    // a non-free module
    auto z4 = builtin_ring("Z4");
    FiniteModule rr = regular_module(z4);
    FiniteModule z2 = quotient(rr, submodule_from_gens(rr, {{2}})).first;
    FiniteModule dd = character_dual(character_dual(z2));
    CHECK(are_isomorphic(dd, z2));
}

TEST_CASE("injective hulls") {
    auto z4 = builtin_ring("Z4");
    FiniteModule rz4 = regular_module(z4);
    FiniteModule z2 = quotient(rz4, submodule_from_gens(rz4, {{2}})).first;
    HullResult h = injective_hull(z2);
    CHECK(h.hull.size() == 4);
    CHECK(are_isomorphic(h.hull, rz4));
    CHECK(hom_injective(h.embedding));

    // hull of an injective module is itself
    HullResult hz4 = injective_hull(rz4);
    CHECK(are_isomorphic(hz4.hull, rz4));

    // hull of the R8 simple has size 8 (the cogenerator; local ring)
    auto r8 = builtin_ring("R8");
    HullResult hs = injective_hull(simple_of("R8"));
    CHECK(hs.hull.size() == 8);
    CHECK(are_isomorphic(hs.hull, injective_cogenerator(r8)));

    // hull of the regular module of R8 has size 64 (E0^2)
    HullResult hr = injective_hull(regular_module(r8));
    CHECK(hr.hull.size() == 64);

    // zero module
    HullResult h0 = injective_hull(zero_module(z4));
    CHECK(h0.hull.size() == 1);
}

TEST_CASE("hull uniqueness across seeds") {
    for (const char* name : {"Z4", "R8", "T2"}) {
        auto ring = builtin_ring(name);
        FiniteModule r = regular_module(ring);
        HullResult h0 = injective_hull(r, 0);
        for (u64 seed : {1u, 2u, 3u}) {
            HullResult h = injective_hull(r, seed);
            CHECK(h.hull.size() == h0.hull.size());
            CHECK(hulls_isomorphic(h0, h));
        }
    }
}

TEST_CASE("baer test agrees with the definitional extension test on small probes") {
    for (const char* name : {"Z4", "R8", "T2"}) {
        auto ring = builtin_ring(name);
        std::vector<FiniteModule> probes;
        probes.push_back(regular_module(ring));
        probes.push_back(free_module(ring, 2));
        std::vector<FiniteModule> subjects;
        subjects.push_back(regular_module(ring));
        subjects.push_back(simple_of(name));
        subjects.push_back(injective_cogenerator(ring));
        FiniteModule r = regular_module(ring);
        for (const auto& w : submodules(r)) subjects.push_back(submodule_as_module(w));
        for (const auto& m : subjects) CHECK(is_injective(m) == brute_injective(m, probes));
    }
}

TEST_CASE("injective trace test") {
    auto r8 = builtin_ring("R8");
    CHECK(is_image_of_injective(injective_cogenerator(r8)));
    CHECK(is_image_of_injective(simple_of("R8")));  // R8 is dual Kasch
    CHECK_FALSE(is_image_of_injective(regular_module(r8)));
    auto q8 = builtin_ring("Q8bar");
    CHECK_FALSE(is_image_of_injective(regular_module(q8)));
    // monotone under quotients
    FiniteModule e0 = injective_cogenerator(r8);
    for (const auto& w : submodules(e0)) {
        FiniteModule q = quotient(e0, w).first;
        CHECK(is_image_of_injective(q));
    }
    // over a QF ring everything is an image of an injective
    auto k4 = builtin_ring("K4");
    CHECK(is_image_of_injective(regular_module(k4)));
    CHECK(is_image_of_injective(simple_of("K4")));
}

TEST_CASE("essentiality of the hull image") {
    for (const char* name : {"Z4", "R8", "T2", "K4"}) {
        auto ring = builtin_ring(name);
        FiniteModule m = regular_module(ring);
        HullResult h = injective_hull(m);
        SubmoduleHandle img{h.hull, span_sum(hom_image(h.embedding), h.hull.U)};
        CHECK(is_essential(img, h.hull));
        CHECK(oracle::brute_essential(img, h.hull));
    }
}
