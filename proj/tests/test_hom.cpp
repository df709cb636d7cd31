#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finmod/errors.hpp"
#include "finmod/hom.hpp"
#include "oracles.hpp"

using namespace finmod;

namespace {

FiniteModule z2_over_z4() {
    auto z4 = builtin_ring("Z4");
    FiniteModule r = regular_module(z4);
    return quotient(r, submodule_from_gens(r, {{2}})).first;
}

}  // namespace

TEST_CASE("hom set sizes on the pinned instances") {
    auto f2 = builtin_ring("F2");
    CHECK(hom_set(regular_module(f2), regular_module(f2))->size == 2);

    auto z4 = builtin_ring("Z4");
    FiniteModule z2 = z2_over_z4();
    CHECK(hom_set(z2, regular_module(z4))->size == 2);  // zero and the injection onto {0,2}

    auto r8 = builtin_ring("R8");
    FiniteModule r = regular_module(r8);
    FiniteModule k = quotient(r, jacobson_radical(r8)).first;
    CHECK(hom_set(k, r)->size == 4);  // Hom(k, R8) = soc(R8) = J
}

TEST_CASE("hom set cardinality equals brute-force count on small instances") {
    std::vector<std::pair<FiniteModule, FiniteModule>> pairs;
    auto z4 = builtin_ring("Z4");
    auto r8 = builtin_ring("R8");
    auto t2 = builtin_ring("T2");
    FiniteModule rz4 = regular_module(z4);
    FiniteModule z2 = z2_over_z4();
    FiniteModule rr8 = regular_module(r8);
    FiniteModule k = quotient(rr8, jacobson_radical(r8)).first;
    FiniteModule rt2 = regular_module(t2);
    auto simples_t2 = simple_modules(t2);
    pairs.push_back({rz4, rz4});
    pairs.push_back({z2, rz4});
    pairs.push_back({rz4, z2});
    pairs.push_back({direct_sum(z2, z2), rz4});
    pairs.push_back({rr8, rr8});
    pairs.push_back({k, rr8});
    pairs.push_back({rr8, k});
    pairs.push_back({rt2, rt2});
    pairs.push_back({simples_t2[0], rt2});
    pairs.push_back({simples_t2[1], rt2});
    pairs.push_back({rt2, simples_t2[0]});
    pairs.push_back({zero_module(z4), rz4});
    pairs.push_back({rz4, zero_module(z4)});
    for (const auto& [a, b] : pairs) {
        auto hs = hom_set(a, b);
        CHECK(hs->size == oracle::brute_hom_count(a, b));
        // orders multiply to the size, every basis hom is valid and a member
        u64 prod = 1;
        for (u64 o : hs->orders) prod *= o;
        CHECK(prod == hs->size);
        for (const auto& h : hs->basis) {
            CHECK(hom_is_valid(h));
            CHECK(hom_member(*hs, h));
        }
        // enumeration is exact and starts at zero
        u64 n = 0;
        enumerate_homs(*hs, 0, [&](const ModuleHom& h) {
            if (n == 0) CHECK(hom_is_zero(h));
            ++n;
            return true;
        });
        CHECK(n == hs->size);
    }
}

TEST_CASE("hom apply, compose, image, kernel") {
    auto z4 = builtin_ring("Z4");
    FiniteModule r = regular_module(z4);
    FiniteModule z2 = z2_over_z4();
    auto [q, pi] = quotient(r, submodule_from_gens(r, {{2}}));
    CHECK(hom_surjective(pi));
    CHECK_FALSE(hom_injective(pi));
    CHECK(span_size(hom_kernel(pi)) == 2);
    CHECK(hom_apply(pi, Vec{3}) == reduce_mod(q.U, Vec{3}));
    ModuleHom id = identity_hom(r);
    CHECK(hom_injective(id));
    CHECK(hom_surjective(id));
    ModuleHom z = zero_hom(r, z2);
    CHECK(hom_is_zero(z));
    CHECK(hom_is_zero(hom_compose(z, id)));
    ModuleHom pi2 = hom_compose(pi, id);
    CHECK(pi2.images == pi.images);
    CHECK(span_size(hom_image(pi)) == span_size(q.V));
}

TEST_CASE("inclusion homs from submodule handles") {
    auto r8 = builtin_ring("R8");
    FiniteModule r = regular_module(r8);
    for (const auto& s : submodules(r)) {
        ModuleHom inc = inclusion_hom(s);
        CHECK(hom_is_valid(inc));
        CHECK(hom_injective(inc));
        CHECK(span_size(hom_image(inc)) == span_size(s.span));
    }
}

TEST_CASE("isomorphism testing") {
    auto r8 = builtin_ring("R8");
    FiniteModule r = regular_module(r8);
    // uR and vR are isomorphic (both the simple)
    auto uR = submodule_as_module(submodule_from_gens(r, {{0, 1, 0}}));
    auto vR = submodule_as_module(submodule_from_gens(r, {{0, 0, 1}}));
    CHECK(are_isomorphic(uR, uR));
    CHECK(are_isomorphic(uR, vR));

    auto z4 = builtin_ring("Z4");
    FiniteModule rz4 = regular_module(z4);
    FiniteModule z2 = z2_over_z4();
    FiniteModule z2z2 = direct_sum(z2, z2);
    CHECK_FALSE(are_isomorphic(rz4, z2z2));  // abelian type differs
    CHECK_FALSE(are_isomorphic(rz4, z2));
    CHECK(are_isomorphic(direct_sum(z2, rz4), direct_sum(rz4, z2)));
    CHECK_THROWS_AS((void)are_isomorphic(rz4, regular_module(r8)), Error);

    // equivalence relation on a sample; isomorphic modules share invariants
    std::vector<FiniteModule> sample = {rz4, z2, z2z2, direct_sum(z2, rz4), direct_sum(rz4, rz4)};
    for (const auto& a : sample)
        for (const auto& b : sample) {
            CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
            if (are_isomorphic(a, b)) {
                CHECK(inv_hash(a) == inv_hash(b));
                CHECK(comp_length(a) == comp_length(b));
                CHECK(abelian_type(a) == abelian_type(b));
            }
            for (const auto& c : sample)
                if (are_isomorphic(a, b) && are_isomorphic(b, c)) CHECK(are_isomorphic(a, c));
        }

    std::optional<ModuleHom> f = find_isomorphism(uR, vR);
    REQUIRE(f.has_value());
    CHECK(hom_injective(*f));
    CHECK(hom_surjective(*f));
}

TEST_CASE("simple modules per ring") {
    CHECK(simple_modules(builtin_ring("F2")).size() == 1);
    CHECK(simple_modules(builtin_ring("R8")).size() == 1);  // local
    CHECK(simple_modules(builtin_ring("Z4")).size() == 1);
    CHECK(simple_modules(builtin_ring("M2F2")).size() == 1);
    auto t2s = simple_modules(builtin_ring("T2"));
    REQUIRE(t2s.size() == 2);
    CHECK_FALSE(are_isomorphic(t2s[0], t2s[1]));
    for (const auto& s : t2s) CHECK(is_simple(s));
    CHECK(simple_modules(builtin_ring("K4")).size() == 1);
}

TEST_CASE("quotient of quotient composes") {
    // (M/U)/(W/U) isomorphic to M/W for U <= W <= M
    auto r8 = builtin_ring("R8");
    FiniteModule m = free_module(r8, 2);
    auto subs = submodules(m);
    int tested = 0;
    for (const auto& u : subs) {
        if (u.size() != 2) continue;
        FiniteModule mu = quotient(m, u).first;
        for (const auto& w0 : submodules(mu)) {
            if (w0.size() != 2) continue;
            FiniteModule muw = quotient(mu, w0).first;
            // W as a submodule of M is the same ambient span
            SubmoduleHandle w{m, w0.span};
            FiniteModule mw = quotient(m, w).first;
            CHECK(are_isomorphic(muw, mw));
            if (++tested > 4) break;
        }
        if (tested > 4) break;
    }
    CHECK(tested > 0);
}

TEST_CASE("restriction surjectivity and factorization helpers") {
    auto z4 = builtin_ring("Z4");
    FiniteModule r = regular_module(z4);
    FiniteModule z2 = z2_over_z4();
    // every hom {0,2} -> Z4 extends to Z4 (Z4 self-injective: Baer instance)
    auto ideal = submodule_from_gens(r, {{2}});
    CHECK(restriction_surjective(inclusion_hom(ideal), r));
    // but homs {0,2} -> Z2 do NOT all extend to Z4 -> Z2... they do:
    // pi: Z4 -> Z2 kills {0,2}; the nonzero hom {0,2} -> Z2 has no extension
    CHECK_FALSE(restriction_surjective(inclusion_hom(ideal), z2));
    // identity of projective module factors through its free cover
    ModuleHom id = identity_hom(z2);
    auto [q, pi] = quotient(r, ideal);
    // q == z2 as modules
    CHECK(module_eq(q, z2));
    CHECK_FALSE(factors_through(pi, id));  // z2 is not projective over Z4
    CHECK(factors_through(identity_hom(r), identity_hom(r)));
    CHECK(all_factor_through(identity_hom(z2), z2));
}
