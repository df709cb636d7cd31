#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "finmod/errors.hpp"
#include "finmod/module.hpp"
#include "oracles.hpp"

using namespace finmod;

namespace {

// Z2 over Z4: quotient of the regular module by {0,2}
FiniteModule z2_over_z4() {
    auto z4 = builtin_ring("Z4");
    FiniteModule r = regular_module(z4);
    return quotient(r, submodule_from_gens(r, {{2}})).first;
}

FiniteModule z2_plus_z4() {
    auto z4 = builtin_ring("Z4");
    FiniteModule r2 = free_module(z4, 2);
    return quotient(r2, submodule_from_gens(r2, {{2, 0}})).first;
}

}  // namespace

TEST_CASE("regular modules") {
    CHECK(regular_module(builtin_ring("F2")).size() == 2);
    CHECK(is_simple(regular_module(builtin_ring("F2"))));
    CHECK(regular_module(builtin_ring("R8")).size() == 8);
    CHECK(regular_module(builtin_ring("M2F2")).size() == 16);
}

TEST_CASE("submodule lattice of the regular module, against brute force") {
    auto r8 = builtin_ring("R8");
    FiniteModule r = regular_module(r8);
    auto subs = submodules(r);
    CHECK(subs.size() == 6);  // 0, uR, vR, (u+v)R, J, R
    std::multiset<u64> sizes;
    for (const auto& s : subs) sizes.insert(s.size());
    CHECK(sizes == std::multiset<u64>{1, 2, 2, 2, 4, 8});
    auto brute = oracle::brute_submodules(r);
    CHECK(brute.size() == 6);

    FiniteModule z4 = regular_module(builtin_ring("Z4"));
    auto chain = submodules(z4);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].size() == 1);
    CHECK(chain[1].size() == 2);
    CHECK(chain[2].size() == 4);
    CHECK(oracle::brute_submodules(z4).size() == 3);
}

TEST_CASE("submodules of Z4 + Z2 over Z4") {
    FiniteModule m = z2_plus_z4();
    CHECK(m.size() == 8);
    auto subs = submodules(m);
    CHECK(subs.size() == 8);
    CHECK(oracle::brute_submodules(m).size() == 8);
    // a simple module has exactly the two trivial submodules
    FiniteModule s = z2_over_z4();
    CHECK(submodules(s).size() == 2);
}

TEST_CASE("jacobson radical") {
    CHECK(jacobson_radical(builtin_ring("F2")).size() == 1);
    auto jr8 = jacobson_radical(builtin_ring("R8"));
    CHECK(jr8.size() == 4);
    CHECK(member(jr8.span, {0, 1, 0}));
    CHECK(member(jr8.span, {0, 0, 1}));
    auto jz4 = jacobson_radical(builtin_ring("Z4"));
    CHECK(jz4.size() == 2);
    CHECK(member(jz4.span, {2}));
    CHECK(jacobson_radical(builtin_ring("M2F2")).size() == 1);  // semisimple
    CHECK(jacobson_radical(builtin_ring("T2")).size() == 2);
    // J is a two-sided ideal and nilpotent; R/J semisimple
    for (const char* name : {"R8", "T2", "Z8", "K4"}) {
        auto ring = builtin_ring(name);
        auto j = jacobson_radical(ring);
        FiniteModule r = regular_module(ring);
        for (const auto& row : j.span.rows)
            for (unsigned a = 0; a < ring->rank; ++a) {
                Vec ea(ring->rank, 0);
                ea[a] = 1;
                CHECK(member(j.span, ring_mul(*ring, ea, row)));  // left ideal too
            }
        FiniteModule top = quotient(r, j).first;
        CHECK(is_semisimple(top));
        // nilpotency: some power of the span multiplies to zero
        Mat cur = j.span;
        bool nil = false;
        for (int it = 0; it < 8 && !nil; ++it) {
            Mat nxt(ring->m, ring->rank);
            for (const auto& x : cur.rows)
                for (const auto& y : j.span.rows) nxt.rows.push_back(ring_mul(*ring, x, y));
            cur = howell(nxt);
            nil = cur.rows.empty();
        }
        CHECK(nil);
    }
}

TEST_CASE("quotients") {
    auto r8 = builtin_ring("R8");
    FiniteModule r = regular_module(r8);
    auto [q0, pi0] = quotient(r, zero_submodule(r));
    CHECK(q0.size() == 8);
    CHECK(pi0.images.size() == min_generators(r).size());
    auto j = jacobson_radical(r8);
    auto [k, pi] = quotient(r, j);
    CHECK(k.size() == 2);
    CHECK(is_simple(k));
    FiniteModule z2 = z2_over_z4();
    CHECK(z2.size() == 2);
    CHECK(comp_length(z2) == 1);
    // quotient by a non-submodule fails
    FiniteModule other = regular_module(builtin_ring("Z4"));
    CHECK_THROWS_AS((void)quotient(r, zero_submodule(other)), Error);
}

TEST_CASE("direct sums") {
    auto z4 = builtin_ring("Z4");
    FiniteModule z2 = z2_over_z4();
    FiniteModule r = regular_module(z4);
    FiniteModule s = direct_sum(z2, r);
    CHECK(s.size() == 8);
    FiniteModule with_zero = direct_sum(r, zero_module(z4));
    CHECK(with_zero.size() == 4);
    CHECK(comp_length(with_zero) == comp_length(r));
}

TEST_CASE("structural invariants") {
    auto r8 = builtin_ring("R8");
    FiniteModule r = regular_module(r8);
    auto si = structural_invariants(r);
    CHECK(si.size == 8);
    CHECK(si.length == 3);
    CHECK(si.is_cyclic);
    CHECK_FALSE(si.is_semisimple);
    CHECK(si.socle.size() == 4);  // soc = J
    CHECK(span_equal(si.socle.span, si.radical.span));
    CHECK(si.min_generator_count == 1);

    FiniteModule k4 = regular_module(builtin_ring("K4"));
    CHECK(comp_length(k4) == 4);
    CHECK(socle(k4).size() == 2);

    FiniteModule simple = quotient(r, jacobson_radical(r8)).first;
    auto ssi = structural_invariants(simple);
    CHECK(ssi.length == 1);
    CHECK(ssi.is_cyclic);
    CHECK(ssi.is_semisimple);
    CHECK(ssi.is_simple);
}

TEST_CASE("composition length is additive over every lattice short exact sequence") {
    for (const char* name : {"Z4", "R8", "T2"}) {
        auto ring = builtin_ring(name);
        FiniteModule b = regular_module(ring);
        for (const auto& a : submodules(b)) {
            FiniteModule am = submodule_as_module(a);
            FiniteModule c = quotient(b, a).first;
            CHECK(comp_length(b) == comp_length(am) + comp_length(c));
        }
    }
}

TEST_CASE("essential submodules") {
    auto r8 = builtin_ring("R8");
    FiniteModule r = regular_module(r8);
    CHECK(is_essential(full_submodule(r), r));
    CHECK_FALSE(is_essential(zero_submodule(r), r));
    CHECK(is_essential(socle(r), r));  // local, J = soc
    CHECK(is_essential(zero_submodule(zero_module(r8)), zero_module(r8)));
    // cross-check the definition on every submodule of small modules
    for (const char* name : {"Z4", "R8", "T2"}) {
        auto ring = builtin_ring(name);
        FiniteModule b = regular_module(ring);
        for (const auto& a : submodules(b)) CHECK(is_essential(a, b) == oracle::brute_essential(a, b));
    }
}

TEST_CASE("minimal generators") {
    auto t2 = builtin_ring("T2");
    // direct sum of the two non-isomorphic T2 simples is cyclic
    FiniteModule r = regular_module(t2);
    auto subs = submodules(r);
    // find the two maximal submodules, quotient to get the simples
    std::vector<FiniteModule> simples = simple_modules(t2);
    REQUIRE(simples.size() == 2);
    FiniteModule s12 = direct_sum(simples[0], simples[1]);
    CHECK(min_generators(s12).size() == 1);
    FiniteModule s11 = direct_sum(simples[0], simples[0]);
    CHECK(min_generators(s11).size() == 2);
    // the regular module is cyclic
    CHECK(min_generators(regular_module(builtin_ring("K4"))).size() == 1);
    CHECK(min_generators(free_module(builtin_ring("R8"), 2)).size() == 2);
    CHECK(min_generators(zero_module(t2)).empty());
}

TEST_CASE("abelian type") {
    auto z4 = builtin_ring("Z4");
    CHECK(abelian_type(regular_module(z4)) == std::vector<u64>{4});
    CHECK(abelian_type(z2_plus_z4()) == std::vector<u64>{4, 2});
    CHECK(abelian_type(z2_over_z4()) == std::vector<u64>{2});
    CHECK(abelian_type(zero_module(z4)).empty());
    CHECK(abelian_type(regular_module(builtin_ring("Z8"))) == std::vector<u64>{8});
    CHECK(abelian_type(regular_module(builtin_ring("R8"))) == std::vector<u64>{2, 2, 2});
}

TEST_CASE("module JSON round trip") {
    FiniteModule m = z2_plus_z4();
    FiniteModule back = module_from_json(m.ring, module_json(m));
    CHECK(module_eq(m, back));
}

TEST_CASE("element enumeration is canonical and complete") {
    FiniteModule m = z2_plus_z4();
    const auto& els = elements(m);
    CHECK(els.size() == 8);
    CHECK(is_zero_vec(els[0]));
    std::set<Vec> distinct(els.begin(), els.end());
    CHECK(distinct.size() == 8);
    for (const auto& e : els) CHECK(reduce_mod(m.U, e) == e);
}
