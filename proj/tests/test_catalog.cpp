#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "finmod/domains.hpp"
#include "finmod/errors.hpp"
#include "finmod/memo.hpp"
#include "oracles.hpp"

using namespace finmod;

TEST_CASE("catalog of a prime field: 0, R, R^2") {
    Catalog cat = build_catalog(builtin_ring("F2"), 64, 2);
    REQUIRE(cat.classes.size() == 3);
    std::multiset<u64> sizes;
    for (const auto& c : cat.classes) sizes.insert(c.size);
    CHECK(sizes == std::multiset<u64>{1, 2, 4});
    for (const auto& c : cat.classes) {
        CHECK(c.injective);
        CHECK(c.projective);
        CHECK(c.semisimple);
    }
}

TEST_CASE("catalog over Z4: exactly the six abelian groups of exponent 4, rank <= 2") {
    Catalog cat = build_catalog(builtin_ring("Z4"), 64, 2);
    REQUIRE(cat.classes.size() == 6);
    std::multiset<u64> sizes;
    for (const auto& c : cat.classes) sizes.insert(c.size);
    CHECK(sizes == std::multiset<u64>{1, 2, 4, 4, 8, 16});
}

TEST_CASE("catalog class counts per ring (regression constants)") {
    // counts recorded after the first verified run; dedupe soundness and
    // completeness are checked independently below
    CHECK(build_catalog(builtin_ring("Z8"), 64, 2).classes.size() == 10);
    CHECK(build_catalog(builtin_ring("E2"), 64, 2).classes.size() == 6);
    CHECK(build_catalog(builtin_ring("R8"), 64, 2).classes.size() == 27);
    CHECK(build_catalog(builtin_ring("T2"), 64, 2).classes.size() == 18);
    CHECK(build_catalog(builtin_ring("K4"), 64, 2).classes.size() == 32);
    CHECK(build_catalog(builtin_ring("M2F2"), 64, 2).classes.size() == 4);
}

TEST_CASE("deduplication soundness and flag agreement") {
    for (const char* name : {"Z4", "T2", "R8"}) {
        Catalog cat = build_catalog(builtin_ring(name), 16, 2);
        for (std::size_t i = 0; i < cat.classes.size(); ++i)
            for (std::size_t j = i + 1; j < cat.classes.size(); ++j)
                CHECK_FALSE(are_isomorphic(cat.classes[i].rep, cat.classes[j].rep));
        for (const auto& c : cat.classes) {
            CHECK(c.injective == is_injective(c.rep));
            CHECK(c.projective == is_projective(c.rep));
            CHECK(c.simple_flag == is_simple(c.rep));
            CHECK(c.cyclic == is_cyclic(c.rep));
            CHECK(c.semisimple == is_semisimple(c.rep));
            CHECK(c.length == comp_length(c.rep));
        }
    }
}

TEST_CASE("completeness: random quotients of R^2 land in the catalog") {
    std::mt19937 rng(20240809);
    for (const char* name : {"Z4", "R8", "T2"}) {
        auto ring = builtin_ring(name);
        Catalog cat = build_catalog(ring, 64, 2);
        FiniteModule f = free_module(ring, 2);
        auto subs = submodules(f);
        for (int probe = 0; probe < 12; ++probe) {
            const auto& k = subs[rng() % subs.size()];
            if (f.size() / k.size() > 64) continue;
            FiniteModule q = quotient(f, k).first;
            CHECK(cat.class_of(q) != nullptr);
        }
        // ids are stable across rebuilds
        Catalog cat2 = build_catalog(ring, 64, 2);
        REQUIRE(cat.classes.size() == cat2.classes.size());
        for (std::size_t i = 0; i < cat.classes.size(); ++i) {
            CHECK(cat.classes[i].id == cat2.classes[i].id);
            CHECK(module_eq(cat.classes[i].rep, cat2.classes[i].rep));
        }
    }
}

TEST_CASE("short exact sequence streams") {
    auto r8 = builtin_ring("R8");
    FiniteModule r = regular_module(r8);
    auto stream = short_exact_sequences(r);
    CHECK(stream.size() == 6);
    for (const auto& ses : stream) {
        CHECK(hom_surjective(ses.projection));
        CHECK(span_equal(hom_kernel(ses.projection), howell(ses.sub.span)));
        CHECK(ses.sub.size() * ses.quot.size() == r.size());
    }
    FiniteModule s = quotient(r, jacobson_radical(r8)).first;
    auto sstream = short_exact_sequences(s);
    CHECK(sstream.size() == 2);
    // A = 0 gives C isomorphic to B with bijective projection
    const auto& first = sstream.front();
    CHECK(first.sub.size() == 1);
    CHECK(hom_injective(first.projection));
}

TEST_CASE("cache store and load round trip") {
    namespace fs = std::filesystem;
    auto ring = builtin_ring("Z4");
    Catalog cat = build_catalog(ring, 64, 2);
    // populate a few memo rows
    for (const auto& a : cat.classes)
        for (const auto& b : cat.classes) (void)is_subinjective(a.rep, b.rep);
    const std::string dir = (fs::temp_directory_path() / "finmod-cache-test").string();
    fs::create_directories(dir);
    const std::string path = dir + "/z4.json";
    cache_store(path, cat);
    Catalog back = cache_load(path, ring, 64, 2);
    REQUIRE(back.classes.size() == cat.classes.size());
    for (std::size_t i = 0; i < cat.classes.size(); ++i) {
        CHECK(back.classes[i].id == cat.classes[i].id);
        CHECK(module_eq(back.classes[i].rep, cat.classes[i].rep));
        CHECK(back.classes[i].injective == cat.classes[i].injective);
    }
    // version/ring mismatches are rejected
    CHECK_THROWS_AS((void)cache_load(path, builtin_ring("Z8"), 64, 2), Error);
    CHECK_THROWS_AS((void)cache_load(path, ring, 32, 2), Error);
    CHECK_THROWS_AS((void)cache_load(dir + "/missing.json", ring, 64, 2), Error);
    fs::remove_all(dir);
}

TEST_CASE("memoized verdicts survive a cache round trip") {
    namespace fs = std::filesystem;
    auto ring = builtin_ring("Z4");
    const std::string dir = (fs::temp_directory_path() / "finmod-cache-test2").string();
    fs::create_directories(dir);
    Catalog cat = load_or_build_catalog(ring, 64, 2, dir);
    FiniteModule r = regular_module(ring);
    Verdict v1 = sier_verdict(r, cat);
    cache_store(dir + "/" + ring->hash_hex() + "-s64-g2.json", cat);
    const u64 hits_before = memo().hits();
    Catalog cat2 = load_or_build_catalog(ring, 64, 2, dir);
    Verdict v2 = sier_verdict(r, cat2);
    CHECK(v1.certified() == v2.certified());
    CHECK(v1.bound == v2.bound);
    CHECK(memo().hits() > hits_before);  // the reloaded table was consulted
    fs::remove_all(dir);
}

TEST_CASE("bad bounds are rejected") {
    CHECK_THROWS_AS((void)build_catalog(builtin_ring("Z4"), 0, 2), Error);
    // |R|^g over the lattice budget
    CHECK_THROWS_AS((void)build_catalog(builtin_ring("M2F2"), 64, 4), Error);
}
