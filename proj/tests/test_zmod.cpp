#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "finmod/errors.hpp"
#include "finmod/zmod.hpp"

using namespace finmod;

namespace {

Mat random_mat(std::mt19937& rng, unsigned m, std::size_t rows, std::size_t cols) {
    Mat a(m, cols);
    std::uniform_int_distribution<u64> d(0, m - 1);
    for (std::size_t i = 0; i < rows; ++i) {
        Vec r(cols);
        for (auto& x : r) x = d(rng);
        a.rows.push_back(std::move(r));
    }
    return a;
}

// Full row span by closure, usable as an oracle for small m^cols.
std::set<Vec> brute_span(const Mat& a) {
    std::set<Vec> s;
    s.insert(Vec(a.cols, 0));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> cur(s.begin(), s.end());
        for (const auto& x : cur)
            for (const auto& r : a.rows) {
                Vec y = vec_add(x, r, a.m);
                if (s.insert(y).second) grew = true;
            }
    }
    return s;
}

Mat random_row_ops(std::mt19937& rng, Mat a) {
    std::uniform_int_distribution<u64> d(0, a.m - 1);
    if (a.rows.empty()) return a;
    std::uniform_int_distribution<std::size_t> pick(0, a.rows.size() - 1);
    for (int k = 0; k < 20; ++k) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        a.rows[i] = vec_add(a.rows[i], vec_scale(d(rng), a.rows[j], a.m), a.m);
    }
    std::shuffle(a.rows.begin(), a.rows.end(), rng);
    // append a random combination
    Vec extra(a.cols, 0);
    for (const auto& r : a.rows) extra = vec_add(extra, vec_scale(d(rng), r, a.m), a.m);
    a.rows.push_back(extra);
    return a;
}

const unsigned kModuli[] = {2, 3, 4, 8, 9, 12};

}  // namespace

TEST_CASE("scalar helpers") {
    CHECK(gcd64(12, 8) == 4);
    CHECK(gcd64(0, 5) == 5);
    i64 g, s, t;
    xgcd64(12, 8, g, s, t);
    CHECK(g == 4);
    CHECK(s * 12 + t * 8 == 4);
    unsigned p = 0, k = 0;
    CHECK(is_prime_power(8, &p, &k));
    CHECK(p == 2);
    CHECK(k == 3);
    CHECK(is_prime_power(9));
    CHECK(is_prime_power(2));
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(1));
    // unit_to_gcd: 8*5 = 40 = 4 mod 12, 5 is a unit
    CHECK(mulm(8, unit_to_gcd(8, 12), 12) == 4);
    CHECK(mulm(6, unit_to_gcd(6, 8), 8) == 2);
}

TEST_CASE("howell canonical form is invariant under row operations") {
    std::mt19937 rng(12345);
    for (unsigned m : kModuli) {
        for (int iter = 0; iter < 40; ++iter) {
            Mat a = random_mat(rng, m, 1 + iter % 4, 2 + iter % 3);
            Mat h = howell(a);
            Mat h2 = howell(random_row_ops(rng, a));
            CHECK(h.rows == h2.rows);
            CHECK(is_howell(h));
        }
    }
}

TEST_CASE("howell span membership and size agree with brute force") {
    std::mt19937 rng(999);
    for (unsigned m : {2u, 3u, 4u, 8u}) {
        for (int iter = 0; iter < 25; ++iter) {
            Mat a = random_mat(rng, m, 1 + iter % 3, 3);
            Mat h = howell(a);
            auto s = brute_span(a);
            CHECK(span_size(h) == s.size());
            // every span element is a member, nothing else is
            std::uniform_int_distribution<u64> d(0, m - 1);
            for (int probe = 0; probe < 30; ++probe) {
                Vec v(3);
                for (auto& x : v) x = d(rng);
                CHECK(member(h, v) == (s.count(v) > 0));
            }
            // canonical residue: two elements of one coset reduce equally
            auto it = s.begin();
            std::advance(it, (int)(s.size() / 2));
            Vec w = *it;
            Vec probe2 = vec_add(w, a.rows[0], m);
            CHECK(reduce_mod(h, w) == reduce_mod(h, probe2));
        }
    }
}

TEST_CASE("the Z/4 saturation example") {
    Mat a = Mat::from_rows(4, 2, {{2, 1}});
    Mat h = howell(a);
    REQUIRE(h.nrows() == 2);
    CHECK(h.rows[0] == Vec{2, 1});
    CHECK(h.rows[1] == Vec{0, 2});
    CHECK(member(h, {0, 2}));
    CHECK(span_size(h) == 4);
}

TEST_CASE("solve_in_span finds exact solutions") {
    std::mt19937 rng(777);
    for (unsigned m : kModuli) {
        for (int iter = 0; iter < 30; ++iter) {
            Mat a = random_mat(rng, m, 2 + iter % 3, 4);
            std::uniform_int_distribution<u64> d(0, m - 1);
            Vec x(a.nrows());
            for (auto& c : x) c = d(rng);
            Vec b = vec_mat(x, a);
            auto sol = solve_in_span(a, b);
            REQUIRE(sol.has_value());
            CHECK(vec_mat(*sol, a) == b);
            // an off-span vector has no solution
            Mat h = howell(a);
            if (span_size(h) < full_space_size(m, 4)) {
                for (int probe = 0; probe < 40; ++probe) {
                    Vec v(4);
                    for (auto& c : v) c = d(rng);
                    if (!member(h, v)) {
                        CHECK_FALSE(solve_in_span(a, v).has_value());
                        break;
                    }
                }
            }
        }
    }
}

TEST_CASE("kernel is exactly the left null space") {
    std::mt19937 rng(31337);
    for (unsigned m : {2u, 4u, 8u, 9u}) {
        for (int iter = 0; iter < 25; ++iter) {
            Mat a = random_mat(rng, m, 2 + iter % 2, 3);
            Mat k = kernel(a);
            for (const auto& kr : k.rows) CHECK(is_zero_vec(vec_mat(kr, a)));
            // brute force count over all coefficient vectors
            u64 cnt = 0;
            u64 total = full_space_size(m, a.nrows());
            for (u64 code = 0; code < total; ++code) {
                Vec x(a.nrows());
                u64 c = code;
                for (auto& v : x) {
                    v = c % m;
                    c /= m;
                }
                if (is_zero_vec(vec_mat(x, a))) ++cnt;
            }
            CHECK(span_size(k) == cnt);
        }
    }
}

TEST_CASE("span sum, intersection, containment vs brute force") {
    std::mt19937 rng(4242);
    for (unsigned m : {2u, 4u, 9u}) {
        for (int iter = 0; iter < 20; ++iter) {
            Mat a = random_mat(rng, m, 2, 3);
            Mat b = random_mat(rng, m, 2, 3);
            auto sa = brute_span(a), sb = brute_span(b);
            Mat hs = span_sum(howell(a), howell(b));
            Mat hi = span_intersect(howell(a), howell(b));
            std::set<Vec> inter;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::inserter(inter, inter.begin()));
            CHECK(span_size(hi) == inter.size());
            for (const auto& v : inter) CHECK(member(hi, v));
            u64 sum_size = (u64)sa.size() * sb.size() / inter.size();
            CHECK(span_size(hs) == sum_size);
            CHECK(span_contains(hs, howell(a)));
            CHECK(span_contains(hs, howell(b)));
        }
    }
}

TEST_CASE("preimage computes {x in D : xA in W}") {
    std::mt19937 rng(5150);
    for (unsigned m : {2u, 4u, 8u}) {
        for (int iter = 0; iter < 20; ++iter) {
            Mat a = random_mat(rng, m, 3, 3);
            Mat w = howell(random_mat(rng, m, 1, 3));
            Mat dom = Mat::identity(m, 3);
            Mat pre = preimage(a, w, dom);
            // brute force
            u64 cnt = 0;
            for (u64 code = 0; code < full_space_size(m, 3); ++code) {
                Vec x(3);
                u64 c = code;
                for (auto& v : x) {
                    v = c % m;
                    c /= m;
                }
                bool in = member(w, vec_mat(x, a));
                if (in) {
                    ++cnt;
                    CHECK(member(pre, x));
                }
            }
            CHECK(span_size(pre) == cnt);
        }
    }
}

TEST_CASE("coset representatives enumerate V/U exactly once") {
    std::mt19937 rng(2024);
    for (unsigned m : {2u, 4u, 8u}) {
        for (int iter = 0; iter < 15; ++iter) {
            Mat v = howell(random_mat(rng, m, 3, 3));
            Mat u = howell(Mat::from_rows(m, 3, {vec_scale(2, v.rows[0], m)}));
            if (!span_contains(v, u)) continue;
            auto reps = coset_reps(v, u, 1u << 20);
            CHECK(reps.size() == span_size(v) / std::max<u64>(1, span_size(u)));
            CHECK(is_zero_vec(reps[0]));
            std::set<Vec> distinct(reps.begin(), reps.end());
            CHECK(distinct.size() == reps.size());
            for (const auto& r : reps) {
                CHECK(member(v, r));
                CHECK(reduce_mod(u, r) == r);
            }
        }
    }
    // full-space fast path
    Mat v = Mat::identity(4, 2);
    Mat u = howell(Mat::from_rows(4, 2, {{2, 0}}));
    auto reps = coset_reps(howell(v), u, 0);
    CHECK(reps.size() == 8);
    CHECK(reps[0] == Vec{0, 0});
}

TEST_CASE("coset enumeration respects the bound") {
    Mat v = Mat::identity(2, 10);
    CHECK_THROWS_AS((void)coset_reps(howell(v), Mat(2, 10), 100), Error);
}
