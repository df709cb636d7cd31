#pragma once

// Exact linear algebra over Z/mZ.
//
// Vectors are rows, maps act on the right: y = x * A.  A subgroup of
// (Z/mZ)^n is stored as the row span of a matrix in Howell normal form,
// the unique canonical basis of a row span over Z/mZ: echelon with strictly
// increasing pivot columns, every pivot entry a divisor of m, entries above
// a pivot reduced modulo it, and saturated (for every column j, the rows
// with pivot column >= j span all elements of the span whose first j
// coordinates vanish).  Saturation is what makes membership tests and coset
// reduction valid over a non-field, e.g. span{[2,1]} over Z/4 also contains
// [0,2].

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace finmod {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using Vec = std::vector<u64>;

struct Mat {
    unsigned m = 2;  // modulus, entries canonical in [0, m)
    std::size_t cols = 0;
    std::vector<Vec> rows;

    Mat() = default;
    Mat(unsigned m_, std::size_t cols_) : m(m_), cols(cols_) {}
    static Mat identity(unsigned m, std::size_t n);
    static Mat from_rows(unsigned m, std::size_t cols, std::vector<Vec> rows);

    bool empty() const { return rows.empty(); }
    std::size_t nrows() const { return rows.size(); }
};

// -- scalar helpers ---------------------------------------------------------

inline u64 addm(u64 a, u64 b, unsigned m) { return (a + b) % m; }
inline u64 subm(u64 a, u64 b, unsigned m) { return (a + m - b % m) % m; }
inline u64 mulm(u64 a, u64 b, unsigned m) { return (a * b) % m; }
u64 gcd64(u64 a, u64 b);
// g = s*a + t*b
void xgcd64(i64 a, i64 b, i64& g, i64& s, i64& t);
bool is_prime_power(unsigned m, unsigned* p = nullptr, unsigned* k = nullptr);
// unit u with (a*u) % m == gcd(a, m); a must be nonzero mod m
u64 unit_to_gcd(u64 a, unsigned m);

// -- vector helpers ---------------------------------------------------------

bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b, unsigned m);
Vec vec_sub(const Vec& a, const Vec& b, unsigned m);
Vec vec_scale(u64 c, const Vec& a, unsigned m);
Vec vec_mat(const Vec& v, const Mat& a);  // v * A
std::string vec_key(const Vec& v);

// -- core matrix operations -------------------------------------------------

Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat vstack(const Mat& a, const Mat& b);
std::string mat_key(const Mat& a);

// Canonical Howell normal form of the row span.
Mat howell(const Mat& a);
bool is_howell(const Mat& a);

// Canonical residue of v modulo rowspan(h); h must be in Howell form.
Vec reduce_mod(const Mat& h, Vec v);
bool member(const Mat& h, const Vec& v);

// x with x*a == b, if any (a arbitrary, not necessarily Howell).
std::optional<Vec> solve_in_span(const Mat& a, const Vec& b);

// Howell basis of {x : x*a == 0} (x has a.nrows() coordinates).
Mat kernel(const Mat& a);

Mat span_sum(const Mat& a, const Mat& b);
Mat span_intersect(const Mat& a, const Mat& b);
bool span_contains(const Mat& big_howell, const Mat& other);
bool span_equal(const Mat& howell_a, const Mat& howell_b);
u64 span_size(const Mat& howell_a);
u64 full_space_size(unsigned m, std::size_t cols);
// exponent of p in |span|, for m a power of p; immune to u64 overflow on
// high-dimensional coefficient spaces
unsigned span_p_exponent(const Mat& howell_a, unsigned p);

// {x in span(domain) : x*a in span(w)}.  a maps (Z/m)^n -> (Z/m)^p, w is a
// subgroup of the target, domain a subgroup of the source.  All Howell or
// arbitrary generating rows.
Mat preimage(const Mat& a, const Mat& w, const Mat& domain);

// Enumerate canonical coset representatives of span(u) inside span(v), in a
// deterministic order with the zero vector first.  Calls emit for each rep;
// stops and returns false if emit returns false.  Throws BoundExceeded if
// the coset count exceeds `limit` (0 = no limit).
bool for_each_coset_rep(const Mat& v, const Mat& u, u64 limit,
                        const std::function<bool(const Vec&)>& emit);
std::vector<Vec> coset_reps(const Mat& v, const Mat& u, u64 limit);

}  // namespace finmod
