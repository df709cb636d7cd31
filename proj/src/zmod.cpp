#include "finmod/zmod.hpp"

#include <algorithm>
#include <cassert>

#include "finmod/errors.hpp"

namespace finmod {

u64 gcd64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void xgcd64(i64 a, i64 b, i64& g, i64& s, i64& t) {
    i64 old_r = a, r = b;
    i64 old_s = 1, s1 = 0;
    i64 old_t = 0, t1 = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s1;
        old_s = s1;
        s1 = tmp;
        tmp = old_t - q * t1;
        old_t = t1;
        t1 = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    s = old_s;
    t = old_t;
}

bool is_prime_power(unsigned m, unsigned* p_out, unsigned* k_out) {
    if (m < 2) return false;
    unsigned p = 0;
    for (unsigned d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = m;  // prime
    unsigned k = 0, n = m;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    if (n != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

u64 unit_to_gcd(u64 a, unsigned m) {
    a %= m;
    assert(a != 0);
    const u64 g = gcd64(a, m);
    for (u64 u = 1; u < m; ++u) {
        if (gcd64(u, m) == 1 && mulm(a, u, m) == g) return u;
    }
    assert(false && "no unit scales a to gcd(a, m)");
    return 1;
}

bool is_zero_vec(const Vec& v) {
    for (u64 x : v)
        if (x) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b, unsigned m) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = addm(a[i], b[i], m);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b, unsigned m) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = subm(a[i], b[i], m);
    return r;
}

Vec vec_scale(u64 c, const Vec& a, unsigned m) {
    Vec r(a.size());
    c %= m;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulm(c, a[i], m);
    return r;
}

Vec vec_mat(const Vec& v, const Mat& a) {
    assert(v.size() == a.nrows());
    Vec r(a.cols, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        for (std::size_t j = 0; j < a.cols; ++j)
            r[j] = (r[j] + v[i] * a.rows[i][j]) % a.m;
    }
    return r;
}

std::string vec_key(const Vec& v) {
    std::string s;
    s.reserve(v.size() * 3);
    for (u64 x : v) {
        s += std::to_string(x);
        s += ',';
    }
    return s;
}

Mat Mat::identity(unsigned m, std::size_t n) {
    Mat id(m, n);
    id.rows.assign(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) id.rows[i][i] = 1 % m;
    return id;
}

Mat Mat::from_rows(unsigned m, std::size_t cols, std::vector<Vec> rs) {
    Mat a(m, cols);
    for (auto& r : rs) {
        assert(r.size() == cols);
        for (auto& x : r) x %= m;
    }
    a.rows = std::move(rs);
    return a;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    assert(a.m == b.m && a.cols == b.nrows());
    Mat c(a.m, b.cols);
    c.rows.assign(a.nrows(), Vec(b.cols, 0));
    for (std::size_t i = 0; i < a.nrows(); ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const u64 aik = a.rows[i][k];
            if (!aik) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.rows[i][j] = (c.rows[i][j] + aik * b.rows[k][j]) % a.m;
        }
    return c;
}

Mat transpose(const Mat& a) {
    Mat t(a.m, a.nrows());
    t.rows.assign(a.cols, Vec(a.nrows(), 0));
    for (std::size_t i = 0; i < a.nrows(); ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t.rows[j][i] = a.rows[i][j];
    return t;
}

Mat vstack(const Mat& a, const Mat& b) {
    assert(a.m == b.m && (a.empty() || b.empty() || a.cols == b.cols));
    Mat c(a.m, a.cols ? a.cols : b.cols);
    c.rows = a.rows;
    c.rows.insert(c.rows.end(), b.rows.begin(), b.rows.end());
    return c;
}

std::string mat_key(const Mat& a) {
    std::string s = std::to_string(a.cols) + "#";
    for (const auto& r : a.rows) {
        s += vec_key(r);
        s += ';';
    }
    return s;
}

namespace {

std::size_t pivot_col(const Vec& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j]) return j;
    return v.size();
}

void drop_zero_rows(Mat& w) {
    std::erase_if(w.rows, [](const Vec& r) { return is_zero_vec(r); });
}

// In-place unimodular reduction to echelon form with strictly increasing
// pivot columns.  Preserves the row span exactly.
void echelonize(Mat& w) {
    drop_zero_rows(w);
    std::size_t r = 0;
    for (std::size_t j = 0; j < w.cols && r < w.rows.size(); ++j) {
        std::size_t piv = w.rows.size();
        for (std::size_t i = r; i < w.rows.size(); ++i)
            if (w.rows[i][j]) {
                piv = i;
                break;
            }
        if (piv == w.rows.size()) continue;
        std::swap(w.rows[r], w.rows[piv]);
        for (std::size_t i = r + 1; i < w.rows.size(); ++i) {
            if (!w.rows[i][j]) continue;
            const u64 a = w.rows[r][j], b = w.rows[i][j];
            i64 g, s, t;
            xgcd64((i64)a, (i64)b, g, s, t);
            const u64 sm = (u64)(((s % (i64)w.m) + (i64)w.m) % (i64)w.m);
            const u64 tm = (u64)(((t % (i64)w.m) + (i64)w.m) % (i64)w.m);
            const u64 um = (a / (u64)g) % w.m;
            const u64 vm = (w.m - (b / (u64)g) % w.m) % w.m;
            // [s t; -b/g a/g] has determinant 1: row span is preserved.
            Vec nr(w.cols), ni(w.cols);
            for (std::size_t c = 0; c < w.cols; ++c) {
                const u64 x = w.rows[r][c], y = w.rows[i][c];
                nr[c] = (sm * x + tm * y) % w.m;
                ni[c] = (vm * x + um * y) % w.m;
            }
            w.rows[r] = std::move(nr);
            w.rows[i] = std::move(ni);
        }
        ++r;
    }
    drop_zero_rows(w);
}

}  // namespace

Mat howell(const Mat& a) {
    Mat w(a.m, a.cols);
    w.rows.reserve(a.nrows());
    for (const auto& r : a.rows) {
        Vec c(r);
        for (auto& x : c) x %= a.m;
        if (!is_zero_vec(c)) w.rows.push_back(std::move(c));
    }
    echelonize(w);
    // Saturate: (m/gcd(pivot,m)) * row lies in the span but has a later
    // pivot; fold such rows back in until the form stabilizes.
    for (;;) {
        std::vector<Vec> extra;
        for (const auto& row : w.rows) {
            const std::size_t j = pivot_col(row);
            const u64 g = gcd64(row[j], w.m);
            const u64 h = w.m / g;
            if (h == 1) continue;
            Vec e = vec_scale(h, row, w.m);
            if (!is_zero_vec(e)) extra.push_back(std::move(e));
        }
        if (extra.empty()) break;
        Mat w2 = w;
        for (auto& e : extra) w2.rows.push_back(std::move(e));
        echelonize(w2);
        if (w2.rows == w.rows) break;
        w = std::move(w2);
    }
    // Normalize pivots to divisors of m.
    for (auto& row : w.rows) {
        const std::size_t j = pivot_col(row);
        const u64 g = gcd64(row[j], w.m);
        if (row[j] != g) row = vec_scale(unit_to_gcd(row[j], w.m), row, w.m);
    }
    // Reduce entries above each pivot modulo the pivot.
    for (std::size_t i = 0; i < w.rows.size(); ++i) {
        const std::size_t j = pivot_col(w.rows[i]);
        const u64 d = w.rows[i][j];
        for (std::size_t i2 = 0; i2 < i; ++i2) {
            const u64 c = w.rows[i2][j] / d;
            if (c) w.rows[i2] = vec_sub(w.rows[i2], vec_scale(c, w.rows[i], w.m), w.m);
        }
    }
    return w;
}

bool is_howell(const Mat& a) { return howell(a).rows == a.rows; }

Vec reduce_mod(const Mat& h, Vec v) {
    assert(h.empty() || h.cols == v.size());
    for (const auto& row : h.rows) {
        const std::size_t j = pivot_col(row);
        const u64 d = row[j];
        const u64 c = v[j] / d;
        if (c) v = vec_sub(v, vec_scale(c, row, h.m), h.m);
    }
    return v;
}

bool member(const Mat& h, const Vec& v) { return is_zero_vec(reduce_mod(h, v)); }

namespace {

// Howell form of [a | I]; rows whose left block vanishes span the kernel,
// and left-pivot rows drive solving.
Mat augmented_howell(const Mat& a) {
    Mat aug(a.m, a.cols + a.nrows());
    aug.rows.reserve(a.nrows());
    for (std::size_t i = 0; i < a.nrows(); ++i) {
        Vec r(aug.cols, 0);
        for (std::size_t j = 0; j < a.cols; ++j) r[j] = a.rows[i][j] % a.m;
        r[a.cols + i] = 1 % a.m;
        aug.rows.push_back(std::move(r));
    }
    return howell(aug);
}

}  // namespace

std::optional<Vec> solve_in_span(const Mat& a, const Vec& b) {
    assert(b.size() == a.cols);
    if (a.nrows() == 0) {
        if (is_zero_vec(b) || b.empty()) return Vec(0);
        Vec bb(b);
        for (auto& x : bb) x %= a.m;
        if (is_zero_vec(bb)) return Vec(0);
        return std::nullopt;
    }
    const Mat aug = augmented_howell(a);
    Vec v(b);
    for (auto& x : v) x %= a.m;
    Vec x(a.nrows(), 0);
    for (const auto& row : aug.rows) {
        std::size_t j = 0;
        while (j < a.cols && row[j] == 0) ++j;
        if (j == a.cols) break;  // kernel rows: no left pivot
        const u64 d = row[j];
        const u64 c = v[j] / d;
        if (!c) continue;
        for (std::size_t t = 0; t < a.cols; ++t) v[t] = subm(v[t], mulm(c, row[t], a.m), a.m);
        for (std::size_t t = 0; t < a.nrows(); ++t)
            x[t] = addm(x[t], mulm(c, row[a.cols + t], a.m), a.m);
    }
    if (!is_zero_vec(v)) return std::nullopt;
    return x;
}

Mat kernel(const Mat& a) {
    if (a.nrows() == 0) return Mat(a.m, 0);
    const Mat aug = augmented_howell(a);
    Mat k(a.m, a.nrows());
    for (const auto& row : aug.rows) {
        bool left_zero = true;
        for (std::size_t j = 0; j < a.cols; ++j)
            if (row[j]) {
                left_zero = false;
                break;
            }
        if (!left_zero) continue;
        k.rows.emplace_back(row.begin() + (std::ptrdiff_t)a.cols, row.end());
    }
    return howell(k);
}

Mat span_sum(const Mat& a, const Mat& b) { return howell(vstack(a, b)); }

Mat span_intersect(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return Mat(a.m, a.cols ? a.cols : b.cols);
    const Mat stacked = vstack(a, b);
    const Mat k = kernel(stacked);
    Mat out(a.m, a.cols);
    for (const auto& kr : k.rows) {
        Vec x(a.cols, 0);
        for (std::size_t i = 0; i < a.nrows(); ++i)
            if (kr[i])
                for (std::size_t j = 0; j < a.cols; ++j)
                    x[j] = (x[j] + kr[i] * a.rows[i][j]) % a.m;
        if (!is_zero_vec(x)) out.rows.push_back(std::move(x));
    }
    return howell(out);
}

bool span_contains(const Mat& big_howell, const Mat& other) {
    for (const auto& r : other.rows)
        if (!member(big_howell, r)) return false;
    return true;
}

bool span_equal(const Mat& ha, const Mat& hb) { return ha.rows == hb.rows; }

u64 span_size(const Mat& h) {
    u64 s = 1;
    for (const auto& row : h.rows) s *= h.m / row[pivot_col(row)];
    return s;
}

u64 full_space_size(unsigned m, std::size_t cols) {
    u64 s = 1;
    for (std::size_t i = 0; i < cols; ++i) s *= m;
    return s;
}

unsigned span_p_exponent(const Mat& h, unsigned p) {
    unsigned e = 0;
    for (const auto& row : h.rows) {
        u64 order = h.m / row[pivot_col(row)];
        while (order > 1) {
            order /= p;
            ++e;
        }
    }
    return e;
}

Mat preimage(const Mat& a, const Mat& w, const Mat& domain) {
    assert(a.m == w.m && a.m == domain.m);
    if (domain.nrows() == 0) return Mat(a.m, domain.cols);
    // rows (t | s) with t*(domain*a) + s*w == 0  give  (t*domain)*a in span(w)
    Mat da = mat_mul(domain, a);
    Mat stacked = vstack(da, w);
    Mat k = kernel(stacked);
    Mat out(a.m, domain.cols);
    for (const auto& kr : k.rows) {
        Vec t(kr.begin(), kr.begin() + (std::ptrdiff_t)domain.nrows());
        Vec x = vec_mat(t, domain);
        if (!is_zero_vec(x)) out.rows.push_back(std::move(x));
    }
    return howell(out);
}

bool for_each_coset_rep(const Mat& v, const Mat& u, u64 limit,
                        const std::function<bool(const Vec&)>& emit) {
    const unsigned m = v.m;
    const std::size_t n = v.cols;
    const u64 count = span_size(v) / (u.empty() ? 1 : span_size(u));
    if (limit && count > limit)
        fail(Errc::BoundExceeded, "coset enumeration of size " + std::to_string(count) +
                                      " exceeds limit " + std::to_string(limit));
    if (span_size(v) == full_space_size(m, n)) {
        // Fast path: the reps are exactly the vectors reduced mod u, i.e.
        // entries at a u-pivot column bounded by the pivot, free elsewhere.
        Vec bound(n, m);
        for (const auto& row : u.rows) bound[pivot_col(row)] = row[pivot_col(row)];
        Vec x(n, 0);
        for (;;) {
            if (!emit(x)) return false;
            std::size_t j = n;
            bool advanced = false;
            while (j > 0) {
                --j;
                if (bound[j] <= 1) continue;
                if (++x[j] < bound[j]) {
                    advanced = true;
                    break;
                }
                x[j] = 0;
            }
            if (!advanced) return true;
        }
    }
    // General path: odometer over coefficients of v's Howell rows, reduce
    // mod u, deduplicate keeping first occurrence.
    std::vector<u64> radix(v.nrows());
    for (std::size_t i = 0; i < v.nrows(); ++i)
        radix[i] = m / gcd64(v.rows[i][pivot_col(v.rows[i])], m);
    std::vector<u64> c(v.nrows(), 0);
    std::vector<std::string> seen;
    seen.reserve((std::size_t)std::min<u64>(count * 2, 1u << 20));
    u64 produced = 0;
    for (;;) {
        Vec x(n, 0);
        for (std::size_t i = 0; i < v.nrows(); ++i)
            if (c[i])
                for (std::size_t j = 0; j < n; ++j) x[j] = (x[j] + c[i] * v.rows[i][j]) % m;
        Vec r = u.empty() ? x : reduce_mod(u, x);
        std::string k = vec_key(r);
        auto it = std::lower_bound(seen.begin(), seen.end(), k);
        if (it == seen.end() || *it != k) {
            seen.insert(it, k);
            ++produced;
            if (!emit(r)) return false;
        }
        if (produced == count) return true;
        std::size_t i = v.nrows();
        bool done = true;
        while (i > 0) {
            --i;
            if (++c[i] < radix[i]) {
                done = false;
                break;
            }
            c[i] = 0;
        }
        if (done) return true;
    }
}

std::vector<Vec> coset_reps(const Mat& v, const Mat& u, u64 limit) {
    std::vector<Vec> out;
    for_each_coset_rep(v, u, limit, [&](const Vec& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::MalformedSpec: return "MalformedSpec";
        case Errc::NonAssociative: return "NonAssociative";
        case Errc::BadUnit: return "BadUnit";
        case Errc::CharNotPrimePower: return "CharNotPrimePower";
        case Errc::RingMismatch: return "RingMismatch";
        case Errc::BoundExceeded: return "BoundExceeded";
        case Errc::NotASubmodule: return "NotASubmodule";
        case Errc::IoFailure: return "IoFailure";
        case Errc::VersionMismatch: return "VersionMismatch";
        case Errc::InternalInconsistency: return "InternalInconsistency";
        case Errc::UnknownSelector: return "UnknownSelector";
        case Errc::InapplicableSuite: return "InapplicableSuite";
    }
    return "Unknown";
}

}  // namespace finmod
