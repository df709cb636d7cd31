#include "finmod/module.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <set>

#include <json.hpp>

#include "finmod/errors.hpp"
#include "finmod/memo.hpp"

namespace finmod {

struct ModuleDerived {
    std::mutex mu;
    bool has_gens = false;
    std::vector<Vec> gens;
    bool has_presk = false;
    Mat presk;
    bool has_elements = false;
    std::vector<Vec> elems;
    bool has_socle = false;
    Mat socle_span;
    bool has_radical = false;
    Mat radical_span;
    int length = -1;
    bool has_abelian = false;
    std::vector<u64> abelian;
    bool has_invhash = false;
    u64 invhash = 0;
    bool has_lattice = false;
    std::vector<Mat> lattice;
};

namespace {

constexpr u64 kElementCacheLimit = 1u << 16;

std::string make_key(const FiniteRing& ring, unsigned n, const Mat& v, const Mat& u) {
    return "M|" + ring.hash_hex() + "|" + std::to_string(n) + "|" + mat_key(v) + "|" + mat_key(u);
}

// The memo keeps the entry alive for the whole process, so the reference
// stays valid; equal-content modules share one entry.
ModuleDerived& derived(const FiniteModule& m) {
    auto p = memo().memo_ptr<ModuleDerived>(
        "der|" + m.key(), []() { return std::make_shared<ModuleDerived>(); });
    return *p;
}

Mat close_under_action(const RingPtr& ring, unsigned n, const std::vector<Vec>& gens) {
    Mat rows((unsigned)ring->m, (std::size_t)n * ring->rank);
    for (const auto& g : gens) {
        assert(g.size() == rows.cols);
        for (unsigned a = 0; a < ring->rank; ++a) {
            Vec img(rows.cols, 0);
            for (unsigned i = 0; i < n; ++i) {
                const Mat& rm = ring->right_mul[a];
                for (unsigned b = 0; b < ring->rank; ++b) {
                    const u64 x = g[(std::size_t)i * ring->rank + b] % ring->m;
                    if (!x) continue;
                    for (unsigned l = 0; l < ring->rank; ++l) {
                        auto& dst = img[(std::size_t)i * ring->rank + l];
                        dst = (dst + x * rm.rows[b][l]) % ring->m;
                    }
                }
            }
            rows.rows.push_back(std::move(img));
        }
    }
    return howell(rows);
}

bool closed_under_action(const FiniteModule& m, const Mat& span) {
    for (const auto& r : span.rows)
        for (unsigned a = 0; a < m.ring->rank; ++a)
            if (!member(span, act_basis(m, r, a))) return false;
    return true;
}

}  // namespace

bool same_ring(const FiniteModule& a, const FiniteModule& b) {
    return a.ring == b.ring || a.ring->same_as(*b.ring);
}

void require_same_ring(const FiniteModule& a, const FiniteModule& b) {
    if (!same_ring(a, b))
        fail(Errc::RingMismatch, a.ring->name + " vs " + b.ring->name);
}

bool module_eq(const FiniteModule& a, const FiniteModule& b) {
    return same_ring(a, b) && a.n == b.n && a.V.rows == b.V.rows && a.U.rows == b.U.rows;
}

FiniteModule module_from_canonical(RingPtr ring, unsigned n, Mat v, Mat u) {
    FiniteModule m;
    m.ring = std::move(ring);
    m.n = n;
    v.m = m.ring->m;
    u.m = m.ring->m;
    v.cols = (std::size_t)n * m.ring->rank;
    u.cols = v.cols;
    m.V = std::move(v);
    m.U = std::move(u);
    m.key_ = std::make_shared<const std::string>(make_key(*m.ring, n, m.V, m.U));
    return m;
}

FiniteModule make_module(RingPtr ring, unsigned n, const std::vector<Vec>& gens_v,
                         const std::vector<Vec>& gens_u) {
    Mat v = close_under_action(ring, n, gens_v);
    Mat u = close_under_action(ring, n, gens_u);
    if (!span_contains(v, u)) fail(Errc::NotASubmodule, "U is not contained in V");
    return module_from_canonical(std::move(ring), n, std::move(v), std::move(u));
}

FiniteModule zero_module(RingPtr ring) {
    unsigned m = ring->m;
    return module_from_canonical(std::move(ring), 0, Mat(m, 0), Mat(m, 0));
}

FiniteModule free_module(RingPtr ring, unsigned g) {
    const std::size_t nd = (std::size_t)g * ring->rank;
    Mat v = Mat::identity(ring->m, nd);
    Mat u(ring->m, nd);
    return module_from_canonical(std::move(ring), g, std::move(v), std::move(u));
}

FiniteModule regular_module(RingPtr ring) { return free_module(std::move(ring), 1); }

Vec act_basis(const FiniteModule& m, const Vec& x, unsigned a) {
    const auto& ring = *m.ring;
    const unsigned d = ring.rank;
    Vec out(x.size(), 0);
    const Mat& rm = ring.right_mul[a];
    for (unsigned i = 0; i < m.n; ++i)
        for (unsigned b = 0; b < d; ++b) {
            const u64 c = x[(std::size_t)i * d + b];
            if (!c) continue;
            for (unsigned l = 0; l < d; ++l) {
                auto& dst = out[(std::size_t)i * d + l];
                dst = (dst + c * rm.rows[b][l]) % ring.m;
            }
        }
    return out;
}

Vec act_elem_ambient(const RingPtr& ring, unsigned n, const Vec& x, const Vec& r) {
    const unsigned d = ring->rank;
    const Mat rm = right_mul_of(*ring, r);
    Vec out(x.size(), 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned b = 0; b < d; ++b) {
            const u64 c = x[(std::size_t)i * d + b];
            if (!c) continue;
            for (unsigned l = 0; l < d; ++l) {
                auto& dst = out[(std::size_t)i * d + l];
                dst = (dst + c * rm.rows[b][l]) % ring->m;
            }
        }
    return out;
}

Vec act(const FiniteModule& m, const Vec& x, const Vec& r) {
    return reduce_mod(m.U, act_elem_ambient(m.ring, m.n, x, r));
}

Mat cyclic_span(const FiniteModule& m, const Vec& x) {
    Mat rows(m.ring->m, m.zdim());
    for (unsigned a = 0; a < m.ring->rank; ++a) rows.rows.push_back(act_basis(m, x, a));
    return span_sum(rows, m.U);
}

const std::vector<Vec>& elements(const FiniteModule& m) {
    auto& d = derived(m);
    std::lock_guard<std::mutex> lk(d.mu);
    if (!d.has_elements) {
        if (m.size() > kElementCacheLimit)
            fail(Errc::BoundExceeded,
                 "module of size " + std::to_string(m.size()) + " too large to enumerate");
        d.elems = coset_reps(m.V, m.U, kElementCacheLimit);
        d.has_elements = true;
    }
    return d.elems;
}

void for_each_element(const FiniteModule& m, const std::function<bool(const Vec&)>& emit) {
    for_each_coset_rep(m.V, m.U, 0, emit);
}

namespace {

bool is_free(const FiniteModule& m) {
    return m.U.rows.empty() && span_size(m.V) == full_space_size(m.ring->m, m.zdim());
}

std::vector<Vec> compute_min_generators(const FiniteModule& m) {
    const auto& ring = *m.ring;
    if (is_free(m)) {
        std::vector<Vec> gens;
        for (unsigned i = 0; i < m.n; ++i) {
            Vec g(m.zdim(), 0);
            for (unsigned b = 0; b < ring.rank; ++b) g[(std::size_t)i * ring.rank + b] = ring.unit[b];
            gens.push_back(std::move(g));
        }
        return gens;
    }
    const Mat rad = radical(m).span;
    if (span_equal(rad, m.V)) return {};  // zero module (Nakayama)
    FiniteModule top = module_from_canonical(m.ring, m.n, m.V, rad);
    const auto& top_elems = elements(top);
    std::vector<Vec> chosen;
    Mat cur = rad;
    while (!span_equal(cur, m.V)) {
        std::size_t best = 0;
        u64 best_size = 0;
        for (std::size_t i = 1; i < top_elems.size(); ++i) {
            const Vec& x = top_elems[i];
            if (member(cur, x)) continue;
            const u64 s = span_size(span_sum(cur, cyclic_span(top, x)));
            if (s > best_size) {
                best_size = s;
                best = i;
            }
        }
        assert(best != 0);
        cur = span_sum(cur, cyclic_span(top, top_elems[best]));
        chosen.push_back(reduce_mod(m.U, top_elems[best]));
    }
    return chosen;
}

}  // namespace

const std::vector<Vec>& min_generators(const FiniteModule& m) {
    auto& d = derived(m);
    {
        std::lock_guard<std::mutex> lk(d.mu);
        if (d.has_gens) return d.gens;
    }
    auto gens = compute_min_generators(m);
    std::lock_guard<std::mutex> lk(d.mu);
    if (!d.has_gens) {
        d.gens = std::move(gens);
        d.has_gens = true;
    }
    return d.gens;
}

namespace {

// Rows (i, a) of the map (Z/m)^{g*d} -> ambient, t -> sum_i gens[i] * t_i.
Mat presentation_matrix(const FiniteModule& m, const std::vector<Vec>& gens) {
    Mat phi(m.ring->m, m.zdim());
    for (const auto& g : gens)
        for (unsigned a = 0; a < m.ring->rank; ++a) phi.rows.push_back(act_basis(m, g, a));
    return phi;
}

}  // namespace

const Mat& presentation_kernel(const FiniteModule& m) {
    auto& d = derived(m);
    {
        std::lock_guard<std::mutex> lk(d.mu);
        if (d.has_presk) return d.presk;
    }
    const auto& gens = min_generators(m);
    Mat phi = presentation_matrix(m, gens);
    Mat k = phi.rows.empty() ? Mat(m.ring->m, 0)
                             : preimage(phi, m.U, Mat::identity(m.ring->m, phi.nrows()));
    std::lock_guard<std::mutex> lk(d.mu);
    if (!d.has_presk) {
        d.presk = std::move(k);
        d.has_presk = true;
    }
    return d.presk;
}

Vec express(const FiniteModule& m, const Vec& x) {
    if (is_free(m)) return x;
    const auto& gens = min_generators(m);
    const std::size_t gd = gens.size() * m.ring->rank;
    Mat sys = presentation_matrix(m, gens);
    for (const auto& r : m.U.rows) sys.rows.push_back(r);
    auto sol = solve_in_span(sys, x);
    if (!sol) fail(Errc::InternalInconsistency, "express: element not in module");
    Vec t(sol->begin(), sol->begin() + (std::ptrdiff_t)gd);
    return t;
}

SubmoduleHandle submodule_from_gens(const FiniteModule& m, const std::vector<Vec>& gens) {
    Mat orbit(m.ring->m, m.zdim());
    for (const auto& g : gens)
        for (unsigned a = 0; a < m.ring->rank; ++a) orbit.rows.push_back(act_basis(m, g, a));
    Mat w = span_sum(orbit, m.U);
    if (!span_contains(m.V, w)) fail(Errc::NotASubmodule, "generators not inside the module");
    return SubmoduleHandle{m, std::move(w)};
}

SubmoduleHandle zero_submodule(const FiniteModule& m) { return SubmoduleHandle{m, m.U}; }
SubmoduleHandle full_submodule(const FiniteModule& m) { return SubmoduleHandle{m, m.V}; }

FiniteModule submodule_as_module(const SubmoduleHandle& h) {
    return module_from_canonical(h.parent.ring, h.parent.n, h.span, h.parent.U);
}

bool handle_eq(const SubmoduleHandle& a, const SubmoduleHandle& b) {
    return module_eq(a.parent, b.parent) && a.span.rows == b.span.rows;
}

std::vector<SubmoduleHandle> submodules(const FiniteModule& m, u64 max_elems) {
    if (m.size() > max_elems)
        fail(Errc::BoundExceeded, "submodule lattice of module of size " +
                                      std::to_string(m.size()) + " exceeds bound " +
                                      std::to_string(max_elems));
    auto& d = derived(m);
    {
        std::lock_guard<std::mutex> lk(d.mu);
        if (d.has_lattice) {
            std::vector<SubmoduleHandle> out;
            out.reserve(d.lattice.size());
            for (const auto& w : d.lattice) out.push_back(SubmoduleHandle{m, w});
            return out;
        }
    }
    // cyclic submodules, then close under adding one cyclic at a time
    std::vector<Mat> cyclics;
    std::set<std::string> seen;
    seen.insert(mat_key(m.U));
    cyclics.push_back(m.U);
    for (const auto& x : elements(m)) {
        if (is_zero_vec(x)) continue;
        Mat c = cyclic_span(m, x);
        if (seen.insert(mat_key(c)).second) cyclics.push_back(std::move(c));
    }
    std::vector<Mat> lattice = cyclics;
    std::vector<Mat> frontier = cyclics;
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const auto& s : frontier)
            for (const auto& c : cyclics) {
                Mat f = span_sum(s, c);
                if (seen.insert(mat_key(f)).second) {
                    lattice.push_back(f);
                    next.push_back(std::move(f));
                }
            }
        frontier = std::move(next);
    }
    std::sort(lattice.begin(), lattice.end(), [](const Mat& a, const Mat& b) {
        const u64 sa = span_size(a), sb = span_size(b);
        if (sa != sb) return sa < sb;
        return a.rows < b.rows;
    });
    {
        std::lock_guard<std::mutex> lk(d.mu);
        if (!d.has_lattice) {
            d.lattice = lattice;
            d.has_lattice = true;
        }
    }
    std::vector<SubmoduleHandle> out;
    out.reserve(lattice.size());
    for (auto& w : lattice) out.push_back(SubmoduleHandle{m, std::move(w)});
    return out;
}

std::pair<FiniteModule, ModuleHom> quotient(const FiniteModule& m, const SubmoduleHandle& u) {
    if (!module_eq(u.parent, m)) fail(Errc::NotASubmodule, "handle belongs to another module");
    if (!span_contains(m.V, u.span) || !span_contains(u.span, m.U))
        fail(Errc::NotASubmodule, "quotient by a non-submodule");
    FiniteModule q = module_from_canonical(m.ring, m.n, m.V, u.span);
    ModuleHom pi;
    pi.source = m;
    pi.target = q;
    for (const auto& g : min_generators(m)) pi.images.push_back(reduce_mod(q.U, g));
    return {std::move(q), std::move(pi)};
}

namespace {

Vec pad_vec(const Vec& x, std::size_t before, std::size_t after) {
    Vec out(before, 0);
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), after, 0);
    return out;
}

Mat pad_rows(const Mat& a, std::size_t before, std::size_t after, unsigned m) {
    Mat out(m, a.cols + before + after);
    for (const auto& r : a.rows) out.rows.push_back(pad_vec(r, before, after));
    return out;
}

}  // namespace

FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b) {
    require_same_ring(a, b);
    const std::size_t za = a.zdim(), zb = b.zdim();
    Mat v = howell(vstack(pad_rows(a.V, 0, zb, a.ring->m), pad_rows(b.V, za, 0, a.ring->m)));
    Mat u = howell(vstack(pad_rows(a.U, 0, zb, a.ring->m), pad_rows(b.U, za, 0, a.ring->m)));
    FiniteModule s = module_from_canonical(a.ring, a.n + b.n, std::move(v), std::move(u));
    // remember the factors so isomorphism-class lookups can use uniqueness
    // of direct-sum decompositions instead of a hom search; a summand of
    // ambient rank zero reproduces the other factor bit-identically, which
    // must not be recorded as a decomposition of itself
    if (s.key() != a.key() && s.key() != b.key())
        memo().store_ptr_if_absent("sumfac|" + s.key(),
                                   std::make_shared<std::pair<FiniteModule, FiniteModule>>(a, b));
    return s;
}

FiniteModule direct_sum_power(const FiniteModule& a, unsigned t) {
    FiniteModule s = zero_module(a.ring);
    for (unsigned i = 0; i < t; ++i) s = direct_sum(s, a);
    return s;
}

ModuleHom direct_sum_injection(const FiniteModule& a, const FiniteModule& b, int which) {
    FiniteModule s = direct_sum(a, b);
    const FiniteModule& src = which == 0 ? a : b;
    const std::size_t before = which == 0 ? 0 : a.zdim();
    const std::size_t after = which == 0 ? b.zdim() : 0;
    ModuleHom h;
    h.source = src;
    h.target = s;
    for (const auto& g : min_generators(src)) h.images.push_back(reduce_mod(s.U, pad_vec(g, before, after)));
    return h;
}

ModuleHom direct_sum_projection(const FiniteModule& a, const FiniteModule& b, int which) {
    FiniteModule s = direct_sum(a, b);
    const FiniteModule& tgt = which == 0 ? a : b;
    const std::size_t off = which == 0 ? 0 : a.zdim();
    ModuleHom h;
    h.source = s;
    h.target = tgt;
    for (const auto& g : min_generators(s)) {
        Vec part(g.begin() + (std::ptrdiff_t)off, g.begin() + (std::ptrdiff_t)(off + tgt.zdim()));
        h.images.push_back(reduce_mod(tgt.U, part));
    }
    return h;
}

SubmoduleHandle socle(const FiniteModule& m) {
    auto& d = derived(m);
    {
        std::lock_guard<std::mutex> lk(d.mu);
        if (d.has_socle) return SubmoduleHandle{m, d.socle_span};
    }
    const Mat& j = jacobson_radical_basis(m.ring);
    Mat s = m.V;
    for (const auto& jrow : j.rows) {
        // {x in s : x * j in U}
        Mat amb(m.ring->m, m.zdim());
        amb.rows.reserve(m.zdim());
        for (std::size_t c = 0; c < m.zdim(); ++c) {
            Vec unit(m.zdim(), 0);
            unit[c] = 1;
            amb.rows.push_back(act_elem_ambient(m.ring, m.n, unit, jrow));
        }
        s = preimage(amb, m.U, s);
    }
    s = span_sum(s, m.U);
    std::lock_guard<std::mutex> lk(d.mu);
    if (!d.has_socle) {
        d.socle_span = s;
        d.has_socle = true;
    }
    return SubmoduleHandle{m, d.socle_span};
}

SubmoduleHandle radical(const FiniteModule& m) {
    auto& d = derived(m);
    {
        std::lock_guard<std::mutex> lk(d.mu);
        if (d.has_radical) return SubmoduleHandle{m, d.radical_span};
    }
    const Mat& j = jacobson_radical_basis(m.ring);
    Mat rows(m.ring->m, m.zdim());
    for (const auto& v : m.V.rows)
        for (const auto& jrow : j.rows)
            rows.rows.push_back(act_elem_ambient(m.ring, m.n, v, jrow));
    Mat r = span_sum(rows, m.U);
    std::lock_guard<std::mutex> lk(d.mu);
    if (!d.has_radical) {
        d.radical_span = r;
        d.has_radical = true;
    }
    return SubmoduleHandle{m, d.radical_span};
}

namespace {

// The whole span is one simple submodule?  Minimize a cyclic submodule by
// descent; returns the span of a simple submodule of m (m nonzero).
Mat find_simple_sub(const FiniteModule& m) {
    const FiniteModule soc_mod = submodule_as_module(socle(m));
    const auto& el = elements(soc_mod);
    assert(el.size() > 1);
    Mat c = cyclic_span(m, el[1]);
    for (;;) {
        FiniteModule cm = module_from_canonical(m.ring, m.n, c, m.U);
        bool shrunk = false;
        for (const auto& y : elements(cm)) {
            if (is_zero_vec(y)) continue;
            Mat d2 = cyclic_span(m, y);
            if (span_size(d2) < span_size(c)) {
                c = std::move(d2);
                shrunk = true;
                break;
            }
        }
        if (!shrunk) return c;
    }
}

}  // namespace

unsigned comp_length(const FiniteModule& m) {
    auto& d = derived(m);
    {
        std::lock_guard<std::mutex> lk(d.mu);
        if (d.length >= 0) return (unsigned)d.length;
    }
    unsigned len = 0;
    FiniteModule cur = m;
    while (cur.size() > 1) {
        Mat s = find_simple_sub(cur);
        cur = module_from_canonical(cur.ring, cur.n, cur.V, std::move(s));
        ++len;
    }
    std::lock_guard<std::mutex> lk(d.mu);
    d.length = (int)len;
    return len;
}

bool is_cyclic(const FiniteModule& m) { return min_generators(m).size() <= 1; }
bool is_simple(const FiniteModule& m) { return m.size() > 1 && comp_length(m) == 1; }
bool is_semisimple(const FiniteModule& m) { return span_equal(socle(m).span, m.V); }

bool is_essential(const SubmoduleHandle& u, const FiniteModule& m) {
    if (!module_eq(u.parent, m)) fail(Errc::NotASubmodule, "handle belongs to another module");
    if (m.size() == 1) return true;
    if (u.size() == 1) return false;
    return span_contains(u.span, socle(m).span);
}

StructuralInvariants structural_invariants(const FiniteModule& m) {
    StructuralInvariants si;
    si.size = m.size();
    si.length = comp_length(m);
    si.socle = socle(m);
    si.radical = radical(m);
    si.min_generator_count = (unsigned)min_generators(m).size();
    si.is_cyclic = si.min_generator_count <= 1;
    si.is_simple = si.length == 1;
    si.is_semisimple = span_equal(si.socle.span, m.V);
    return si;
}

std::vector<u64> abelian_type_of_span(const Mat& v, const Mat& u, unsigned p, unsigned k) {
    const unsigned m = v.m;
    // exponent arithmetic: coefficient spaces can exceed 64 bits
    const unsigned ue = span_p_exponent(howell(u), p);
    std::vector<unsigned> r(k + 2, 0);  // r[i] = #invariant factors with exponent >= i
    unsigned prev = 0;                  // exponent of the previous torsion subgroup
    for (unsigned i = 1; i <= k; ++i) {
        u64 pi = 1;
        for (unsigned t = 0; t < i; ++t) pi *= p;
        Mat scaled(m, v.cols);
        for (std::size_t c = 0; c < v.cols; ++c) {
            Vec row(v.cols, 0);
            row[c] = pi % m;
            scaled.rows.push_back(std::move(row));
        }
        const unsigned tors = span_p_exponent(preimage(scaled, u, v), p) - ue;
        r[i] = tors - prev;
        prev = tors;
    }
    std::vector<u64> type;
    for (unsigned i = k; i >= 1; --i) {
        const unsigned exactly = r[i] - r[i + 1];
        u64 pi = 1;
        for (unsigned t = 0; t < i; ++t) pi *= p;
        for (unsigned c = 0; c < exactly; ++c) type.push_back(pi);
    }
    return type;
}

const std::vector<u64>& abelian_type(const FiniteModule& m) {
    auto& d = derived(m);
    {
        std::lock_guard<std::mutex> lk(d.mu);
        if (d.has_abelian) return d.abelian;
    }
    unsigned p = 0, k = 0;
    is_prime_power(m.ring->m, &p, &k);
    auto type = abelian_type_of_span(m.V, m.U, p, k);
    std::lock_guard<std::mutex> lk(d.mu);
    if (!d.has_abelian) {
        d.abelian = std::move(type);
        d.has_abelian = true;
    }
    return d.abelian;
}

u64 inv_hash(const FiniteModule& m) {
    auto& d = derived(m);
    {
        std::lock_guard<std::mutex> lk(d.mu);
        if (d.has_invhash) return d.invhash;
    }
    std::string s = "sz" + std::to_string(m.size());
    s += "|len" + std::to_string(comp_length(m));
    s += "|g" + std::to_string(min_generators(m).size());
    s += "|ab";
    for (u64 t : abelian_type(m)) s += std::to_string(t) + ".";
    const FiniteModule soc_m = submodule_as_module(socle(m));
    s += "|soc" + std::to_string(soc_m.size());
    s += ",";
    for (u64 t : abelian_type(soc_m)) s += std::to_string(t) + ".";
    const FiniteModule rad_m = submodule_as_module(radical(m));
    s += "|rad" + std::to_string(rad_m.size());
    FiniteModule top = module_from_canonical(m.ring, m.n, m.V, radical(m).span);
    s += "|top" + std::to_string(top.size());
    s += ",";
    for (u64 t : abelian_type(top)) s += std::to_string(t) + ".";
    const u64 h = fnv1a(s);
    std::lock_guard<std::mutex> lk(d.mu);
    d.invhash = h;
    d.has_invhash = true;
    return h;
}

const Mat& jacobson_radical_basis(const RingPtr& ring) {
    const std::string key = "jrad|" + ring->hash_hex();
    auto p = memo().memo_ptr<Mat>(key, [&]() {
        FiniteModule rr = regular_module(ring);
        auto subs = submodules(rr);
        // maximal proper submodules
        std::vector<const Mat*> maximal;
        for (const auto& a : subs) {
            if (span_equal(a.span, rr.V)) continue;
            bool is_max = true;
            for (const auto& b : subs) {
                if (span_equal(b.span, rr.V) || span_equal(b.span, a.span)) continue;
                if (span_size(b.span) > span_size(a.span) && span_contains(b.span, a.span)) {
                    is_max = false;
                    break;
                }
            }
            if (is_max) maximal.push_back(&a.span);
        }
        Mat j = rr.V;
        for (const Mat* mx : maximal) j = span_intersect(j, *mx);
        return std::make_shared<Mat>(std::move(j));
    });
    return *p;
}

SubmoduleHandle jacobson_radical(const RingPtr& ring) {
    FiniteModule rr = regular_module(ring);
    return SubmoduleHandle{rr, jacobson_radical_basis(ring)};
}

std::string module_json(const FiniteModule& m) {
    nlohmann::ordered_json j;
    j["ring"] = m.ring->name;
    j["n"] = m.n;
    j["V"] = m.V.rows;
    j["U"] = m.U.rows;
    return j.dump();
}

FiniteModule module_from_json(const RingPtr& ring, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        unsigned n = j.at("n").get<unsigned>();
        auto vrows = j.at("V").get<std::vector<Vec>>();
        auto urows = j.at("U").get<std::vector<Vec>>();
        const std::size_t cols = (std::size_t)n * ring->rank;
        Mat v = howell(Mat::from_rows(ring->m, cols, std::move(vrows)));
        Mat u = howell(Mat::from_rows(ring->m, cols, std::move(urows)));
        if (!span_contains(v, u)) fail(Errc::MalformedSpec, "module document: U not inside V");
        FiniteModule m = module_from_canonical(ring, n, std::move(v), std::move(u));
        if (!closed_under_action(m, m.V) || !closed_under_action(m, m.U))
            fail(Errc::MalformedSpec, "module document: spans not closed under the ring action");
        return m;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(Errc::MalformedSpec, std::string("bad module document: ") + e.what());
    }
}

}  // namespace finmod
