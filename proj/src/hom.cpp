#include "finmod/hom.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <set>

#include "finmod/errors.hpp"
#include "finmod/memo.hpp"

namespace finmod {

namespace {

// images of the source generators under t: block i of t holds coefficients
// over the target's Howell basis
std::vector<Vec> decode_images(const FiniteModule& src, const FiniteModule& tgt, const Vec& t) {
    const std::size_t g = min_generators(src).size();
    const std::size_t kb = tgt.V.nrows();
    std::vector<Vec> images;
    images.reserve(g);
    for (std::size_t i = 0; i < g; ++i) {
        Vec img(tgt.zdim(), 0);
        for (std::size_t s = 0; s < kb; ++s) {
            const u64 c = t[i * kb + s];
            if (!c) continue;
            for (std::size_t j = 0; j < tgt.zdim(); ++j)
                img[j] = (img[j] + c * tgt.V.rows[s][j]) % tgt.V.m;
        }
        images.push_back(reduce_mod(tgt.U, img));
    }
    return images;
}

Vec flatten(const std::vector<Vec>& images, std::size_t zdim) {
    Vec out;
    out.reserve(images.size() * zdim);
    for (const auto& v : images) out.insert(out.end(), v.begin(), v.end());
    return out;
}

// Block-diagonal copies of `inner`, `blocks` times.
Mat block_diag(const Mat& inner, std::size_t blocks) {
    Mat out(inner.m, inner.cols * blocks);
    for (std::size_t b = 0; b < blocks; ++b)
        for (const auto& r : inner.rows) {
            Vec row(out.cols, 0);
            std::copy(r.begin(), r.end(), row.begin() + (std::ptrdiff_t)(b * inner.cols));
            out.rows.push_back(std::move(row));
        }
    return out;
}

}  // namespace

bool hom_is_valid(const ModuleHom& h) {
    const auto& gens = min_generators(h.source);
    if (h.images.size() != gens.size()) return false;
    for (const auto& img : h.images)
        if (!member(h.target.V, img) || reduce_mod(h.target.U, img) != img) return false;
    const Mat& k = presentation_kernel(h.source);
    const unsigned d = h.source.ring->rank;
    for (const auto& rel : k.rows) {
        Vec acc(h.target.zdim(), 0);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Vec r(rel.begin() + (std::ptrdiff_t)(i * d), rel.begin() + (std::ptrdiff_t)((i + 1) * d));
            acc = vec_add(acc, act_elem_ambient(h.target.ring, h.target.n, h.images[i], r),
                          h.target.ring->m);
        }
        if (!member(h.target.U, acc)) return false;
    }
    return true;
}

ModuleHom make_hom(FiniteModule source, FiniteModule target, std::vector<Vec> images) {
    require_same_ring(source, target);
    ModuleHom h;
    h.source = std::move(source);
    h.target = std::move(target);
    for (auto& img : images) img = reduce_mod(h.target.U, img);
    h.images = std::move(images);
    if (!hom_is_valid(h))
        fail(Errc::InternalInconsistency, "assignment does not define an R-linear map");
    return h;
}

ModuleHom identity_hom(const FiniteModule& m) {
    ModuleHom h;
    h.source = m;
    h.target = m;
    for (const auto& g : min_generators(m)) h.images.push_back(reduce_mod(m.U, g));
    return h;
}

ModuleHom zero_hom(const FiniteModule& src, const FiniteModule& tgt) {
    require_same_ring(src, tgt);
    ModuleHom h;
    h.source = src;
    h.target = tgt;
    h.images.assign(min_generators(src).size(), Vec(tgt.zdim(), 0));
    return h;
}

ModuleHom inclusion_hom(const SubmoduleHandle& sub) {
    FiniteModule w = submodule_as_module(sub);
    ModuleHom h;
    h.source = w;
    h.target = sub.parent;
    for (const auto& g : min_generators(w)) h.images.push_back(reduce_mod(sub.parent.U, g));
    return h;
}

Vec hom_apply(const ModuleHom& h, const Vec& x) {
    const Vec t = express(h.source, x);
    const unsigned d = h.source.ring->rank;
    Vec acc(h.target.zdim(), 0);
    for (std::size_t i = 0; i < h.images.size(); ++i) {
        Vec r(t.begin() + (std::ptrdiff_t)(i * d), t.begin() + (std::ptrdiff_t)((i + 1) * d));
        acc = vec_add(acc, act_elem_ambient(h.target.ring, h.target.n, h.images[i], r),
                      h.target.ring->m);
    }
    return reduce_mod(h.target.U, acc);
}

ModuleHom hom_compose(const ModuleHom& g, const ModuleHom& f) {
    assert(module_eq(f.target, g.source));
    ModuleHom h;
    h.source = f.source;
    h.target = g.target;
    for (const auto& img : f.images) h.images.push_back(hom_apply(g, img));
    return h;
}

Mat hom_image(const ModuleHom& h) {
    Mat rows(h.target.ring->m, h.target.zdim());
    for (const auto& img : h.images)
        for (unsigned a = 0; a < h.target.ring->rank; ++a)
            rows.rows.push_back(act_basis(h.target, img, a));
    return span_sum(rows, h.target.U);
}

Mat hom_kernel(const ModuleHom& h) {
    // parametrize x = t * V_src; the map t -> h(x) is linear
    const auto& src = h.source;
    Mat applied(src.ring->m, h.target.zdim());
    for (const auto& v : src.V.rows) applied.rows.push_back(hom_apply(h, reduce_mod(src.U, v)));
    Mat kt = preimage(applied, h.target.U, Mat::identity(src.ring->m, src.V.nrows()));
    Mat out(src.ring->m, src.zdim());
    for (const auto& t : kt.rows) out.rows.push_back(vec_mat(t, src.V));
    return span_sum(out, src.U);
}

bool hom_injective(const ModuleHom& h) { return span_equal(hom_kernel(h), howell(h.source.U)); }
bool hom_surjective(const ModuleHom& h) { return span_equal(hom_image(h), h.target.V); }

bool hom_is_zero(const ModuleHom& h) {
    for (const auto& img : h.images)
        if (!is_zero_vec(img)) return false;
    return true;
}

Vec hom_value_tuple(const ModuleHom& h) { return flatten(h.images, h.target.zdim()); }

HomSetPtr hom_set(const FiniteModule& a, const FiniteModule& b) {
    require_same_ring(a, b);
    const std::string key = "homset|" + a.key() + "|" + b.key();
    return memo().memo_ptr<const HomSet>(key, [&]() -> std::shared_ptr<const HomSet> {
        auto hs = std::make_shared<HomSet>();
        hs->source = a;
        hs->target = b;
        const auto& gens = min_generators(a);
        const std::size_t g = gens.size();
        const std::size_t kb = b.V.nrows();
        const unsigned m = a.ring->m;
        const unsigned d = a.ring->rank;
        const std::size_t tdim = g * kb;
        if (tdim == 0) {
            hs->T = g == 0 ? Mat(m, 0) : Mat(m, tdim);
            hs->T0 = Mat(m, tdim);
            hs->size = 1;
            return hs;
        }
        const Mat& presk = presentation_kernel(a);
        // constraint map: t -> concat over relations of sum_i (t_i V_b) * rel_i
        Mat cmap(m, presk.nrows() * b.zdim());
        cmap.rows.assign(tdim, Vec(cmap.cols, 0));
        for (std::size_t rel = 0; rel < presk.nrows(); ++rel) {
            for (std::size_t i = 0; i < g; ++i) {
                Vec r(presk.rows[rel].begin() + (std::ptrdiff_t)(i * d),
                      presk.rows[rel].begin() + (std::ptrdiff_t)((i + 1) * d));
                if (is_zero_vec(r)) continue;
                for (std::size_t s = 0; s < kb; ++s) {
                    const Vec img = act_elem_ambient(b.ring, b.n, b.V.rows[s], r);
                    for (std::size_t c = 0; c < b.zdim(); ++c) {
                        auto& dst = cmap.rows[i * kb + s][rel * b.zdim() + c];
                        dst = addm(dst, img[c], m);
                    }
                }
            }
        }
        const Mat wanted = block_diag(b.U, presk.nrows());
        hs->T = presk.nrows() == 0 ? howell(Mat::identity(m, tdim))
                                   : preimage(cmap, wanted, Mat::identity(m, tdim));
        // T0: all generator images land in U_b
        Mat vmap(m, g * b.zdim());
        vmap.rows.assign(tdim, Vec(vmap.cols, 0));
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t s = 0; s < kb; ++s)
                for (std::size_t c = 0; c < b.zdim(); ++c)
                    vmap.rows[i * kb + s][i * b.zdim() + c] = b.V.rows[s][c];
        hs->T0 = preimage(vmap, block_diag(b.U, g), hs->T);
        // coefficient spans can exceed 64 bits; only the quotient is small
        unsigned p = 0, kexp = 0;
        is_prime_power(m, &p, &kexp);
        const unsigned size_exp = span_p_exponent(hs->T, p) - span_p_exponent(hs->T0, p);
        hs->size = 1;
        for (unsigned i = 0; i < size_exp; ++i) hs->size *= p;
        hs->orders = abelian_type_of_span(hs->T, hs->T0, p, kexp);
        for (const auto& t : hs->T.rows) {
            ModuleHom h;
            h.source = a;
            h.target = b;
            h.images = decode_images(a, b, t);
            if (!hom_is_zero(h)) hs->basis.push_back(std::move(h));
        }
        return hs;
    });
}

ModuleHom decode_hom(const HomSet& hs, const Vec& t) {
    ModuleHom h;
    h.source = hs.source;
    h.target = hs.target;
    h.images = decode_images(hs.source, hs.target, t);
    return h;
}

bool hom_member(const HomSet& hs, const ModuleHom& h) {
    // value tuples of T rows + U-noise span all achievable tuples
    const std::size_t z = hs.target.zdim();
    const std::size_t g = min_generators(hs.source).size();
    Mat span(hs.target.ring->m, g * z);
    for (const auto& t : hs.T.rows)
        span.rows.push_back(flatten(decode_images(hs.source, hs.target, t), z));
    Mat h2 = span_sum(span, block_diag(hs.target.U, g));
    return member(h2, hom_value_tuple(h));
}

bool enumerate_homs(const HomSet& hs, u64 guard,
                    const std::function<bool(const ModuleHom&)>& visit) {
    if (guard && hs.size > guard)
        fail(Errc::BoundExceeded, "hom group of size " + std::to_string(hs.size) + " over guard");
    const std::size_t z = hs.target.zdim();
    const std::size_t g = min_generators(hs.source).size();
    std::vector<Vec> gen_tuples;
    for (const auto& bh : hs.basis) gen_tuples.push_back(hom_value_tuple(bh));
    std::set<std::string> seen;
    std::deque<Vec> queue;
    Vec zero(g * z, 0);
    seen.insert(vec_key(zero));
    queue.push_back(zero);
    u64 visited = 0;
    while (!queue.empty()) {
        Vec cur = std::move(queue.front());
        queue.pop_front();
        ModuleHom h;
        h.source = hs.source;
        h.target = hs.target;
        for (std::size_t i = 0; i < g; ++i)
            h.images.emplace_back(cur.begin() + (std::ptrdiff_t)(i * z),
                                  cur.begin() + (std::ptrdiff_t)((i + 1) * z));
        ++visited;
        if (!visit(h)) return false;
        for (const auto& gt : gen_tuples) {
            Vec nxt(cur.size());
            for (std::size_t i = 0; i < g; ++i) {
                Vec blk(z);
                for (std::size_t c = 0; c < z; ++c)
                    blk[c] = addm(cur[i * z + c], gt[i * z + c], hs.target.ring->m);
                Vec red = reduce_mod(hs.target.U, blk);
                std::copy(red.begin(), red.end(), nxt.begin() + (std::ptrdiff_t)(i * z));
            }
            if (seen.insert(vec_key(nxt)).second) queue.push_back(std::move(nxt));
        }
    }
    assert(visited == hs.size);
    (void)visited;
    return true;
}

std::vector<ModuleHom> all_homs(const FiniteModule& a, const FiniteModule& b, u64 guard) {
    auto hs = hom_set(a, b);
    std::vector<ModuleHom> out;
    out.reserve(hs->size);
    enumerate_homs(*hs, guard, [&](const ModuleHom& h) {
        out.push_back(h);
        return true;
    });
    return out;
}

namespace {

// The restriction map Hom(Y, target) -> Hom(X, target) along e: X -> Y,
// linearized on value tuples.
struct RestrictionMap {
    HomSetPtr hs_y;
    std::vector<Vec> raw_rows;  // restricted tuple of each T row, aligned
    Mat span;                   // Howell span of raw rows + U-noise
    std::size_t gx = 0, z = 0;
};

RestrictionMap build_restriction(const ModuleHom& e, const FiniteModule& target) {
    const FiniteModule& x = e.source;
    const FiniteModule& y = e.target;
    RestrictionMap rm;
    rm.hs_y = hom_set(y, target);
    const unsigned d = x.ring->rank;
    rm.gx = min_generators(x).size();
    rm.z = target.zdim();
    std::vector<Vec> exprs;
    for (const auto& img : e.images) exprs.push_back(express(y, img));
    Mat span(target.ring->m, rm.gx * rm.z);
    for (const auto& t : rm.hs_y->T.rows) {
        std::vector<Vec> h_images = decode_images(y, target, t);
        std::vector<Vec> restricted;
        restricted.reserve(rm.gx);
        for (std::size_t i = 0; i < rm.gx; ++i) {
            Vec acc(rm.z, 0);
            for (std::size_t j = 0; j < h_images.size(); ++j) {
                Vec r(exprs[i].begin() + (std::ptrdiff_t)(j * d),
                      exprs[i].begin() + (std::ptrdiff_t)((j + 1) * d));
                acc = vec_add(acc, act_elem_ambient(target.ring, target.n, h_images[j], r),
                              target.ring->m);
            }
            restricted.push_back(reduce_mod(target.U, acc));
        }
        Vec row = flatten(restricted, rm.z);
        rm.raw_rows.push_back(row);
        span.rows.push_back(std::move(row));
    }
    rm.span = span_sum(span, block_diag(target.U, rm.gx));
    return rm;
}

}  // namespace

bool restriction_surjective(const ModuleHom& e, const FiniteModule& target) {
    return !restriction_witness(e, target).has_value();
}

std::optional<ModuleHom> restriction_witness(const ModuleHom& e, const FiniteModule& target) {
    const FiniteModule& x = e.source;
    auto hs_x = hom_set(x, target);
    if (hs_x->size == 1) return std::nullopt;
    RestrictionMap rm = build_restriction(e, target);
    for (const auto& t : hs_x->T.rows) {
        Vec tuple = flatten(decode_images(x, target, t), rm.z);
        if (!member(rm.span, tuple)) return decode_hom(*hs_x, t);
    }
    return std::nullopt;
}

std::optional<ModuleHom> extend_along(const ModuleHom& e, const ModuleHom& f) {
    const FiniteModule& target = f.target;
    RestrictionMap rm = build_restriction(e, target);
    Mat sys(target.ring->m, rm.gx * rm.z);
    sys.rows = rm.raw_rows;
    Mat noise = block_diag(target.U, rm.gx);
    for (const auto& r : noise.rows) sys.rows.push_back(r);
    auto sol = solve_in_span(sys, hom_value_tuple(f));
    if (!sol) return std::nullopt;
    // combination of T rows realizing the restriction
    Vec t(rm.hs_y->T.cols, 0);
    for (std::size_t i = 0; i < rm.hs_y->T.nrows(); ++i)
        if ((*sol)[i]) t = vec_add(t, vec_scale((*sol)[i], rm.hs_y->T.rows[i], target.ring->m),
                                   target.ring->m);
    return decode_hom(*rm.hs_y, t);
}

namespace {

Mat factor_image_span(const ModuleHom& pi, const FiniteModule& m) {
    const FiniteModule& p = pi.source;
    const FiniteModule& n = pi.target;
    auto hs_mp = hom_set(m, p);
    const std::size_t gm = min_generators(m).size();
    const std::size_t z = n.zdim();
    Mat span(n.ring->m, gm * z);
    for (const auto& t : hs_mp->T.rows) {
        ModuleHom h = decode_hom(*hs_mp, t);
        std::vector<Vec> composed;
        composed.reserve(gm);
        for (const auto& img : h.images) composed.push_back(hom_apply(pi, img));
        span.rows.push_back(flatten(composed, z));
    }
    return span_sum(span, block_diag(n.U, gm));
}

}  // namespace

bool factors_through(const ModuleHom& pi, const ModuleHom& f) {
    Mat span = factor_image_span(pi, f.source);
    return member(span, hom_value_tuple(f));
}

bool all_factor_through(const ModuleHom& pi, const FiniteModule& m) {
    return !factor_witness(pi, m).has_value();
}

std::optional<ModuleHom> factor_witness(const ModuleHom& pi, const FiniteModule& m) {
    auto hs = hom_set(m, pi.target);
    if (hs->size == 1) return std::nullopt;
    Mat span = factor_image_span(pi, m);
    for (const auto& t : hs->T.rows) {
        Vec tuple = flatten(decode_images(m, pi.target, t), pi.target.zdim());
        if (!member(span, tuple)) return decode_hom(*hs, t);
    }
    return std::nullopt;
}

std::optional<ModuleHom> find_isomorphism(const FiniteModule& a, const FiniteModule& b, u64 guard) {
    require_same_ring(a, b);
    if (a.size() != b.size()) return std::nullopt;
    auto hs = hom_set(a, b);
    std::optional<ModuleHom> found;
    enumerate_homs(*hs, guard, [&](const ModuleHom& h) {
        if (hom_surjective(h)) {
            found = h;
            return false;
        }
        return true;
    });
    return found;
}

bool are_isomorphic(const FiniteModule& a, const FiniteModule& b) {
    require_same_ring(a, b);
    if (module_eq(a, b)) return true;
    if (a.size() != b.size()) return false;
    if (inv_hash(a) != inv_hash(b)) return false;
    std::string ka = a.key(), kb = b.key();
    if (kb < ka) std::swap(ka, kb);
    return memo().memo_bool("iso|" + ka + "|" + kb,
                            [&]() { return find_isomorphism(a, b).has_value(); });
}

namespace {

struct IsoRegistry {
    std::mutex mu;
    std::unordered_map<std::string, FiniteModule> canon;
    std::unordered_map<std::string, std::vector<FiniteModule>> buckets;
};

IsoRegistry& iso_registry() {
    static IsoRegistry r;
    return r;
}

}  // namespace

FiniteModule iso_canonical_rep(const FiniteModule& m) {
    auto& reg = iso_registry();
    {
        std::lock_guard<std::mutex> lk(reg.mu);
        auto it = reg.canon.find(m.key());
        if (it != reg.canon.end()) return it->second;
    }
    // direct sums: canonicalize by the factor multiset (Krull-Schmidt),
    // avoiding the hom search; equal multisets force isomorphic sums
    if (auto p = memo().lookup_ptr("sumfac|" + m.key())) {
        auto factors = std::static_pointer_cast<std::pair<FiniteModule, FiniteModule>>(p);
        std::string ka = iso_canonical_rep(factors->first).key();
        std::string kb = iso_canonical_rep(factors->second).key();
        if (kb < ka) std::swap(ka, kb);
        const std::string skey = "sumclass|" + ka + "|" + kb;
        std::lock_guard<std::mutex> lk(reg.mu);
        auto it = reg.canon.find(skey);
        if (it != reg.canon.end()) {
            reg.canon.emplace(m.key(), it->second);
            return it->second;
        }
        reg.canon.emplace(skey, m);
        reg.canon.emplace(m.key(), m);
        return m;
    }
    const std::string bkey =
        m.ring->hash_hex() + "|" + std::to_string(inv_hash(m)) + "|" + std::to_string(m.size());
    std::vector<FiniteModule> candidates;
    {
        std::lock_guard<std::mutex> lk(reg.mu);
        candidates = reg.buckets[bkey];
    }
    for (const auto& c : candidates) {
        if (are_isomorphic(m, c)) {
            std::lock_guard<std::mutex> lk(reg.mu);
            reg.canon.emplace(m.key(), c);
            return c;
        }
    }
    std::lock_guard<std::mutex> lk(reg.mu);
    reg.buckets[bkey].push_back(m);
    reg.canon.emplace(m.key(), m);
    return m;
}

std::vector<FiniteModule> simple_modules(const RingPtr& ring) {
    FiniteModule rr = regular_module(ring);
    auto subs = submodules(rr);
    std::vector<FiniteModule> reps;
    for (const auto& w : subs) {
        if (span_equal(w.span, rr.V)) continue;
        bool is_max = true;
        for (const auto& w2 : subs) {
            if (span_equal(w2.span, rr.V) || span_equal(w2.span, w.span)) continue;
            if (span_size(w2.span) > span_size(w.span) && span_contains(w2.span, w.span)) {
                is_max = false;
                break;
            }
        }
        if (!is_max) continue;
        FiniteModule s = module_from_canonical(ring, rr.n, rr.V, w.span);
        bool dup = false;
        for (const auto& r : reps)
            if (are_isomorphic(r, s)) {
                dup = true;
                break;
            }
        if (!dup) reps.push_back(std::move(s));
    }
    std::sort(reps.begin(), reps.end(), [](const FiniteModule& x, const FiniteModule& y) {
        if (inv_hash(x) != inv_hash(y)) return inv_hash(x) < inv_hash(y);
        return x.key() < y.key();
    });
    return reps;
}

}  // namespace finmod
