#include "finmod/ring.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "finmod/errors.hpp"
#include "finmod/memo.hpp"

namespace finmod {

namespace {

Vec bilinear_mul(const FiniteRing& r, const Vec& x, const Vec& y) {
    Vec out(r.rank, 0);
    for (unsigned i = 0; i < r.rank; ++i) {
        if (!x[i]) continue;
        for (unsigned j = 0; j < r.rank; ++j) {
            if (!y[j]) continue;
            const u64 c = mulm(x[i], y[j], r.m);
            const Vec& e = r.mult[i][j];
            for (unsigned l = 0; l < r.rank; ++l) out[l] = (out[l] + c * e[l]) % r.m;
        }
    }
    return out;
}

void validate(const FiniteRing& r) {
    if (!is_prime_power(r.m))
        fail(Errc::CharNotPrimePower, "m = " + std::to_string(r.m) + " is not a prime power");
    if (r.rank == 0) fail(Errc::MalformedSpec, "rank must be positive");
    if (r.unit.size() != r.rank) fail(Errc::MalformedSpec, "unit has wrong length");
    if (r.mult.size() != r.rank) fail(Errc::MalformedSpec, "mult has wrong shape");
    for (const auto& row : r.mult) {
        if (row.size() != r.rank) fail(Errc::MalformedSpec, "mult has wrong shape");
        for (const auto& c : row)
            if (c.size() != r.rank) fail(Errc::MalformedSpec, "mult has wrong shape");
    }
    // unit laws on every basis element
    for (unsigned i = 0; i < r.rank; ++i) {
        Vec ei(r.rank, 0);
        ei[i] = 1 % r.m;
        if (bilinear_mul(r, r.unit, ei) != ei || bilinear_mul(r, ei, r.unit) != ei)
            fail(Errc::BadUnit, "unit laws fail on basis element " + std::to_string(i));
    }
    // associativity on all basis triples
    for (unsigned i = 0; i < r.rank; ++i)
        for (unsigned j = 0; j < r.rank; ++j)
            for (unsigned l = 0; l < r.rank; ++l) {
                Vec ei(r.rank, 0), ej(r.rank, 0), el(r.rank, 0);
                ei[i] = 1 % r.m;
                ej[j] = 1 % r.m;
                el[l] = 1 % r.m;
                Vec lhs = bilinear_mul(r, r.mult[i][j], el);
                Vec rhs = bilinear_mul(r, ei, bilinear_mul(r, ej, el));
                if (lhs != rhs)
                    fail(Errc::NonAssociative,
                         "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                             std::to_string(l) + " != e" + std::to_string(i) + " (e" +
                             std::to_string(j) + " e" + std::to_string(l) + ")");
            }
}

void build_derived(FiniteRing& r) {
    r.right_mul.clear();
    r.left_mul.clear();
    for (unsigned a = 0; a < r.rank; ++a) {
        Mat rm(r.m, r.rank), lm(r.m, r.rank);
        for (unsigned b = 0; b < r.rank; ++b) {
            rm.rows.push_back(r.mult[b][a]);  // e_b * e_a
            lm.rows.push_back(r.mult[a][b]);  // e_a * e_b
        }
        r.right_mul.push_back(std::move(rm));
        r.left_mul.push_back(std::move(lm));
    }
}

}  // namespace

std::string FiniteRing::canonical_json() const {
    std::ostringstream os;
    os << "{\"name\":\"" << name << "\",\"m\":" << m << ",\"rank\":" << rank << ",\"unit\":[";
    for (unsigned i = 0; i < rank; ++i) os << (i ? "," : "") << unit[i];
    os << "],\"mult\":[";
    for (unsigned i = 0; i < rank; ++i) {
        os << (i ? ",[" : "[");
        for (unsigned j = 0; j < rank; ++j) {
            os << (j ? ",[" : "[");
            for (unsigned l = 0; l < rank; ++l) os << (l ? "," : "") << mult[i][j][l];
            os << "]";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

std::string FiniteRing::hash_hex() const { return fnv1a_hex(canonical_json()); }

bool FiniteRing::same_as(const FiniteRing& o) const {
    return canonical_json() == o.canonical_json();
}

bool FiniteRing::same_structure(const FiniteRing& o) const {
    return m == o.m && rank == o.rank && unit == o.unit && mult == o.mult;
}

RingPtr make_ring(std::string name, unsigned m, unsigned rank, Vec unit,
                  std::vector<std::vector<Vec>> mult) {
    auto r = std::make_shared<FiniteRing>();
    r->name = std::move(name);
    r->m = m;
    r->rank = rank;
    for (auto& x : unit) x %= m;
    for (auto& row : mult)
        for (auto& c : row)
            for (auto& x : c) x %= m;
    r->unit = std::move(unit);
    r->mult = std::move(mult);
    validate(*r);
    build_derived(*r);
    return r;
}

RingPtr load_ring_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail(Errc::MalformedSpec, std::string("bad JSON: ") + e.what());
    }
    try {
        std::string name = j.at("name").get<std::string>();
        unsigned m = j.at("m").get<unsigned>();
        unsigned rank = j.at("rank").get<unsigned>();
        Vec unit = j.at("unit").get<Vec>();
        std::vector<std::vector<Vec>> mult = j.at("mult").get<std::vector<std::vector<Vec>>>();
        return make_ring(std::move(name), m, rank, std::move(unit), std::move(mult));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(Errc::MalformedSpec, std::string("bad ring document: ") + e.what());
    }
}

RingPtr load_ring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoFailure, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_ring_json(ss.str());
}

namespace {

RingPtr make_commutative_algebra_f2(const std::string& name, unsigned rank,
                                    const std::vector<std::vector<Vec>>& mult, const Vec& unit) {
    return make_ring(name, 2, rank, unit, mult);
}

RingPtr build_builtin(const std::string& name) {
    if (name == "F2") {
        return make_ring("F2", 2, 1, {1}, {{{1}}});
    }
    if (name == "Z4") {
        return make_ring("Z4", 4, 1, {1}, {{{1}}});
    }
    if (name == "Z8") {
        return make_ring("Z8", 8, 1, {1}, {{{1}}});
    }
    if (name == "E2") {
        // F2[x]/(x^2), basis {1, x}
        std::vector<std::vector<Vec>> mult = {
            {{1, 0}, {0, 1}},
            {{0, 1}, {0, 0}},
        };
        return make_commutative_algebra_f2("E2", 2, mult, {1, 0});
    }
    if (name == "R8" || name == "Q8bar") {
        // basis {1, u, v}; u^2 = uv = vu = v^2 = 0
        std::vector<std::vector<Vec>> mult = {
            {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
            {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}},
            {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}},
        };
        return make_commutative_algebra_f2(name, 3, mult, {1, 0, 0});
    }
    if (name == "T2") {
        // upper triangular 2x2 over F2, basis {e11, e12, e22}
        std::vector<std::vector<Vec>> mult = {
            {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}},
            {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}},
            {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}},
        };
        return make_ring("T2", 2, 3, {1, 0, 1}, mult);
    }
    if (name == "K4") {
        // F2[x,y]/(x^2, y^2), basis {1, x, y, xy}
        std::vector<std::vector<Vec>> mult = {
            {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
            {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}},
            {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
            {{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
        };
        return make_commutative_algebra_f2("K4", 4, mult, {1, 0, 0, 0});
    }
    if (name == "M2F2") {
        // 2x2 matrices over F2, basis {e11, e12, e21, e22}
        auto unitmat = [](int a, int b) {
            Vec v(4, 0);
            v[(std::size_t)(a * 2 + b)] = 1;
            return v;
        };
        Vec zero(4, 0);
        std::vector<std::vector<Vec>> mult(4, std::vector<Vec>(4, zero));
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    for (int d = 0; d < 2; ++d)
                        mult[(std::size_t)(a * 2 + b)][(std::size_t)(c * 2 + d)] =
                            (b == c) ? unitmat(a, d) : zero;
        return make_ring("M2F2", 2, 4, {1, 0, 0, 1}, mult);
    }
    fail(Errc::UnknownSelector, "unknown built-in ring: " + name);
}

}  // namespace

const std::vector<std::string>& builtin_ring_names() {
    static const std::vector<std::string> names = {"F2", "Z4",  "Z8",    "E2",  "R8",
                                                   "T2", "K4", "Q8bar", "M2F2"};
    return names;
}

bool is_builtin_ring(const std::string& name) {
    for (const auto& n : builtin_ring_names())
        if (n == name) return true;
    return name == "M2(F2)";
}

RingPtr builtin_ring(const std::string& name0) {
    const std::string name = (name0 == "M2(F2)") ? "M2F2" : name0;
    const std::string key = "ring|builtin|" + name;
    return memo().memo_ptr<const FiniteRing>(
        key, [&]() -> std::shared_ptr<const FiniteRing> { return build_builtin(name); });
}

RingPtr resolve_ring(const std::string& name_or_path) {
    if (is_builtin_ring(name_or_path)) return builtin_ring(name_or_path);
    return load_ring_file(name_or_path);
}

RingPtr opposite_ring(const RingPtr& r) {
    const std::string key = "ring|op|" + r->hash_hex();
    return memo().memo_ptr<const FiniteRing>(key, [&]() -> std::shared_ptr<const FiniteRing> {
        std::vector<std::vector<Vec>> mult(r->rank, std::vector<Vec>(r->rank));
        for (unsigned i = 0; i < r->rank; ++i)
            for (unsigned j = 0; j < r->rank; ++j) mult[i][j] = r->mult[j][i];
        std::string name = r->name;
        if (name.size() > 3 && name.substr(name.size() - 3) == "^op")
            name = name.substr(0, name.size() - 3);
        else
            name += "^op";
        return make_ring(name, r->m, r->rank, r->unit, std::move(mult));
    });
}

Vec ring_mul(const FiniteRing& r, const Vec& x, const Vec& y) { return bilinear_mul(r, x, y); }

bool is_commutative(const FiniteRing& r) {
    for (unsigned i = 0; i < r.rank; ++i)
        for (unsigned j = 0; j < r.rank; ++j)
            if (r.mult[i][j] != r.mult[j][i]) return false;
    return true;
}

Mat right_mul_of(const FiniteRing& r, const Vec& elem) {
    Mat out(r.m, r.rank);
    out.rows.assign(r.rank, Vec(r.rank, 0));
    for (unsigned a = 0; a < r.rank; ++a) {
        if (!elem[a]) continue;
        for (unsigned b = 0; b < r.rank; ++b)
            for (unsigned l = 0; l < r.rank; ++l)
                out.rows[b][l] = (out.rows[b][l] + elem[a] * r.right_mul[a].rows[b][l]) % r.m;
    }
    return out;
}

Mat left_mul_of(const FiniteRing& r, const Vec& elem) {
    Mat out(r.m, r.rank);
    out.rows.assign(r.rank, Vec(r.rank, 0));
    for (unsigned a = 0; a < r.rank; ++a) {
        if (!elem[a]) continue;
        for (unsigned b = 0; b < r.rank; ++b)
            for (unsigned l = 0; l < r.rank; ++l)
                out.rows[b][l] = (out.rows[b][l] + elem[a] * r.left_mul[a].rows[b][l]) % r.m;
    }
    return out;
}

}  // namespace finmod
