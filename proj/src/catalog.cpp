#include "finmod/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

#include <json.hpp>

#include "finmod/errors.hpp"
#include "finmod/memo.hpp"

namespace finmod {

namespace {

constexpr const char* kCacheFormat = "finmod.cache/1";

std::string inv_hex(const FiniteModule& m) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)inv_hash(m));
    return std::string(buf);
}

}  // namespace

const CatalogClass* Catalog::class_by_id(const std::string& id) const {
    for (const auto& c : classes)
        if (c.id == id) return &c;
    return nullptr;
}

const CatalogClass* Catalog::class_of(const FiniteModule& m) const {
    if (!m.ring->same_as(*ring)) return nullptr;
    const u64 h = inv_hash(m);
    for (const auto& c : classes) {
        if (c.size != m.size()) continue;
        if (inv_hash(c.rep) != h) continue;
        if (are_isomorphic(c.rep, m)) return &c;
    }
    return nullptr;
}

Catalog build_catalog(RingPtr ring, u64 max_size, unsigned max_gens) {
    if (max_size == 0 || max_gens == 0) fail(Errc::BoundExceeded, "catalog bounds must be positive");
    Catalog cat;
    cat.ring = ring;
    cat.max_size = max_size;
    cat.max_gens = max_gens;
    FiniteModule fr = free_module(ring, max_gens);
    if (fr.size() > 4096)
        fail(Errc::BoundExceeded, "|R|^max_gens = " + std::to_string(fr.size()) +
                                      " exceeds the lattice budget");
    std::vector<FiniteModule> reps;
    for (const auto& k : submodules(fr)) {
        if (fr.size() / k.size() > max_size) continue;
        FiniteModule q = quotient(fr, k).first;
        bool dup = false;
        for (const auto& r : reps) {
            if (r.size() != q.size() || inv_hash(r) != inv_hash(q)) continue;
            if (are_isomorphic(r, q)) {
                dup = true;
                break;
            }
        }
        if (!dup) reps.push_back(std::move(q));
    }
    // stable ids: invariant hash hex + index ordered by canonical key
    std::map<std::string, std::vector<FiniteModule>> buckets;
    for (auto& r : reps) buckets[inv_hex(r)].push_back(r);
    for (auto& [hex, mods] : buckets) {
        std::sort(mods.begin(), mods.end(),
                  [](const FiniteModule& a, const FiniteModule& b) { return a.key() < b.key(); });
        for (std::size_t i = 0; i < mods.size(); ++i) {
            CatalogClass c;
            c.id = hex + "-" + std::to_string(i);
            c.rep = iso_canonical_rep(mods[i]);
            c.size = c.rep.size();
            c.length = comp_length(c.rep);
            c.injective = is_injective(c.rep);
            c.projective = is_projective(c.rep);
            c.simple_flag = is_simple(c.rep);
            c.cyclic = is_cyclic(c.rep);
            c.semisimple = is_semisimple(c.rep);
            cat.classes.push_back(std::move(c));
        }
    }
    std::sort(cat.classes.begin(), cat.classes.end(),
              [](const CatalogClass& a, const CatalogClass& b) { return a.id < b.id; });
    return cat;
}

std::vector<SES> short_exact_sequences(const FiniteModule& b, u64 max_elems) {
    std::vector<SES> out;
    for (const auto& a : submodules(b, max_elems)) {
        auto [c, pi] = quotient(b, a);
        out.push_back(SES{a, std::move(c), std::move(pi)});
    }
    return out;
}

std::string pair_memo_key(const char* op, const FiniteModule& a, const FiniteModule& b) {
    return std::string(op) + "|" + a.key() + "|" + b.key();
}

void cache_store(const std::string& path, const Catalog& cat) {
    nlohmann::ordered_json j;
    j["format"] = kCacheFormat;
    j["ring_hash"] = cat.ring->hash_hex();
    j["ring"] = nlohmann::json::parse(cat.ring->canonical_json());
    j["max_size"] = cat.max_size;
    j["max_gens"] = cat.max_gens;
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : cat.classes) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["module"] = nlohmann::json::parse(module_json(c.rep));
        jc["size"] = c.size;
        jc["length"] = c.length;
        jc["injective"] = c.injective;
        jc["projective"] = c.projective;
        jc["simple"] = c.simple_flag;
        jc["cyclic"] = c.cyclic;
        jc["semisimple"] = c.semisimple;
        classes.push_back(jc);
    }
    j["classes"] = classes;
    auto memo_rows = nlohmann::ordered_json::array();
    for (const char* op : {"subinj", "subproj"}) {
        for (const auto& a : cat.classes)
            for (const auto& b : cat.classes) {
                const FiniteModule ra = iso_canonical_rep(a.rep);
                const FiniteModule rb = iso_canonical_rep(b.rep);
                bool v = false;
                if (memo().lookup_bool(pair_memo_key(op, ra, rb), &v))
                    memo_rows.push_back(nlohmann::ordered_json::array({op, a.id, b.id, v}));
            }
    }
    j["memo"] = memo_rows;
    std::ofstream out(path);
    if (!out) fail(Errc::IoFailure, "cannot write " + path);
    out << j.dump(1) << "\n";
    if (!out) fail(Errc::IoFailure, "short write to " + path);
}

Catalog cache_load(const std::string& path, const RingPtr& ring, u64 max_size, unsigned max_gens) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoFailure, "cannot read " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::VersionMismatch, std::string("unparsable cache: ") + e.what());
    }
    if (j.value("format", "") != kCacheFormat) fail(Errc::VersionMismatch, "cache format differs");
    if (j.value("ring_hash", "") != ring->hash_hex())
        fail(Errc::VersionMismatch, "cache was built for another ring");
    if (j.value("max_size", 0ull) != max_size || j.value("max_gens", 0u) != max_gens)
        fail(Errc::VersionMismatch, "cache was built with other bounds");
    Catalog cat;
    cat.ring = ring;
    cat.max_size = max_size;
    cat.max_gens = max_gens;
    try {
        for (const auto& jc : j.at("classes")) {
            CatalogClass c;
            c.id = jc.at("id").get<std::string>();
            c.rep = iso_canonical_rep(module_from_json(ring, jc.at("module").dump()));
            c.size = jc.at("size").get<u64>();
            c.length = jc.at("length").get<unsigned>();
            c.injective = jc.at("injective").get<bool>();
            c.projective = jc.at("projective").get<bool>();
            c.simple_flag = jc.at("simple").get<bool>();
            c.cyclic = jc.at("cyclic").get<bool>();
            c.semisimple = jc.at("semisimple").get<bool>();
            cat.classes.push_back(std::move(c));
        }
        for (const auto& row : j.value("memo", nlohmann::json::array())) {
            const std::string op = row.at(0).get<std::string>();
            const CatalogClass* a = cat.class_by_id(row.at(1).get<std::string>());
            const CatalogClass* b = cat.class_by_id(row.at(2).get<std::string>());
            if (!a || !b) continue;
            memo().store_bool(pair_memo_key(op.c_str(), iso_canonical_rep(a->rep),
                                            iso_canonical_rep(b->rep)),
                              row.at(3).get<bool>());
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(Errc::VersionMismatch, std::string("malformed cache: ") + e.what());
    }
    return cat;
}

Catalog load_or_build_catalog(RingPtr ring, u64 max_size, unsigned max_gens,
                              const std::string& cache_dir) {
    if (cache_dir.empty()) return build_catalog(std::move(ring), max_size, max_gens);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    const std::string path = cache_dir + "/" + ring->hash_hex() + "-s" + std::to_string(max_size) +
                             "-g" + std::to_string(max_gens) + ".json";
    if (std::filesystem::exists(path)) {
        try {
            return cache_load(path, ring, max_size, max_gens);
        } catch (const Error&) {
            // stale or foreign cache: rebuild below
        }
    }
    Catalog cat = build_catalog(ring, max_size, max_gens);
    try {
        cache_store(path, cat);
    } catch (const Error&) {
        // caching is best effort
    }
    return cat;
}

}  // namespace finmod
