#pragma once

// Process-wide memo for derived data and predicate results.  Results are
// deterministic functions of canonical keys, so concurrent last-write-wins
// races are benign; a single mutex keeps the maps consistent.

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace finmod {

class Memo {
  public:
    bool lookup_bool(const std::string& key, bool* out) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = bools_.find(key);
        if (it == bools_.end()) {
            ++misses_;
            return false;
        }
        ++hits_;
        *out = it->second;
        return true;
    }
    void store_bool(const std::string& key, bool v) {
        std::lock_guard<std::mutex> lk(mu_);
        bools_[key] = v;
    }
    bool memo_bool(const std::string& key, const std::function<bool()>& compute) {
        bool v;
        if (lookup_bool(key, &v)) return v;
        v = compute();
        store_bool(key, v);
        return v;
    }

    std::shared_ptr<void> lookup_ptr(const std::string& key) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = ptrs_.find(key);
        if (it == ptrs_.end()) {
            ++misses_;
            return nullptr;
        }
        ++hits_;
        return it->second;
    }
    // First stored entry wins; callers always receive the map-owned instance,
    // which lives as long as the memo (references into it stay valid).
    std::shared_ptr<void> store_ptr_if_absent(const std::string& key, std::shared_ptr<void> p) {
        std::lock_guard<std::mutex> lk(mu_);
        auto [it, inserted] = ptrs_.try_emplace(key, std::move(p));
        return it->second;
    }
    template <class T>
    std::shared_ptr<T> memo_ptr(const std::string& key, const std::function<std::shared_ptr<T>()>& compute) {
        if (auto p = lookup_ptr(key)) return std::static_pointer_cast<T>(p);
        auto v = compute();
        return std::static_pointer_cast<T>(store_ptr_if_absent(key, std::static_pointer_cast<void>(std::const_pointer_cast<std::remove_const_t<T>>(v))));
    }

    std::uint64_t hits() const { return hits_.load(); }
    std::uint64_t misses() const { return misses_.load(); }

    void clear() {
        std::lock_guard<std::mutex> lk(mu_);
        bools_.clear();
        ptrs_.clear();
    }

  private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, bool> bools_;
    std::unordered_map<std::string, std::shared_ptr<void>> ptrs_;
    mutable std::atomic<std::uint64_t> hits_{0}, misses_{0};
};

Memo& memo();

std::uint64_t fnv1a(const std::string& s);
std::string fnv1a_hex(const std::string& s);

}  // namespace finmod
