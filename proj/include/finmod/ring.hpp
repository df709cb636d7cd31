#pragma once

// Finite unital rings given by structure constants.  The additive group is a
// free Z/mZ-module of rank d with m a prime power; basis elements e_0..e_{d-1}
// multiply by e_i * e_j = sum_l mult[i][j][l] e_l.  Elements are coordinate
// row vectors in (Z/mZ)^d.

#include <memory>
#include <string>
#include <vector>

#include "finmod/zmod.hpp"

namespace finmod {

struct FiniteRing {
    std::string name;
    unsigned m = 2;     // additive exponent, prime power
    unsigned rank = 1;  // d
    Vec unit;           // coordinates of 1
    std::vector<std::vector<Vec>> mult;  // mult[i][j] = coords of e_i * e_j

    // derived at construction
    std::vector<Mat> right_mul;  // right_mul[a].rows[b] = coords of e_b * e_a
    std::vector<Mat> left_mul;   // left_mul[a].rows[b]  = coords of e_a * e_b

    u64 num_elements() const { return full_space_size(m, rank); }
    // Canonical serialization: keys name, m, rank, unit, mult in that order,
    // integers decimal, no whitespace.
    std::string canonical_json() const;
    std::string hash_hex() const;
    bool same_as(const FiniteRing& o) const;
    // structure equal ignoring the name field
    bool same_structure(const FiniteRing& o) const;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

// Validates: m prime power, unit laws, associativity on all basis triples.
RingPtr make_ring(std::string name, unsigned m, unsigned rank, Vec unit,
                  std::vector<std::vector<Vec>> mult);

RingPtr load_ring_json(const std::string& text);
RingPtr load_ring_file(const std::string& path);

// Built-in fixtures: F2, Z4, Z8, E2, R8, T2, K4, Q8bar, M2F2 ("M2(F2)" is an
// accepted alias).  Throws UnknownSelector for other names.
RingPtr builtin_ring(const std::string& name);
const std::vector<std::string>& builtin_ring_names();
bool is_builtin_ring(const std::string& name);

// name or path; builtin names win
RingPtr resolve_ring(const std::string& name_or_path);

RingPtr opposite_ring(const RingPtr& r);

Vec ring_mul(const FiniteRing& r, const Vec& x, const Vec& y);
bool is_commutative(const FiniteRing& r);
// matrix of x -> x*r (rows are images of basis elements)
Mat right_mul_of(const FiniteRing& r, const Vec& elem);
Mat left_mul_of(const FiniteRing& r, const Vec& elem);

}  // namespace finmod
