#pragma once

/// The group of the walk: the birational involutions swapping the roots of
/// the kernel's degree-2 fibers, the composed map sigma, finiteness (via
/// the order <= 12 bound, so sigma order <= 6), the full element list in
/// the finite case, and the exact signed orbit-sum of xy.

#include <optional>
#include <vector>

#include "quadwalk/model.hpp"
#include "quadwalk/ratfunc2.hpp"

namespace quadwalk {

struct GroupElement {
    RatFunc2 map_x, map_y;      // images of x and y
    std::vector<int> word;      // shortest representative over {1,2} (iota indices)
    int sign = 1;               // (-1)^|word|

    bool is_identity() const;
    std::string word_string() const;
};

GroupElement identity_element();
GroupElement compose(const GroupElement& g, const GroupElement& h);   // g after h

/// iota1 = (x, A_{-1}(x)/(A_1(x) y)), iota2 = (B_{-1}(y)/(B_1(y) x), y),
/// from the product-of-roots relation on the degree-2 kernel fibers.
/// Throws MissingStepDirection when A_{+-1} or B_{+-1} vanishes, and
/// verifies involutivity exactly at construction.
std::pair<GroupElement, GroupElement> involutions(const WalkModel& m);

struct GroupResult {
    bool finite = false;
    int order = 0;                        // 2 * (minimal n with sigma^n = id), when finite
    std::vector<GroupElement> elements;   // full dihedral list, when finite
    int sigma_order_checked = 0;          // how many powers of sigma were tested
    bool degree_blowup = false;           // safety cap hit; verdict reported as infinite
};

/// Decides finiteness by testing sigma^n = id for n <= max_sigma_order.
/// Non-identity is certified by exact evaluation at rational sample
/// points; identity is certified by symbolic composition in canonical
/// form. degree_cap bounds intermediate rational-function degrees.
GroupResult decide_finiteness(const GroupElement& iota1, const GroupElement& iota2,
                              int max_sigma_order = 6, int degree_cap = 10000);

struct OrbitSum {
    RatFunc2 value;
    bool is_zero() const { return value.is_zero(); }
};

/// O(x,y) = sum over g of sign(g) * g(xy), exact. Requires a finite verdict.
OrbitSum orbit_sum(const GroupResult& result);

} // namespace quadwalk
