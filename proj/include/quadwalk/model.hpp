#pragma once

/// Weighted small-step quarter-plane walk models. A model is a set of
/// steps in {-1,0,1}^2 \ {(0,0)} with nonnegative rational weights,
/// normalised on load so the weights sum to 1 exactly.

#include <map>
#include <string>

#include "quadwalk/poly1.hpp"
#include "quadwalk/poly2.hpp"

namespace quadwalk {

using Step = std::pair<int, int>;

struct WalkModel {
    std::string name;
    std::map<Step, Rat> weights;    // normalised: sum == 1, all > 0 entries kept
    Rat original_total;             // sum before normalisation

    Rat weight(int i, int j) const;
    bool has_step(int i, int j) const;

    /// xy * S(x,y) = sum d_ij x^{i+1} y^{j+1}; the jump polynomial with
    /// Laurent factors cleared.
    Poly2 step_polynomial_xy() const;
};

/// A Laurent factor x^shift * poly(x); shift is 0 or -1 here.
struct LaurentPoly {
    int shift = 0;
    Poly1 poly;

    Rat eval(const Rat& x) const;
    std::complex<double> eval(std::complex<double> x) const;
    bool is_zero() const { return poly.is_zero(); }
};

/// S(x,y) = A_{-1}(x)/y + A_0(x) + A_1(x) y = B_{-1}(y)/x + B_0(y) + B_1(y) x
struct JumpDecomposition {
    LaurentPoly A[3];   // index 0,1,2 <-> A_{-1}, A_0, A_1 (in x)
    LaurentPoly B[3];   // likewise in y

    const LaurentPoly& a(int j) const { return A[j + 1]; }
    const LaurentPoly& b(int i) const { return B[i + 1]; }
};

WalkModel make_model(const std::string& name, const std::map<Step, Rat>& raw_weights);

/// Parses the JSON document {"name": ..., "weights": {"i,j": "p/q", ...}}.
/// Unknown top-level keys and invalid steps are errors.
WalkModel load_model(const std::string& json_text);

/// A handful of named models used throughout the tests and docs.
WalkModel builtin_model(const std::string& name);
std::vector<std::string> builtin_model_names();

JumpDecomposition jump_decomposition(const WalkModel& m);

} // namespace quadwalk
