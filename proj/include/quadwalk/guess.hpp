#pragma once

/// Equation guessing from exact truncated power series: candidate linear
/// ODEs (polynomial coefficients in t) and algebraic equations, found by
/// exact nullspace computation with held-out guard terms. A relation is
/// only reported when it annihilates every supplied coefficient, guard
/// terms included; NotFound within the stated bounds is a value, not an
/// error.

#include <optional>
#include <vector>

#include "quadwalk/rat.hpp"

namespace quadwalk {

struct OdeRelation {
    // relation sum_{i<=order} p_i(t) F^{(i)}(t) = 0; coeffs[i][j] is the
    // t^j coefficient of p_i
    int order = 0, degree = 0;
    std::vector<std::vector<Rat>> coeffs;
};

struct AlgebraicRelation {
    // relation sum_{i<=deg_f, j<=deg_t} c_{ij} t^j F(t)^i = 0
    int deg_f = 0, deg_t = 0;
    std::vector<std::vector<Rat>> coeffs;   // coeffs[i][j]
};

struct GuessResult {
    bool found = false;
    bool validated_on_guard = false;
    std::optional<OdeRelation> ode;
    std::optional<AlgebraicRelation> algebraic;
    // searched bounds (reported on NotFound)
    int max_first = 0, max_second = 0;
    int terms_used = 0, guard = 0;
};

/// Scans orders r = 1..max_order and, for each, degrees d = 0..max_degree,
/// returning the first validated relation in scan order.
GuessResult guess_ode(const std::vector<Rat>& series, int max_order, int max_degree,
                      int guard = 10);

/// Scans powers f = 1..max_deg_f and degrees d = 0..max_deg_t.
GuessResult guess_algebraic(const std::vector<Rat>& series, int max_deg_f, int max_deg_t,
                            int guard = 10);

/// One vector of the exact nullspace of the rows x cols system (rows are
/// equations), or nullopt when the matrix has full column rank. The vector
/// is normalised to integer entries with content 1 and positive leading
/// sign, and is deterministic (first free column of the echelon form).
std::optional<std::vector<Rat>> exact_nullspace_vector(const std::vector<std::vector<Rat>>& rows,
                                                       int cols);

} // namespace quadwalk
