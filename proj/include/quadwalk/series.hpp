#pragma once

/// Exact enumeration of the walk generating function Q(x,y,t) by dynamic
/// programming over step layers, plus the sectional series F1, F2 and the
/// fundamental functional-equation check on truncations.
///
/// Internally the layer-n coefficients are stored as big integers over a
/// common denominator T^n, where T is the denominator shared by the
/// normalised weights; this keeps the DP free of rational gcds.

#include <map>
#include <vector>

#include "quadwalk/model.hpp"

namespace quadwalk {

class SeriesTable {
public:
    SeriesTable(const WalkModel& m, int max_len);

    int max_len() const { return n_; }
    const WalkModel& model() const { return model_; }

    /// coefficient of x^i y^j t^n (the probability of an n-step confined
    /// walk ending at (i,j))
    Rat at(int n, int i, int j) const;
    /// total probability mass at step n
    Rat total(int n) const;
    /// c_n = sum_{i,j} q(n,i,j) x0^i y0^j for n = 0..max_len
    std::vector<Rat> specialize(const Rat& x0, const Rat& y0) const;

    const Int& raw(int n, int i, int j) const;     // numerator over T^n
    const Int& denominator_base() const { return t_den_; }

private:
    WalkModel model_;
    int n_;
    Int t_den_;
    std::vector<Int> t_pow_;                 // T^n
    std::vector<std::vector<Int>> layers_;   // layer n: (n+1)x(n+1), row-major (i*(n+1)+j)
};

inline SeriesTable enumerate(const WalkModel& m, int max_len) { return SeriesTable(m, max_len); }

/// Truncated trivariate series: for each t-order n <= N, a sparse map of
/// exact (i,j) -> Rat coefficients.
struct TruncatedSeries3 {
    int order_t = 0;
    std::vector<std::map<std::pair<int, int>, Rat>> layers;

    Rat coeff(int n, int i, int j) const;
    void add(int n, int i, int j, const Rat& v);
    bool is_identically_zero() const;
    TruncatedSeries3 operator-(const TruncatedSeries3& o) const;
};

/// F1(x,t) = K(x,0,t) Q(x,0,t), exact, truncated at t-order <= N (terms
/// live at y-exponent 0).
TruncatedSeries3 sectional_F1(const WalkModel& m, const SeriesTable& table);
/// F2(y,t) = K(0,y,t) Q(0,y,t)
TruncatedSeries3 sectional_F2(const WalkModel& m, const SeriesTable& table);

struct FunctionalEquationReport {
    int order = 0;
    bool identically_zero = false;
    int first_nonzero_order = -1;
    std::string first_nonzero_term;
};

/// Lemma-style identity check: K*Q - F1 - F2 + K(0,0,t)Q(0,0,t) - xy
/// must vanish identically on truncations.
FunctionalEquationReport check_functional_equation(const WalkModel& m, int order);

} // namespace quadwalk
