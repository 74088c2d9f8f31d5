#include "quadwalk/guess.hpp"

#include <algorithm>

namespace quadwalk {

std::optional<std::vector<Rat>> exact_nullspace_vector(const std::vector<std::vector<Rat>>& rows,
                                                       int cols) {
    // fraction-free (Bareiss-style) elimination over the integers after
    // clearing row denominators
    std::size_t nrows = rows.size();
    std::vector<std::vector<Int>> m(nrows);
    for (std::size_t r = 0; r < nrows; ++r) {
        Int denlcm(1);
        for (const Rat& v : rows[r])
            mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), v.get_den_mpz_t());
        m[r].reserve(static_cast<std::size_t>(cols));
        for (int c = 0; c < cols; ++c) {
            const Rat& v = rows[r][static_cast<std::size_t>(c)];
            m[r].push_back(v.get_num() * (denlcm / v.get_den()));
        }
    }

    std::vector<int> pivot_col;   // pivot column of each echelon row
    Int prev_pivot(1);
    std::size_t rank = 0;
    for (int c = 0; c < cols && rank < nrows; ++c) {
        // pick the row with the smallest nonzero pivot to slow growth
        std::size_t best = nrows;
        for (std::size_t r = rank; r < nrows; ++r) {
            if (m[r][static_cast<std::size_t>(c)] == 0) continue;
            if (best == nrows ||
                mpz_cmpabs(m[r][static_cast<std::size_t>(c)].get_mpz_t(),
                           m[best][static_cast<std::size_t>(c)].get_mpz_t()) < 0)
                best = r;
        }
        if (best == nrows) continue;   // free column
        std::swap(m[rank], m[best]);
        const Int piv = m[rank][static_cast<std::size_t>(c)];
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            Int factor = m[r][static_cast<std::size_t>(c)];
            for (int cc = c; cc < cols; ++cc) {
                auto idx = static_cast<std::size_t>(cc);
                Int v = piv * m[r][idx] - factor * m[rank][idx];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                m[r][idx] = std::move(v);
            }
        }
        prev_pivot = piv;
        pivot_col.push_back(c);
        ++rank;
    }
    if (static_cast<int>(rank) == cols) return std::nullopt;

    // first free column
    int free_col = 0;
    {
        std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
        for (int pc : pivot_col) is_pivot[static_cast<std::size_t>(pc)] = true;
        while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;
    }

    // back-substitute over Q: unknowns at pivot columns, free column = 1
    std::vector<Rat> x(static_cast<std::size_t>(cols), Rat(0));
    x[static_cast<std::size_t>(free_col)] = Rat(1);
    for (int r = static_cast<int>(rank) - 1; r >= 0; --r) {
        int pc = pivot_col[static_cast<std::size_t>(r)];
        Rat acc(0);
        for (int c = pc + 1; c < cols; ++c) {
            const Int& a = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (a == 0 || is_zero(x[static_cast<std::size_t>(c)])) continue;
            acc += Rat(a) * x[static_cast<std::size_t>(c)];
        }
        x[static_cast<std::size_t>(pc)] =
            -acc / Rat(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)]);
    }

    // normalise: integer entries, content 1, positive leading sign
    Int denlcm(1);
    for (const Rat& v : x) mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), v.get_den_mpz_t());
    Int numgcd(0);
    std::vector<Int> xi;
    xi.reserve(x.size());
    for (const Rat& v : x) {
        xi.push_back(v.get_num() * (denlcm / v.get_den()));
        mpz_gcd(numgcd.get_mpz_t(), numgcd.get_mpz_t(), xi.back().get_mpz_t());
    }
    int lead_sign = 0;
    for (const Int& v : xi)
        if (v != 0) { lead_sign = sgn(v); break; }
    std::vector<Rat> out;
    out.reserve(xi.size());
    for (Int& v : xi) {
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), numgcd.get_mpz_t());
        out.push_back(Rat(lead_sign < 0 ? Int(-v) : v));
    }
    return out;
}

namespace {

// F^{(i)} as coefficient lists: d_i[n] = (n+1)(n+2)...(n+i) c_{n+i}
std::vector<std::vector<Rat>> derivative_tables(const std::vector<Rat>& c, int max_order) {
    std::vector<std::vector<Rat>> d{c};
    for (int i = 1; i <= max_order; ++i) {
        const std::vector<Rat>& prev = d.back();
        std::vector<Rat> next;
        if (prev.size() > 1) {
            next.reserve(prev.size() - 1);
            for (std::size_t n = 0; n + 1 < prev.size(); ++n)
                next.push_back(prev[n + 1] * Rat(static_cast<long>(n + 1)));
        }
        d.push_back(std::move(next));
    }
    return d;
}

Rat table_at(const std::vector<Rat>& tab, int n) {
    if (n < 0 || n >= static_cast<int>(tab.size())) return Rat(0);
    return tab[static_cast<std::size_t>(n)];
}

// residual coefficient of t^m for sum_ij v[ij] t^j * tables[i]
Rat residual_at(const std::vector<std::vector<Rat>>& tables, int deg2, const std::vector<Rat>& v,
                int m) {
    Rat acc(0);
    int idx = 0;
    for (const auto& tab : tables)
        for (int j = 0; j <= deg2; ++j, ++idx) {
            const Rat& coef = v[static_cast<std::size_t>(idx)];
            if (is_zero(coef)) continue;
            acc += coef * table_at(tab, m - j);
        }
    return acc;
}

GuessResult search(const std::vector<std::vector<Rat>>& tables_all, int known_terms, int max_first,
                   int max_second, int guard, bool first_starts_at_one) {
    GuessResult out;
    out.max_first = max_first;
    out.max_second = max_second;
    out.guard = guard;
    out.terms_used = known_terms;
    for (int f = (first_starts_at_one ? 1 : 0); f <= max_first; ++f) {
        std::vector<std::vector<Rat>> tables(tables_all.begin(), tables_all.begin() + f + 1);
        for (int d = 0; d <= max_second; ++d) {
            int cols = (f + 1) * (d + 1);
            int solve_rows = known_terms - guard;
            if (solve_rows <= cols) continue;   // underdetermined; skip this cell
            std::vector<std::vector<Rat>> rows;
            rows.reserve(static_cast<std::size_t>(solve_rows));
            for (int mrow = 0; mrow < solve_rows; ++mrow) {
                std::vector<Rat> row;
                row.reserve(static_cast<std::size_t>(cols));
                for (int i = 0; i <= f; ++i)
                    for (int j = 0; j <= d; ++j)
                        row.push_back(table_at(tables[static_cast<std::size_t>(i)], mrow - j));
                rows.push_back(std::move(row));
            }
            auto v = exact_nullspace_vector(rows, cols);
            if (!v) continue;
            // re-check against every known term, guard included
            bool ok = true;
            for (int mrow = 0; mrow < known_terms && ok; ++mrow)
                ok = is_zero(residual_at(tables, d, *v, mrow));
            if (!ok) continue;
            out.found = true;
            out.validated_on_guard = true;
            std::vector<std::vector<Rat>> table(static_cast<std::size_t>(f) + 1);
            int idx = 0;
            for (int i = 0; i <= f; ++i) {
                table[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(d) + 1, Rat(0));
                for (int j = 0; j <= d; ++j)
                    table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        (*v)[static_cast<std::size_t>(idx++)];
            }
            out.max_first = f;
            out.max_second = d;
            // caller wraps the table into the right relation type
            out.ode = OdeRelation{f, d, table};
            out.algebraic = AlgebraicRelation{f, d, std::move(table)};
            return out;
        }
    }
    return out;
}

} // namespace

GuessResult guess_ode(const std::vector<Rat>& series, int max_order, int max_degree, int guard) {
    int n = static_cast<int>(series.size());
    if (n <= max_order + guard) throw Error("guess_ode: series too short for the requested bounds");
    auto tables = derivative_tables(series, max_order);
    // all derivative tables are only reliable up to t^(n - max_order - 1)
    int known = n - max_order;
    GuessResult out = search(tables, known, max_order, max_degree, guard, true);
    out.algebraic.reset();
    if (!out.found) out.ode.reset();
    return out;
}

GuessResult guess_algebraic(const std::vector<Rat>& series, int max_deg_f, int max_deg_t,
                            int guard) {
    int n = static_cast<int>(series.size());
    if (n <= guard) throw Error("guess_algebraic: series too short for the requested guard");
    // powers F^0 .. F^{max_deg_f}, truncated at t^{n-1}
    std::vector<std::vector<Rat>> pows;
    std::vector<Rat> one(static_cast<std::size_t>(n), Rat(0));
    one[0] = Rat(1);
    pows.push_back(one);
    for (int i = 1; i <= max_deg_f; ++i) {
        const std::vector<Rat>& prev = pows.back();
        std::vector<Rat> next(static_cast<std::size_t>(n), Rat(0));
        for (int a = 0; a < n; ++a) {
            if (is_zero(prev[static_cast<std::size_t>(a)])) continue;
            for (int b = 0; a + b < n; ++b) {
                if (is_zero(series[static_cast<std::size_t>(b)])) continue;
                next[static_cast<std::size_t>(a + b)] +=
                    prev[static_cast<std::size_t>(a)] * series[static_cast<std::size_t>(b)];
            }
        }
        pows.push_back(std::move(next));
    }
    GuessResult out = search(pows, n, max_deg_f, max_deg_t, guard, true);
    out.ode.reset();
    if (!out.found) out.algebraic.reset();
    return out;
}

} // namespace quadwalk
