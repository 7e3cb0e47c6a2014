#include "dtpt/lp.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace dtpt {

namespace {

// One inequality sum_j coef[j] * x[j] <= rhs over the still-active variables.
struct IneqRow {
    std::vector<Rational> coef;
    EpsRational rhs;
};

// Scale so the first nonzero coefficient is +-1; lets identical half-planes
// collapse to the tighter constant.
void normalize_row(IneqRow& row) {
    for (const auto& c : row.coef) {
        if (c == 0) continue;
        Rational s = abs(c);
        if (s == 1) return;
        for (auto& v : row.coef) v /= s;
        row.rhs /= s;
        return;
    }
}

bool dedupe_insert(std::map<std::vector<Rational>, EpsRational>& pool, IneqRow row) {
    normalize_row(row);
    auto it = pool.find(row.coef);
    if (it == pool.end()) {
        pool.emplace(std::move(row.coef), row.rhs);
        return true;
    }
    if (row.rhs < it->second) it->second = row.rhs;
    return true;
}

}  // namespace

bool check_solution(const FeasibilityProblem& prob, const std::vector<EpsRational>& x) {
    if (x.size() != prob.nvars) return false;
    for (size_t r = 0; r < prob.eq.size(); ++r) {
        EpsRational acc(Rational(0));
        for (size_t j = 0; j < prob.nvars; ++j) acc += x[j] * prob.eq[r][j];
        if (acc != prob.eq_rhs[r]) return false;
    }
    for (size_t j = 0; j < prob.nvars; ++j) {
        if (prob.bounds[j].has_lower && x[j] < prob.bounds[j].lower) return false;
        if (prob.bounds[j].has_upper && x[j] > prob.bounds[j].upper) return false;
    }
    return true;
}

std::optional<std::vector<EpsRational>> solve_fourier_motzkin(const FeasibilityProblem& prob) {
    size_t n = prob.nvars;

    // Stage 1: Gaussian elimination on the equalities. Pivot on unbounded
    // variables first so their box constraints never enter the inequality
    // pool.
    std::vector<std::vector<Rational>> eq = prob.eq;
    std::vector<EpsRational> rhs = prob.eq_rhs;
    std::vector<long> pivot_of_row(eq.size(), -1);
    std::vector<bool> is_pivot(n, false);

    std::vector<size_t> col_order;
    for (size_t j = 0; j < n; ++j)
        if (!prob.bounds[j].has_lower && !prob.bounds[j].has_upper) col_order.push_back(j);
    for (size_t j = 0; j < n; ++j)
        if (prob.bounds[j].has_lower || prob.bounds[j].has_upper) col_order.push_back(j);

    size_t next_row = 0;
    for (size_t idx = 0; idx < col_order.size() && next_row < eq.size(); ++idx) {
        size_t c = col_order[idx];
        size_t piv = next_row;
        while (piv < eq.size() && eq[piv][c] == 0) ++piv;
        if (piv == eq.size()) continue;
        std::swap(eq[piv], eq[next_row]);
        std::swap(rhs[piv], rhs[next_row]);
        Rational inv = Rational(1) / eq[next_row][c];
        for (auto& v : eq[next_row]) v *= inv;
        rhs[next_row] *= inv;
        for (size_t r = 0; r < eq.size(); ++r) {
            if (r == next_row || eq[r][c] == 0) continue;
            Rational f = eq[r][c];
            for (size_t j = 0; j < n; ++j) eq[r][j] -= f * eq[next_row][j];
            rhs[r] -= rhs[next_row] * f;
        }
        pivot_of_row[next_row] = long(c);
        is_pivot[c] = true;
        ++next_row;
    }
    for (size_t r = next_row; r < eq.size(); ++r)
        if (!rhs[r].is_zero()) return std::nullopt;  // 0 = nonzero

    std::vector<size_t> free_vars;
    for (size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_vars.push_back(j);
    std::vector<long> free_index(n, -1);
    for (size_t k = 0; k < free_vars.size(); ++k) free_index[free_vars[k]] = long(k);
    size_t nf = free_vars.size();

    // Stage 2: rewrite every box bound as an inequality over the free
    // variables. Pivot variable p of row r satisfies
    //   x_p = rhs[r] - sum_{free j} eq[r][j] x_j.
    std::map<std::vector<Rational>, EpsRational> pool;
    auto add_bound = [&](const std::vector<Rational>& expr_coef, const EpsRational& expr_const,
                         const VarBounds& b) -> bool {
        // variable value = expr_const + sum expr_coef * x_free
        if (b.has_upper) {
            IneqRow row{expr_coef, b.upper - expr_const};
            bool trivial = std::all_of(row.coef.begin(), row.coef.end(), [](const Rational& c) { return c == 0; });
            if (trivial) {
                if (EpsRational(Rational(0)) > row.rhs) return false;
            } else {
                dedupe_insert(pool, std::move(row));
            }
        }
        if (b.has_lower) {
            IneqRow row;
            row.coef.resize(expr_coef.size());
            for (size_t j = 0; j < expr_coef.size(); ++j) row.coef[j] = -expr_coef[j];
            row.rhs = expr_const - b.lower;
            bool trivial = std::all_of(row.coef.begin(), row.coef.end(), [](const Rational& c) { return c == 0; });
            if (trivial) {
                if (EpsRational(Rational(0)) > row.rhs) return false;
            } else {
                dedupe_insert(pool, std::move(row));
            }
        }
        return true;
    };

    for (size_t j = 0; j < n; ++j) {
        const VarBounds& b = prob.bounds[j];
        if (!b.has_lower && !b.has_upper) continue;
        if (!is_pivot[j]) {
            std::vector<Rational> coef(nf, Rational(0));
            coef[size_t(free_index[j])] = 1;
            if (!add_bound(coef, EpsRational(Rational(0)), b)) return std::nullopt;
        }
    }
    for (size_t r = 0; r < next_row; ++r) {
        size_t p = size_t(pivot_of_row[r]);
        const VarBounds& b = prob.bounds[p];
        if (!b.has_lower && !b.has_upper) continue;
        std::vector<Rational> coef(nf, Rational(0));
        for (size_t k = 0; k < nf; ++k) coef[k] = -eq[r][free_vars[k]];
        if (!add_bound(coef, rhs[r], b)) return std::nullopt;
    }

    std::vector<IneqRow> rows;
    rows.reserve(pool.size());
    for (auto& [coef, c] : pool) rows.push_back({coef, c});

    // Stage 3: eliminate free variables one at a time, cheapest first.
    struct Stage {
        size_t var;                 // index into free_vars
        std::vector<IneqRow> rows;  // rows mentioning the variable, pre-elimination
    };
    std::vector<Stage> stages;
    std::vector<bool> eliminated(nf, false);

    for (size_t round = 0; round < nf; ++round) {
        long best = -1;
        size_t best_cost = SIZE_MAX;
        for (size_t k = 0; k < nf; ++k) {
            if (eliminated[k]) continue;
            size_t pos = 0, neg = 0;
            for (const auto& row : rows) {
                if (row.coef[k] > 0) ++pos;
                else if (row.coef[k] < 0) ++neg;
            }
            size_t cost = pos * neg;
            if (cost < best_cost) {
                best_cost = cost;
                best = long(k);
            }
        }
        size_t k = size_t(best);
        eliminated[k] = true;

        std::vector<IneqRow> with_var, without;
        for (auto& row : rows)
            (row.coef[k] != 0 ? with_var : without).push_back(std::move(row));

        std::map<std::vector<Rational>, EpsRational> next_pool;
        for (auto& row : without) dedupe_insert(next_pool, std::move(row));
        for (const auto& up : with_var) {
            if (up.coef[k] <= 0) continue;
            for (const auto& lo : with_var) {
                if (lo.coef[k] >= 0) continue;
                // up: a x_k + ... <= c   (a > 0)  -> x_k <= (c - ...)/a
                // lo: -b x_k + ... <= e  (b > 0)  -> x_k >= (... - e)/(-b)
                Rational a = up.coef[k], b = -lo.coef[k];
                IneqRow comb;
                comb.coef.resize(nf, Rational(0));
                for (size_t j = 0; j < nf; ++j) comb.coef[j] = up.coef[j] * b + lo.coef[j] * a;
                comb.coef[k] = 0;
                comb.rhs = up.rhs * b + lo.rhs * a;
                bool trivial = std::all_of(comb.coef.begin(), comb.coef.end(),
                                           [](const Rational& c) { return c == 0; });
                if (trivial) {
                    if (EpsRational(Rational(0)) > comb.rhs) return std::nullopt;
                } else {
                    dedupe_insert(next_pool, std::move(comb));
                }
            }
        }
        stages.push_back({k, std::move(with_var)});
        rows.clear();
        for (auto& [coef, c] : next_pool) rows.push_back({coef, c});
    }

    for (const auto& row : rows)
        if (EpsRational(Rational(0)) > row.rhs) return std::nullopt;

    // Stage 4: back-substitution, choosing interval midpoints.
    std::vector<EpsRational> free_val(nf, EpsRational(Rational(0)));
    for (size_t s = stages.size(); s-- > 0;) {
        size_t k = stages[s].var;
        bool has_lo = false, has_hi = false;
        EpsRational lo, hi;
        for (const auto& row : stages[s].rows) {
            EpsRational resid = row.rhs;
            for (size_t j = 0; j < nf; ++j) {
                if (j == k || row.coef[j] == 0) continue;
                resid -= free_val[j] * row.coef[j];
            }
            EpsRational bound = resid / row.coef[k];
            if (row.coef[k] > 0) {
                if (!has_hi || bound < hi) hi = bound, has_hi = true;
            } else {
                if (!has_lo || bound > lo) lo = bound, has_lo = true;
            }
        }
        EpsRational zero;
        if (has_lo && has_hi) {
            if (lo > hi) return std::nullopt;  // should not happen after elimination
            if (lo <= zero && zero <= hi) free_val[k] = zero;
            else free_val[k] = (lo + hi) / Rational(2);
        } else if (has_lo) {
            free_val[k] = lo <= zero ? zero : lo;
        } else if (has_hi) {
            free_val[k] = hi >= zero ? zero : hi;
        }
    }

    std::vector<EpsRational> x(n, EpsRational(Rational(0)));
    for (size_t kf = 0; kf < nf; ++kf) x[free_vars[kf]] = free_val[kf];
    for (size_t r = 0; r < next_row; ++r) {
        size_t p = size_t(pivot_of_row[r]);
        EpsRational val = rhs[r];
        for (size_t kf = 0; kf < nf; ++kf) {
            const Rational& c = eq[r][free_vars[kf]];
            if (c != 0) val -= free_val[kf] * c;
        }
        x[p] = val;
    }
    if (!check_solution(prob, x)) return std::nullopt;
    return x;
}

std::optional<std::vector<EpsRational>> solve_simplex(const FeasibilityProblem& prob) {
    size_t n = prob.nvars;

    // Standard form: shifted variables y >= 0, one extra slack row per
    // two-sided bound, split free variables.
    struct VarMap {
        long y_plus = -1;   // column of the shifted/positive part
        long y_minus = -1;  // column of the negative part (free vars only)
        bool flipped = false;  // x = U - y (upper bound only)
        EpsRational shift;     // x = y + shift (or x = shift - y when flipped)
    };
    std::vector<VarMap> vmap(n);
    size_t ncols = 0;
    size_t nslack_rows = 0;
    for (size_t j = 0; j < n; ++j) {
        const VarBounds& b = prob.bounds[j];
        if (b.has_lower) {
            vmap[j].y_plus = long(ncols++);
            vmap[j].shift = b.lower;
            if (b.has_upper) ++nslack_rows;
        } else if (b.has_upper) {
            vmap[j].y_plus = long(ncols++);
            vmap[j].flipped = true;
            vmap[j].shift = b.upper;
        } else {
            vmap[j].y_plus = long(ncols++);
            vmap[j].y_minus = long(ncols++);
        }
    }
    size_t slack0 = ncols;
    ncols += nslack_rows;

    size_t nrows = prob.eq.size() + nslack_rows;
    std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(ncols, Rational(0)));
    std::vector<EpsRational> rhs(nrows, EpsRational(Rational(0)));

    for (size_t r = 0; r < prob.eq.size(); ++r) {
        EpsRational c = prob.eq_rhs[r];
        for (size_t j = 0; j < n; ++j) {
            const Rational& coef = prob.eq[r][j];
            if (coef == 0) continue;
            const VarMap& vm = vmap[j];
            if (vm.y_minus >= 0) {
                a[r][size_t(vm.y_plus)] += coef;
                a[r][size_t(vm.y_minus)] -= coef;
            } else if (vm.flipped) {
                a[r][size_t(vm.y_plus)] -= coef;
                c -= vm.shift * coef;
            } else {
                a[r][size_t(vm.y_plus)] += coef;
                c -= vm.shift * coef;
            }
        }
        rhs[r] = c;
    }
    {
        size_t srow = prob.eq.size(), scol = slack0;
        for (size_t j = 0; j < n; ++j) {
            const VarBounds& b = prob.bounds[j];
            if (!(b.has_lower && b.has_upper)) continue;
            a[srow][size_t(vmap[j].y_plus)] = 1;
            a[srow][scol] = 1;
            rhs[srow] = b.upper - b.lower;
            ++srow;
            ++scol;
        }
    }

    for (size_t r = 0; r < nrows; ++r) {
        if (rhs[r] < EpsRational(Rational(0))) {
            for (auto& v : a[r]) v = -v;
            rhs[r] = -rhs[r];
        }
    }

    // Phase-one tableau with one artificial per row; minimize their sum.
    size_t total = ncols + nrows;
    std::vector<std::vector<Rational>> t(nrows, std::vector<Rational>(total, Rational(0)));
    std::vector<EpsRational> trhs = rhs;
    std::vector<size_t> basis(nrows);
    for (size_t r = 0; r < nrows; ++r) {
        for (size_t j = 0; j < ncols; ++j) t[r][j] = a[r][j];
        t[r][ncols + r] = 1;
        basis[r] = ncols + r;
    }
    // Reduced costs: cost of artificials is 1, others 0; subtract basic rows.
    std::vector<Rational> cost(total, Rational(0));
    EpsRational objective(Rational(0));
    for (size_t j = ncols; j < total; ++j) cost[j] = 1;
    for (size_t r = 0; r < nrows; ++r) {
        for (size_t j = 0; j < total; ++j) cost[j] -= t[r][j];
        objective -= trhs[r];
    }

    for (;;) {
        long enter = -1;
        for (size_t j = 0; j < total; ++j) {
            if (cost[j] < 0) {
                enter = long(j);
                break;  // Bland: first improving column
            }
        }
        if (enter < 0) break;
        long leave = -1;
        EpsRational best_ratio;
        for (size_t r = 0; r < nrows; ++r) {
            if (t[r][size_t(enter)] <= 0) continue;
            EpsRational ratio = trhs[r] / t[r][size_t(enter)];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[size_t(leave)])) {
                leave = long(r);
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw std::logic_error("phase-one objective unbounded");
        size_t lr = size_t(leave), ec = size_t(enter);
        Rational piv = t[lr][ec];
        for (auto& v : t[lr]) v /= piv;
        trhs[lr] /= piv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == lr || t[r][ec] == 0) continue;
            Rational f = t[r][ec];
            for (size_t j = 0; j < total; ++j) t[r][j] -= f * t[lr][j];
            trhs[r] -= trhs[lr] * f;
        }
        if (cost[ec] != 0) {
            Rational f = cost[ec];
            for (size_t j = 0; j < total; ++j) cost[j] -= f * t[lr][j];
            objective -= trhs[lr] * f;
        }
        basis[lr] = ec;
    }

    if (!objective.is_zero()) return std::nullopt;

    std::vector<EpsRational> y(ncols, EpsRational(Rational(0)));
    for (size_t r = 0; r < nrows; ++r)
        if (basis[r] < ncols) y[basis[r]] = trhs[r];

    std::vector<EpsRational> x(n, EpsRational(Rational(0)));
    for (size_t j = 0; j < n; ++j) {
        const VarMap& vm = vmap[j];
        if (vm.y_minus >= 0) x[j] = y[size_t(vm.y_plus)] - y[size_t(vm.y_minus)];
        else if (vm.flipped) x[j] = vm.shift - y[size_t(vm.y_plus)];
        else x[j] = y[size_t(vm.y_plus)] + vm.shift;
    }
    if (!check_solution(prob, x)) throw std::logic_error("simplex produced an invalid point");
    return x;
}

}  // namespace dtpt
