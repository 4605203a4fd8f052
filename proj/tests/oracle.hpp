#pragma once

// Test-side oracles. Nothing here calls the library's elimination code:
// feasibility and optimization go through a small exact two-phase simplex
// over mpq_class, so agreement with Fourier elimination is meaningful.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "elimdual/system.hpp"

namespace oracle {

using Vec = std::vector<mpq_class>;

enum class LpStatus { kInfeasible, kUnbounded, kOptimal };

struct LpResult {
    LpStatus status = LpStatus::kInfeasible;
    Vec z;  // optimal point (nonnegative variables)
    mpq_class value;
};

/// maximize c.z subject to A z <= b, z >= 0. Bland's rule throughout.
inline LpResult simplex(const std::vector<Vec>& A, const Vec& b, const Vec& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    const std::size_t x0 = n + m;
    const std::size_t rhs = n + m + 1;
    std::vector<Vec> T(m + 1, Vec(rhs + 1, 0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][x0] = -1;
        T[i][rhs] = b[i];
        basis[i] = n + i;
    }
    auto pivot = [&](std::size_t r, std::size_t col) {
        const mpq_class p = T[r][col];
        for (auto& v : T[r]) v /= p;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == r || T[i][col] == 0) continue;
            const mpq_class f = T[i][col];
            for (std::size_t j = 0; j <= rhs; ++j) T[i][j] -= f * T[r][j];
        }
        basis[r] = col;
    };
    // Objective row holds -reduced costs; entering column has a negative entry.
    auto optimize = [&](std::size_t ncols) -> bool {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (T[m][j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            mpq_class best;
            for (std::size_t i = 0; i < m; ++i) {
                if (T[i][*enter] <= 0) continue;
                const mpq_class ratio = T[i][rhs] / T[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    };

    // Phase 1: maximize -x0.
    std::optional<std::size_t> worst;
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0 && (!worst || b[i] < b[*worst])) worst = i;
    }
    if (worst) {
        T[m][x0] = 1;
        pivot(*worst, x0);
        optimize(x0 + 1);
        if (T[m][rhs] != 0) return {};
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] != x0) continue;
            for (std::size_t j = 0; j < x0; ++j) {
                if (T[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }
    for (std::size_t i = 0; i <= m; ++i) T[i][x0] = 0;

    // Phase 2.
    std::fill(T[m].begin(), T[m].end(), 0);
    for (std::size_t j = 0; j < n; ++j) T[m][j] = -c[j];
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n && c[basis[i]] != 0) {
            const mpq_class f = T[m][basis[i]];
            for (std::size_t j = 0; j <= rhs; ++j) T[m][j] -= f * T[i][j];
        }
    }
    LpResult res;
    if (!optimize(x0)) {
        res.status = LpStatus::kUnbounded;
        return res;
    }
    res.status = LpStatus::kOptimal;
    res.z.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) res.z[basis[i]] = T[i][rhs];
    }
    res.value = T[m][rhs];
    return res;
}

struct Row {
    Vec a;
    int rel;  // 0 <=, 1 <, 2 =
    mpq_class r;
};

inline std::vector<Row> rows_of(const elimdual::System& s) {
    std::vector<Row> out;
    for (const auto& c : s.constraints()) {
        Row row;
        row.a.assign(s.num_variables(), 0);
        for (const auto& [v, k] : c.expr.terms()) row.a[v] = k.raw();
        row.rel = c.rel == elimdual::Relation::kLe ? 0 : (c.rel == elimdual::Relation::kLt ? 1 : 2);
        row.r = c.rhs.raw();
        out.push_back(std::move(row));
    }
    return out;
}

/// sup of obj.x over the rows with free variables. Strict rows must be
/// satisfiable strictly; the sup is then taken over the closure.
struct Sup {
    LpStatus status;
    mpq_class value;
    Vec x;
};

inline Sup sup(const std::vector<Row>& rows, std::size_t n, const Vec& obj) {
    // x = u - v; strict rows get an extra t column: a.x + t <= r, t <= 1.
    bool any_strict = false;
    for (const auto& row : rows) any_strict = any_strict || row.rel == 1;
    const std::size_t cols = 2 * n + 1;
    std::vector<Vec> A;
    Vec b;
    auto push = [&](const Vec& a, const mpq_class& t, const mpq_class& r) {
        Vec line(cols, 0);
        for (std::size_t j = 0; j < n; ++j) {
            line[j] = a[j];
            line[n + j] = -a[j];
        }
        line[2 * n] = t;
        A.push_back(std::move(line));
        b.push_back(r);
    };
    for (const auto& row : rows) {
        push(row.a, row.rel == 1 ? 1 : 0, row.r);
        if (row.rel == 2) {
            Vec neg(n);
            for (std::size_t j = 0; j < n; ++j) neg[j] = -row.a[j];
            push(neg, 0, -row.r);
        }
    }
    Vec bound_t(n, 0);
    push(bound_t, 1, 1);
    Sup out{LpStatus::kInfeasible, 0, {}};
    if (any_strict) {
        // Strict feasibility first: max t > 0.
        Vec c(cols, 0);
        c[2 * n] = 1;
        const LpResult r = simplex(A, b, c);
        if (r.status != LpStatus::kOptimal || r.value <= 0) return out;
    }
    Vec c(cols, 0);
    for (std::size_t j = 0; j < n; ++j) {
        c[j] = obj[j];
        c[n + j] = -obj[j];
    }
    const LpResult r = simplex(A, b, c);
    out.status = r.status;
    if (r.status == LpStatus::kOptimal) {
        out.value = r.value;
        out.x.assign(n, 0);
        for (std::size_t j = 0; j < n; ++j) out.x[j] = r.z[j] - r.z[n + j];
    }
    return out;
}

/// Exact feasibility of a system (strict rows honored).
inline bool feasible(const elimdual::System& s) {
    const Vec zero(s.num_variables(), 0);
    return sup(rows_of(s), s.num_variables(), zero).status != LpStatus::kInfeasible;
}

/// Nonzero point of {A x <= 0} with the system's relations (strict rows
/// relaxed): probes x_j >= 1 and x_j <= -1.
inline bool has_ray(const elimdual::System& s) {
    auto rows = rows_of(s);
    for (auto& row : rows) {
        row.r = 0;
        if (row.rel == 1) row.rel = 0;
    }
    const std::size_t n = s.num_variables();
    for (std::size_t j = 0; j < n; ++j) {
        for (int sign : {1, -1}) {
            auto probe = rows;
            Row extra{Vec(n, 0), 0, -1};
            extra.a[j] = -sign;
            probe.push_back(extra);
            if (sup(probe, n, Vec(n, 0)).status != LpStatus::kInfeasible) return true;
        }
    }
    return false;
}

/// Row i holds with equality on the whole (nonempty, non-strict) system:
/// min of L_i over the system equals r_i.
inline bool is_implicit(const elimdual::System& s, std::size_t i) {
    const auto rows = rows_of(s);
    Vec neg(rows[i].a.size());
    for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -rows[i].a[j];
    const Sup lo = sup(rows, s.num_variables(), neg);
    return lo.status == LpStatus::kOptimal && -lo.value == rows[i].r;
}

/// Gordan: a homogeneous LE system has a nonzero nonnegative multiplier
/// certificate iff its all-strict version is infeasible.
inline bool gordan_multiplier_exists(const elimdual::System& s) {
    auto rows = rows_of(s);
    for (auto& row : rows) {
        if (row.rel == 0) row.rel = 1;
    }
    return sup(rows, s.num_variables(), Vec(s.num_variables(), 0)).status == LpStatus::kInfeasible;
}

}  // namespace oracle
