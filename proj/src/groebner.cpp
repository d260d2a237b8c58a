#include "groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace hymin::fp {

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, Order ord) {
    const Zp zp = f.field();
    int nv = f.n_vars();
    MultiPoly rem(zp, nv);
    MultiPoly cur = f;
    while (!cur.is_zero()) {
        Mono lm = cur.lm(ord);
        std::uint64_t lc = cur.coeff(lm);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            Mono glm = g.lm(ord);
            if (!glm.divides(lm, nv)) continue;
            Mono q = mono_div(lm, glm, nv);
            std::uint64_t s = zp.mul(lc, zp.inv(g.coeff(glm)));
            MultiPoly qp(zp, nv);
            qp.add_term(q, s);
            cur = cur - qp * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            // move leading term to the remainder, continue with the tail
            MultiPoly t(zp, nv);
            t.add_term(lm, lc);
            rem = rem + t;
            cur = cur - t;
        }
    }
    return rem;
}

namespace {

struct Pair {
    std::size_t i, j;
    Mono lcm;
    int deg;
};

} // namespace

std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens, Order ord) {
    // drop zeros, make monic
    std::vector<MultiPoly> g;
    for (auto& f : gens)
        if (!f.is_zero()) g.push_back(f.monic(ord));
    if (g.empty()) return g;
    const Zp zp = g[0].field();
    int nv = g[0].n_vars();

    auto make_pair = [&](std::size_t i, std::size_t j) {
        Pair p;
        p.i = i;
        p.j = j;
        p.lcm = mono_lcm(g[i].lm(ord), g[j].lm(ord), nv);
        p.deg = p.lcm.deg(nv);
        return p;
    };

    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pairs.push_back(make_pair(i, j));

    auto coprime = [&](std::size_t i, std::size_t j) {
        Mono a = g[i].lm(ord), b = g[j].lm(ord);
        for (int k = 0; k < nv; ++k)
            if (a.e[k] > 0 && b.e[k] > 0) return false;
        return true;
    };

    while (!pairs.empty()) {
        // normal selection: smallest lcm in the order
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (mono_less(pairs[k].lcm, pairs[best].lcm, ord, nv)) best = k;
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        if (coprime(p.i, p.j)) continue; // Buchberger's first criterion
        // chain criterion: some k with lm(g_k) | lcm and both (i,k),(j,k) done
        {
            bool skip = false;
            for (std::size_t k = 0; k < g.size() && !skip; ++k) {
                if (k == p.i || k == p.j) continue;
                if (!g[k].lm(ord).divides(p.lcm, nv)) continue;
                bool pending = false;
                for (const auto& q : pairs) {
                    if ((q.i == p.i && q.j == k) || (q.i == k && q.j == p.i) ||
                        (q.i == p.j && q.j == k) || (q.i == k && q.j == p.j)) {
                        pending = true;
                        break;
                    }
                }
                if (!pending) skip = true;
            }
            if (skip) continue;
        }

        // S-polynomial
        Mono mi = mono_div(p.lcm, g[p.i].lm(ord), nv);
        Mono mj = mono_div(p.lcm, g[p.j].lm(ord), nv);
        MultiPoly ti(zp, nv), tj(zp, nv);
        ti.add_term(mi, 1);
        tj.add_term(mj, 1);
        MultiPoly s = ti * g[p.i] - tj * g[p.j];
        MultiPoly r = normal_form(s, g, ord);
        if (r.is_zero()) continue;
        r = r.monic(ord);
        std::size_t idx = g.size();
        g.push_back(r);
        for (std::size_t i = 0; i < idx; ++i) pairs.push_back(make_pair(i, idx));
    }

    // reduce: remove members whose lm is divisible by another's, then
    // inter-reduce tails
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (g[j].lm(ord).divides(g[i].lm(ord), nv)) {
                if (g[j].lm(ord) == g[i].lm(ord) && j > i) continue; // keep first
                redundant = true;
            }
        }
        if (!redundant) out.push_back(g[i]);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (j != i) others.push_back(out[j]);
        out[i] = normal_form(out[i], others, ord).monic(ord);
    }
    std::sort(out.begin(), out.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return mono_less(a.lm(ord), b.lm(ord), ord, nv);
    });
    return out;
}

FpIdeal::FpIdeal(std::vector<MultiPoly> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw std::invalid_argument("FpIdeal: no generators");
}

const std::vector<MultiPoly>& FpIdeal::basis(Order ord) const {
    Cache& c = ord == Order::lex ? lex_ : grevlex_;
    std::call_once(c.once, [&] { c.basis = groebner_basis(gens_, ord); });
    return c.basis;
}

bool FpIdeal::contains(const MultiPoly& f, Order ord) const {
    return normal_form(f, basis(ord), ord).is_zero();
}

namespace {

void extract_points(const std::vector<MultiPoly>& basis, int nv, int var,
                    std::vector<std::uint64_t>& assign,
                    std::vector<std::vector<std::uint64_t>>& out, std::uint64_t seed) {
    if (var < 0) {
        // verify the full assignment
        for (const auto& g : basis)
            if (g.eval(assign) != 0) return;
        out.push_back(assign);
        return;
    }
    // gather basis elements supported on x_var..x_{nv-1}, substitute the
    // already-assigned tail variables, and intersect root sets
    std::optional<UniPoly> acc;
    for (const auto& g : basis) {
        bool ok = true;
        for (const auto& [m, c] : g.terms())
            for (int i = 0; i < var && ok; ++i)
                if (m.e[i] != 0) ok = false;
        if (!ok) continue;
        MultiPoly s = g;
        for (int i = var + 1; i < nv; ++i) s = s.set_var(i, assign[static_cast<std::size_t>(i)]);
        if (s.is_zero()) continue;
        UniPoly u = s.to_univariate(var);
        acc = acc ? UniPoly::gcd(*acc, u) : u.monic();
        if (acc->degree() == 0) return; // no common root on this branch
    }
    if (!acc) return; // underdetermined; caller guards with the dimension test
    for (const auto& [root, mult] : univariate_roots(*acc, seed)) {
        assign[static_cast<std::size_t>(var)] = root;
        extract_points(basis, nv, var - 1, assign, out, seed);
    }
    assign[static_cast<std::size_t>(var)] = 0;
}

} // namespace

ZeroDimSolution solve_zero_dim(const FpIdeal& ideal, std::uint64_t seed) {
    ZeroDimSolution sol;
    sol.basis = ideal.basis(Order::lex);
    if (sol.basis.empty()) return sol; // zero ideal: positive-dimensional
    int nv = sol.basis[0].n_vars();

    // <1>: empty variety, still zero-dimensional
    if (sol.basis.size() == 1 && sol.basis[0].total_degree() == 0) {
        sol.zero_dimensional = true;
        return sol;
    }
    for (int i = 0; i < nv; ++i) {
        bool pure = false;
        for (const auto& g : sol.basis) {
            Mono m = g.lm(Order::lex);
            bool only_i = m.e[i] > 0;
            for (int j = 0; j < nv && only_i; ++j)
                if (j != i && m.e[j] != 0) only_i = false;
            if (only_i) {
                pure = true;
                break;
            }
        }
        if (!pure) return sol; // positive-dimensional
    }
    sol.zero_dimensional = true;
    std::vector<std::uint64_t> assign(static_cast<std::size_t>(nv), 0);
    extract_points(sol.basis, nv, nv - 1, assign, sol.points, seed);
    std::sort(sol.points.begin(), sol.points.end());
    return sol;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
    const Zp zp = f.field();
    int nv = f.n_vars();
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero input");

    auto coeffs_in_var = [&](const MultiPoly& h) {
        int d = 0;
        for (const auto& [m, c] : h.terms()) d = std::max<int>(d, m.e[var]);
        std::vector<MultiPoly> cs(static_cast<std::size_t>(d) + 1, MultiPoly(zp, nv));
        for (const auto& [m, c] : h.terms()) {
            Mono mm = m;
            int k = m.e[var];
            mm.e[var] = 0;
            cs[static_cast<std::size_t>(k)].add_term(mm, c);
        }
        return cs;
    };

    std::vector<MultiPoly> a = coeffs_in_var(f), b = coeffs_in_var(g);
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    if (da == 0 && db == 0) throw std::invalid_argument("resultant: neither input involves the variable");

    // Sylvester matrix with g-rows first so that Res_x(x-a, x-b) = b - a
    int n = da + db;
    std::vector<std::vector<MultiPoly>> s(static_cast<std::size_t>(n),
                                          std::vector<MultiPoly>(static_cast<std::size_t>(n), MultiPoly(zp, nv)));
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = b[static_cast<std::size_t>(db - k)];
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) s[static_cast<std::size_t>(da + r)][static_cast<std::size_t>(r + k)] = a[static_cast<std::size_t>(da - k)];

    // fraction-free determinant (Bareiss); exact division via single-divisor
    // multivariate division with zero remainder
    auto divexact = [&](const MultiPoly& num, const MultiPoly& den) {
        if (den.is_zero()) throw std::logic_error("resultant: division by zero poly");
        MultiPoly q(zp, nv), r = num;
        Mono dlm = den.lm(Order::grevlex);
        std::uint64_t dlc_inv = zp.inv(den.lc(Order::grevlex));
        while (!r.is_zero()) {
            Mono rlm = r.lm(Order::grevlex);
            if (!dlm.divides(rlm, nv)) throw std::logic_error("resultant: inexact division");
            Mono m = mono_div(rlm, dlm, nv);
            std::uint64_t c = zp.mul(r.lc(Order::grevlex), dlc_inv);
            MultiPoly t(zp, nv);
            t.add_term(m, c);
            q = q + t;
            r = r - t * den;
        }
        return q;
    };

    MultiPoly prev(zp, nv);
    prev.add_term(Mono{}, 1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
            int piv = k + 1;
            while (piv < n && s[static_cast<std::size_t>(piv)][static_cast<std::size_t>(k)].is_zero()) ++piv;
            if (piv == n) return MultiPoly(zp, nv); // determinant is zero
            std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                MultiPoly t = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                              s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t.is_zero() ? t : divexact(t, prev);
            }
        prev = s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    MultiPoly det = s[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign > 0 ? det : det.scaled(zp.neg(1));
}

} // namespace hymin::fp
