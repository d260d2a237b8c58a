#include "fp_geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace hymin::fp {

ProjPoint normalize_point(std::vector<std::uint64_t> x, Zp zp) {
    std::size_t i = 0;
    for (auto& v : x) v %= zp.p;
    while (i < x.size() && x[i] == 0) ++i;
    if (i == x.size()) throw std::invalid_argument("normalize_point: zero vector");
    std::uint64_t s = zp.inv(x[i]);
    for (auto& v : x) v = zp.mul(v, s);
    return ProjPoint{std::move(x)};
}

ProjLinearForm normalize_form(std::vector<std::uint64_t> c, Zp zp) {
    std::size_t i = 0;
    for (auto& v : c) v %= zp.p;
    while (i < c.size() && c[i] == 0) ++i;
    if (i == c.size()) throw std::invalid_argument("normalize_form: zero form");
    std::uint64_t s = zp.inv(c[i]);
    for (auto& v : c) v = zp.mul(v, s);
    return ProjLinearForm{std::move(c)};
}

namespace {

// F_p-invertible matrix whose first nv-1 rows are a basis of {y : y.L = 0};
// then L(x * M) = lambda * x_{nv-1}
std::vector<std::vector<std::uint64_t>> hyperplane_frame(const ProjLinearForm& l, Zp zp) {
    std::size_t n = l.c.size();
    std::size_t piv = 0;
    while (piv < n && l.c[piv] == 0) ++piv;
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == piv) continue;
        std::vector<std::uint64_t> r(n, 0);
        r[j] = 1;
        r[piv] = zp.neg(zp.mul(l.c[j], zp.inv(l.c[piv])));
        rows.push_back(std::move(r));
    }
    std::vector<std::uint64_t> last(n, 0);
    last[piv] = 1;
    rows.push_back(std::move(last));
    return rows;
}

MultiPoly divide_out_factor(const MultiPoly& f, const ProjLinearForm& l) {
    Zp zp = f.field();
    int nv = f.n_vars();
    auto frame = hyperplane_frame(l, zp);
    MultiPoly moved = f.subst_linear(frame);
    MultiPoly quo = moved.divide_by_var(nv - 1);
    return quo.subst_linear(fp_matrix_inverse(frame, zp));
}

// one F_p-rational linear factor of f, or nullopt
std::optional<ProjLinearForm> find_linear_factor(const MultiPoly& f) {
    Zp zp = f.field();
    int nv = f.n_vars();
    if (f.is_zero()) throw std::invalid_argument("find_linear_factor: zero input");
    if (f.total_degree() == 0) return std::nullopt;
    if (f.total_degree() == 1) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(nv), 0);
        for (const auto& [m, cc] : f.terms())
            for (int i = 0; i < nv; ++i)
                if (m.e[i] == 1) c[static_cast<std::size_t>(i)] = cc;
        return normalize_form(std::move(c), zp);
    }
    if (nv == 2) {
        auto fs = binary_form_linear_factors(f);
        if (fs.empty()) return std::nullopt;
        return fs.front().first;
    }
    int last = nv - 1;
    MultiPoly g = f.set_var(last, 0);
    if (g.is_zero()) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(nv), 0);
        c[static_cast<std::size_t>(last)] = 1;
        return ProjLinearForm{std::move(c)};
    }
    // every remaining linear factor restricts to a linear factor of g
    LinearFactorization sub = linear_factors(g.drop_var(last));
    for (const auto& [lsub, mult] : sub.factors) {
        // candidates l + c * x_last: substitute the pivot variable of l and
        // collect the coefficient polynomials in c (extra variable slot)
        if (nv + 1 > kMaxFpVars) throw std::logic_error("find_linear_factor: variable budget");
        std::size_t piv = 0;
        while (lsub.c[piv] == 0) ++piv; // normalized: pivot coefficient is 1
        int cvar = nv; // slot for the unknown c
        // x_piv := -(sum_{k != piv} l_k x_k) - c * x_last
        MultiPoly image(zp, nv + 1);
        for (std::size_t k = 0; k < lsub.c.size(); ++k) {
            if (k == piv || lsub.c[k] == 0) continue;
            Mono m;
            m.e[k] = 1;
            image.add_term(m, zp.neg(lsub.c[k]));
        }
        {
            Mono m;
            m.e[last] = 1;
            m.e[cvar] = 1;
            image.add_term(m, zp.neg(1));
        }
        // substitute term-wise
        MultiPoly h(zp, nv + 1);
        for (const auto& [m, c] : f.terms()) {
            MultiPoly acc(zp, nv + 1);
            Mono base;
            for (int i = 0; i < nv; ++i)
                if (static_cast<std::size_t>(i) != piv) base.e[i] = m.e[i];
            acc.add_term(base, c);
            for (int rep = 0; rep < m.e[piv]; ++rep) acc = acc * image;
            h = h + acc;
        }
        // group by x-monomial, coefficients are polynomials in c
        std::optional<UniPoly> gcd_c;
        std::map<Mono, std::vector<std::uint64_t>> by_mono;
        for (const auto& [m, c] : h.terms()) {
            Mono key = m;
            int ce = m.e[cvar];
            key.e[cvar] = 0;
            auto& vec = by_mono[key];
            if (ce >= static_cast<int>(vec.size())) vec.resize(static_cast<std::size_t>(ce) + 1, 0);
            vec[static_cast<std::size_t>(ce)] = c;
        }
        bool identically_zero_possible = true;
        for (auto& [key, vec] : by_mono) {
            UniPoly u(zp, vec);
            if (u.is_zero()) continue;
            gcd_c = gcd_c ? UniPoly::gcd(*gcd_c, u) : u.monic();
            if (gcd_c->degree() == 0) {
                identically_zero_possible = false;
                break;
            }
        }
        if (!identically_zero_possible) continue;
        if (!gcd_c) {
            // h vanished identically: l itself (c arbitrary) divides; take c = 0
            std::vector<std::uint64_t> cand(static_cast<std::size_t>(nv), 0);
            for (std::size_t k = 0; k < lsub.c.size(); ++k) cand[k] = lsub.c[k];
            return normalize_form(std::move(cand), zp);
        }
        auto roots = univariate_roots(*gcd_c);
        if (!roots.empty()) {
            std::vector<std::uint64_t> cand(static_cast<std::size_t>(nv), 0);
            for (std::size_t k = 0; k < lsub.c.size(); ++k) cand[k] = lsub.c[k];
            cand[static_cast<std::size_t>(last)] = roots.front().first;
            return normalize_form(std::move(cand), zp);
        }
        (void)mult;
    }
    return std::nullopt;
}

} // namespace

std::vector<std::pair<ProjLinearForm, int>> binary_form_linear_factors(const MultiPoly& f) {
    Zp zp = f.field();
    if (f.is_zero()) throw std::invalid_argument("binary_form_linear_factors: zero input");
    if (f.n_vars() != 2 || !f.is_homogeneous())
        throw std::invalid_argument("binary_form_linear_factors: need a binary homogeneous form");
    int d = f.total_degree();
    std::vector<std::uint64_t> u(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& [m, c] : f.terms()) u[m.e[1]] = c; // coefficient of x0^(d-b) x1^b
    UniPoly up(zp, u);
    std::vector<std::pair<ProjLinearForm, int>> out;
    int x0_mult = d - up.degree();
    if (x0_mult > 0) out.emplace_back(normalize_form({1, 0}, zp), x0_mult);
    for (const auto& [root, mult] : univariate_roots(up)) {
        // root xi of f(1,t): factor x1 - xi*x0
        out.emplace_back(normalize_form({zp.neg(root), 1}, zp), mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LinearFactorization linear_factors(const MultiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("linear_factors: zero input");
    if (!f.is_homogeneous()) throw std::invalid_argument("linear_factors: input not homogeneous");
    LinearFactorization out{.factors = {}, .cofactor = f};
    std::map<ProjLinearForm, int> mult;
    for (;;) {
        auto l = find_linear_factor(out.cofactor);
        if (!l) break;
        mult[*l] += 1;
        out.cofactor = divide_out_factor(out.cofactor, *l);
    }
    for (auto& [l, m] : mult) out.factors.emplace_back(l, m);
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

int multiplicity_at(const MultiPoly& g, const ProjPoint& pt) {
    int nv = g.n_vars();
    int d = g.total_degree();
    std::vector<int> alpha(static_cast<std::size_t>(nv), 0);
    // enumerate orders 0..d; first nonvanishing divided derivative
    for (int order = 0; order <= d; ++order) {
        // iterate alpha with |alpha| = order
        std::vector<int> a(static_cast<std::size_t>(nv), 0);
        bool nonzero = false;
        std::function<void(int, int)> rec = [&](int pos, int remaining) {
            if (nonzero) return;
            if (pos == nv - 1) {
                a[static_cast<std::size_t>(pos)] = remaining;
                MultiPoly dg = g.divided_partial(a);
                if (!dg.is_zero() && dg.eval(pt.x) != 0) nonzero = true;
                return;
            }
            for (int k = 0; k <= remaining; ++k) {
                a[static_cast<std::size_t>(pos)] = k;
                rec(pos + 1, remaining - k);
            }
        };
        rec(0, order);
        if (nonzero) return order;
    }
    return d + 1; // identically zero along every direction: treat as > d
}

namespace {

// enumerate divided partials of all orders <= m
std::vector<MultiPoly> derivative_system(const MultiPoly& g, int m) {
    int nv = g.n_vars();
    std::vector<MultiPoly> sys;
    std::vector<int> a(static_cast<std::size_t>(nv), 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == nv - 1) {
            a[static_cast<std::size_t>(pos)] = remaining;
            MultiPoly dg = g.divided_partial(a);
            if (!dg.is_zero()) sys.push_back(std::move(dg));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            a[static_cast<std::size_t>(pos)] = k;
            rec(pos + 1, remaining - k);
        }
    };
    for (int order = 0; order <= m; ++order) rec(0, order);
    return sys;
}

// affine chart c of P^{nv-1}: x_j = 0 for j < c, x_c = 1; the fixed slots are
// dropped so the dimension test sees only live variables
MultiPoly to_chart(const MultiPoly& f, int chart) {
    MultiPoly r = f.set_var(chart, 1);
    for (int j = 0; j < chart; ++j) r = r.set_var(j, 0);
    for (int j = chart; j >= 0; --j) r = r.drop_var(j);
    return r;
}

ProjPoint chart_point(const std::vector<std::uint64_t>& affine, int chart, int nv, Zp zp) {
    std::vector<std::uint64_t> x(static_cast<std::size_t>(nv), 0);
    x[static_cast<std::size_t>(chart)] = 1;
    for (int i = chart + 1; i < nv; ++i)
        x[static_cast<std::size_t>(i)] = affine[static_cast<std::size_t>(i - chart - 1)];
    return normalize_point(std::move(x), zp);
}

// Solve a projective system chart by chart. Returns nullopt when some chart
// is positive-dimensional (the chart index is reported through *bad_chart).
std::optional<std::vector<ProjPoint>> solve_projective(const std::vector<MultiPoly>& sys, int nv,
                                                       Zp zp, int* bad_chart,
                                                       std::uint64_t seed) {
    std::vector<ProjPoint> pts;
    for (int chart = 0; chart < nv; ++chart) {
        if (chart == nv - 1) {
            // single-point chart [0 : ... : 0 : 1]
            std::vector<std::uint64_t> unit(static_cast<std::size_t>(nv), 0);
            unit[static_cast<std::size_t>(nv) - 1] = 1;
            bool vanish = true;
            for (const auto& g : sys)
                if (g.eval(unit) != 0) vanish = false;
            if (vanish) pts.push_back(ProjPoint{unit});
            continue;
        }
        std::vector<MultiPoly> gens;
        for (const auto& g : sys) {
            MultiPoly h = to_chart(g, chart);
            if (!h.is_zero()) gens.push_back(std::move(h));
        }
        if (gens.empty()) {
            if (bad_chart) *bad_chart = chart;
            return std::nullopt; // whole chart is in the locus
        }
        FpIdeal ideal(std::move(gens));
        ZeroDimSolution sol = solve_zero_dim(ideal, seed);
        if (!sol.zero_dimensional) {
            if (bad_chart) *bad_chart = chart;
            return std::nullopt;
        }
        for (const auto& a : sol.points) pts.push_back(chart_point(a, chart, nv, zp));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

UniPoly restrict_to_line(const MultiPoly& g, const ProjPoint& p, const ProjPoint& q) {
    // g(P + t Q) as a univariate polynomial in t
    Zp zp = g.field();
    int nv = g.n_vars();
    UniPoly acc(zp);
    for (const auto& [m, c] : g.terms()) {
        UniPoly term = UniPoly::constant(zp, c);
        for (int i = 0; i < nv; ++i)
            for (int rep = 0; rep < m.e[i]; ++rep)
                term = term * UniPoly(zp, {p.x[static_cast<std::size_t>(i)], q.x[static_cast<std::size_t>(i)]});
        acc = acc + term;
    }
    return acc;
}

} // namespace

std::optional<ProjPoint> high_multiplicity_point(const MultiPoly& g, int threshold) {
    if (g.is_zero()) throw std::invalid_argument("high_multiplicity_point: zero input");
    int d = g.total_degree();
    if (threshold < 0 || threshold > d) throw std::invalid_argument("high_multiplicity_point: threshold out of range");
    if (d == 0) return std::nullopt;
    Zp zp = g.field();
    auto sys = derivative_system(g, threshold);
    int bad = -1;
    auto pts = solve_projective(sys, g.n_vars(), zp, &bad, 1);
    if (!pts)
        throw std::invalid_argument("high_multiplicity_point: locus not finite (contract violation)");
    if (pts->empty()) return std::nullopt;
    if (pts->size() > 1)
        throw std::invalid_argument("high_multiplicity_point: multiple points (contract violation)");
    return pts->front();
}

SingularLocusReport cubic_surface_singular_locus(const MultiPoly& f, std::uint64_t seed) {
    if (f.is_zero() || f.n_vars() != 4 || f.total_degree() != 3)
        throw std::invalid_argument("cubic_surface_singular_locus: need a quaternary cubic");
    Zp zp = f.field();
    SingularLocusReport rep;
    {
        auto lf = linear_factors(f);
        if (!lf.factors.empty()) {
            rep.kind = SingularLocusReport::Kind::contains_plane;
            return rep;
        }
    }
    std::vector<MultiPoly> sys{f};
    for (int i = 0; i < 4; ++i) {
        std::vector<int> a(4, 0);
        a[static_cast<std::size_t>(i)] = 1;
        MultiPoly d = f.divided_partial(a);
        if (!d.is_zero()) sys.push_back(std::move(d));
    }
    int bad = -1;
    auto pts = solve_projective(sys, 4, zp, &bad, seed);
    if (pts) {
        rep.kind = SingularLocusReport::Kind::finite_points;
        rep.points = *pts;
        if (rep.points.size() > 4)
            throw std::logic_error("cubic_surface_singular_locus: more than 4 isolated singular points");
        return rep;
    }

    // positive-dimensional: find two distinct singular points by slicing the
    // bad chart with coordinate hyperplanes, then certify the joining line.
    // An affine line hits x_var = v once when its direction moves in x_var,
    // so v in {0,1,2} across the free variables always yields two points.
    std::vector<ProjPoint> found;
    int live = 3 - bad; // variables left on the bad chart
    for (int var = bad + 1; var < 4 && found.size() < 2; ++var) {
        for (std::uint64_t v = 0; v < 3 && v < zp.p && found.size() < 2; ++v) {
            std::vector<MultiPoly> gens;
            for (const auto& g : sys) {
                MultiPoly h = to_chart(g, bad);
                if (!h.is_zero()) gens.push_back(std::move(h));
            }
            MultiPoly slice(zp, live);
            Mono m;
            m.e[var - bad - 1] = 1;
            slice.add_term(m, 1);
            slice.add_term(Mono{}, zp.neg(v));
            gens.push_back(slice);
            FpIdeal ideal(std::move(gens));
            ZeroDimSolution sol = solve_zero_dim(ideal, seed);
            if (!sol.zero_dimensional) continue;
            for (const auto& a : sol.points) {
                ProjPoint pp = chart_point(a, bad, 4, zp);
                if (std::find(found.begin(), found.end(), pp) == found.end()) found.push_back(pp);
                if (found.size() >= 2) break;
            }
        }
    }
    // later charts may hold the rest of the line (including its point at
    // infinity) when the slices missed
    if (found.size() < 2) {
        for (int chart2 = bad + 1; chart2 < 4 && found.size() < 2; ++chart2) {
            if (chart2 == 3) {
                std::vector<std::uint64_t> unit{0, 0, 0, 1};
                bool vanish = true;
                for (const auto& g : sys)
                    if (g.eval(unit) != 0) vanish = false;
                if (vanish) {
                    ProjPoint pp{unit};
                    if (std::find(found.begin(), found.end(), pp) == found.end()) found.push_back(pp);
                }
                continue;
            }
            std::vector<MultiPoly> gens;
            for (const auto& g : sys) {
                MultiPoly h = to_chart(g, chart2);
                if (!h.is_zero()) gens.push_back(std::move(h));
            }
            if (gens.empty()) continue;
            FpIdeal ideal(std::move(gens));
            ZeroDimSolution sol = solve_zero_dim(ideal, seed);
            if (!sol.zero_dimensional) continue;
            for (const auto& a : sol.points) {
                ProjPoint pp = chart_point(a, chart2, 4, zp);
                if (std::find(found.begin(), found.end(), pp) == found.end()) found.push_back(pp);
                if (found.size() >= 2) break;
            }
        }
    }
    if (found.size() < 2)
        throw std::logic_error("cubic_surface_singular_locus: could not sample the singular line");
    const ProjPoint& p = found[0];
    const ProjPoint& q = found[1];
    for (const auto& g : sys)
        if (!restrict_to_line(g, p, q).is_zero())
            throw std::logic_error("cubic_surface_singular_locus: sampled points do not span a singular line");
    rep.kind = SingularLocusReport::Kind::singular_line;
    rep.line_span = {p, q};
    // two independent forms vanishing on the line: kernel of [P; Q]
    {
        std::vector<ProjLinearForm> forms;
        std::vector<std::vector<std::uint64_t>> rows{p.x, q.x};
        std::vector<int> pivots;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < 4 && rank < rows.size(); ++col) {
            std::size_t sel = rank;
            while (sel < rows.size() && rows[sel][col] % zp.p == 0) ++sel;
            if (sel == rows.size()) continue;
            std::swap(rows[sel], rows[rank]);
            std::uint64_t inv = zp.inv(rows[rank][col]);
            for (auto& x : rows[rank]) x = zp.mul(x, inv);
            for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
                if (r2 == rank) continue;
                std::uint64_t fct = rows[r2][col] % zp.p;
                for (std::size_t j = 0; j < 4; ++j)
                    rows[r2][j] = zp.sub(rows[r2][j] % zp.p, zp.mul(fct, rows[rank][j]));
            }
            pivots.push_back(static_cast<int>(col));
            ++rank;
        }
        for (int col = 0; col < 4; ++col) {
            if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
            std::vector<std::uint64_t> k(4, 0);
            k[static_cast<std::size_t>(col)] = 1;
            for (std::size_t r = 0; r < rank; ++r)
                k[static_cast<std::size_t>(pivots[r])] = zp.neg(rows[r][static_cast<std::size_t>(col)]);
            forms.push_back(normalize_form(std::move(k), zp));
        }
        if (forms.size() != 2) throw std::logic_error("cubic_surface_singular_locus: line form extraction failed");
        rep.line = {forms[0], forms[1]};
    }
    return rep;
}

VerySingularReport very_singular_points(const Form& f, const mpz_class& p) {
    MultiPoly fbar = reduce_mod_p(f, p);
    return very_singular_points(f, p, cubic_surface_singular_locus(fbar));
}

VerySingularReport very_singular_points(const Form& f, const mpz_class& p,
                                        const SingularLocusReport& locus) {
    if (f.n_vars() != 4 || f.degree() != 3)
        throw std::invalid_argument("very_singular_points: need a quaternary cubic");
    Zp zp(p);
    if (locus.kind == SingularLocusReport::Kind::contains_plane)
        throw std::invalid_argument("very_singular_points: reduction has a linear factor (contract violation)");

    VerySingularReport rep;
    mpz_class p2 = p * p;
    auto lift_value = [&](const ProjPoint& pt) {
        std::vector<mpz_class> lift(4);
        for (int i = 0; i < 4; ++i) lift[static_cast<std::size_t>(i)] = mpz_class(static_cast<unsigned long>(pt.x[static_cast<std::size_t>(i)]));
        mpz_class val = 0;
        for (const auto& [e, c] : f.terms()) {
            mpz_class t = c;
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) t *= lift[static_cast<std::size_t>(i)];
            val += t;
        }
        return val;
    };

    if (locus.kind == SingularLocusReport::Kind::finite_points) {
        for (const auto& pt : locus.points)
            if (lift_value(pt) % p2 == 0) rep.points.push_back(pt);
        return rep;
    }

    // singular line: move it to {x2 = x3 = 0} and read off the residual
    // binary cubic g3 with F(x0,x1,0,0) = p * g3(x0,x1) integrally
    const auto& [ptP, ptQ] = *locus.line_span;
    rep.line_span = locus.line_span;
    IntMat t = move_line_to_front(ptP, ptQ, p);
    Form moved = substitute(f, t);
    // coefficients with x2 = x3 = 0
    MultiPoly g3(zp, 2);
    for (const auto& [e, c] : moved.terms()) {
        if (e[2] != 0 || e[3] != 0) continue;
        mpz_class cc = c;
        if (cc % p != 0) throw std::logic_error("very_singular_points: line is not singular after the move");
        cc /= p;
        Mono m;
        m.e[0] = static_cast<std::uint8_t>(e[0]);
        m.e[1] = static_cast<std::uint8_t>(e[1]);
        g3.add_term(m, zp.reduce(cc));
    }
    if (g3.is_zero()) {
        rep.whole_line = true;
        return rep;
    }
    // roots of g3 on the line are the very singular points; the binary
    // coordinates are tied to the actual rows of the moving matrix
    auto row = [&](std::size_t i) {
        std::vector<std::uint64_t> r(4);
        for (std::size_t j = 0; j < 4; ++j) {
            mpz_class x = t(i, j) % p;
            if (x < 0) x += p;
            r[j] = mpz_get_ui(x.get_mpz_t());
        }
        return r;
    };
    std::vector<std::uint64_t> r0 = row(0), r1 = row(1);
    auto factors = binary_form_linear_factors(g3);
    for (const auto& [l, m] : factors) {
        // zero locus of l = c0 x0 + c1 x1: point (xi0 : xi1) = (c1 : -c0)
        std::uint64_t xi0 = l.c[1], xi1 = zp.neg(l.c[0]);
        std::vector<std::uint64_t> coords(4, 0);
        for (std::size_t i = 0; i < 4; ++i)
            coords[i] = zp.add(zp.mul(xi0, r0[i]), zp.mul(xi1, r1[i]));
        rep.points.push_back(normalize_point(std::move(coords), zp));
    }
    std::sort(rep.points.begin(), rep.points.end());
    return rep;
}

IntMat move_point_to_first(const ProjPoint& p, const mpz_class& prime) {
    std::vector<std::vector<mpz_class>> rows(1);
    for (auto v : p.x) rows[0].emplace_back(static_cast<unsigned long>(v));
    return unimodular_with_rowspan(rows, p.x.size(), prime);
}

IntMat move_line_to_front(const ProjPoint& p, const ProjPoint& q, const mpz_class& prime) {
    std::vector<std::vector<mpz_class>> rows(2);
    for (auto v : p.x) rows[0].emplace_back(static_cast<unsigned long>(v));
    for (auto v : q.x) rows[1].emplace_back(static_cast<unsigned long>(v));
    return unimodular_with_rowspan(rows, p.x.size(), prime);
}

IntMat move_hyperplane_to_last(const ProjLinearForm& l, const mpz_class& prime) {
    Zp zp(prime);
    auto frame = hyperplane_frame(l, zp);
    std::size_t n = l.c.size();
    std::vector<std::vector<mpz_class>> rows;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<mpz_class> r;
        for (auto v : frame[i]) r.emplace_back(static_cast<unsigned long>(v));
        rows.push_back(std::move(r));
    }
    return unimodular_with_rowspan(rows, n, prime);
}

} // namespace hymin::fp
