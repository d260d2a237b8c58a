#include "minimize_surface.hpp"

#include <algorithm>
#include <stdexcept>

#include "fp_geometry.hpp"

namespace hymin::surface {

namespace {

using fp::MultiPoly;
using fp::Mono;
using fp::Zp;

long vp_exponent(const mpz_class& x, const mpz_class& p) {
    long v = 0;
    mpz_class a = abs(x);
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

// rank of a ternary quadratic form, char-2 safe; reports the projective
// singular locus data needed by the weight chains
struct QuadricClass {
    int rank = 0;
    std::vector<std::uint64_t> kernel_point; // rank 2: spans the radical null direction
    std::vector<std::uint64_t> linear;       // rank 1: q = c * l^2
};

QuadricClass classify_ternary_quadric(const MultiPoly& q) {
    Zp zp = q.field();
    QuadricClass out;
    if (q.is_zero()) return out;
    // bilinear matrix b(u,v) = q(u+v) - q(u) - q(v)
    std::uint64_t b[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    for (const auto& [m, c] : q.terms()) {
        int idx[3] = {m.e[0], m.e[1], m.e[2]};
        int i = -1, j = -1;
        for (int k = 0; k < 3; ++k) {
            if (idx[k] == 2) i = j = k;
            if (idx[k] == 1) (i < 0 ? i : j) = k;
        }
        if (i == j) {
            b[i][i] = zp.add(b[i][i], zp.add(c, c));
        } else {
            b[i][j] = zp.add(b[i][j], c);
            b[j][i] = zp.add(b[j][i], c);
        }
    }
    // radical of b by Gaussian elimination
    std::vector<std::vector<std::uint64_t>> rows(3, std::vector<std::uint64_t>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b[i][j];
    std::vector<int> pivots;
    std::size_t rank_b = 0;
    for (std::size_t col = 0; col < 3 && rank_b < 3; ++col) {
        std::size_t sel = rank_b;
        while (sel < 3 && rows[sel][col] == 0) ++sel;
        if (sel == 3) continue;
        std::swap(rows[sel], rows[rank_b]);
        std::uint64_t inv = zp.inv(rows[rank_b][col]);
        for (auto& x : rows[rank_b]) x = zp.mul(x, inv);
        for (std::size_t r = 0; r < 3; ++r) {
            if (r == rank_b) continue;
            std::uint64_t f = rows[r][col];
            if (!f) continue;
            for (std::size_t j = 0; j < 3; ++j) rows[r][j] = zp.sub(rows[r][j], zp.mul(f, rows[rank_b][j]));
        }
        pivots.push_back(static_cast<int>(col));
        ++rank_b;
    }
    std::vector<std::vector<std::uint64_t>> radical;
    for (int col = 0; col < 3; ++col) {
        if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
        std::vector<std::uint64_t> v(3, 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (std::size_t r = 0; r < rank_b; ++r)
            v[static_cast<std::size_t>(pivots[r])] = zp.neg(rows[r][static_cast<std::size_t>(col)]);
        radical.push_back(std::move(v));
    }
    // q restricted to the radical is additive; its kernel K gives
    // rank(q) = 3 - dim K
    auto eval_q = [&](const std::vector<std::uint64_t>& v) {
        return q.eval(v);
    };
    std::vector<std::vector<std::uint64_t>> kernel;
    if (radical.empty()) {
        out.rank = 3;
        return out;
    }
    if (zp.p != 2) {
        // odd characteristic: q vanishes on the whole radical
        kernel = radical;
    } else {
        // F_2: v -> q(v) is linear on the radical
        std::vector<std::uint64_t> vals;
        for (auto& v : radical) vals.push_back(eval_q(v));
        // kernel of the 1 x dim functional
        std::size_t pivot = radical.size();
        for (std::size_t i = 0; i < radical.size(); ++i)
            if (vals[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot == radical.size()) {
            kernel = radical;
        } else {
            for (std::size_t i = 0; i < radical.size(); ++i) {
                if (i == pivot) continue;
                std::vector<std::uint64_t> v(3);
                for (int j = 0; j < 3; ++j)
                    v[static_cast<std::size_t>(j)] =
                        zp.sub(radical[i][static_cast<std::size_t>(j)],
                               zp.mul(zp.mul(vals[i], zp.inv(vals[pivot])), radical[pivot][static_cast<std::size_t>(j)]));
                kernel.push_back(std::move(v));
            }
        }
    }
    out.rank = 3 - static_cast<int>(kernel.size());
    if (out.rank == 2) {
        if (kernel.size() != 1) throw std::logic_error("classify_ternary_quadric: kernel dimension mismatch");
        out.kernel_point = kernel[0];
    } else if (out.rank == 1) {
        if (kernel.size() != 2) throw std::logic_error("classify_ternary_quadric: kernel dimension mismatch");
        // l = k1 x k2 (cross product) vanishes exactly on the kernel plane
        const auto& u = kernel[0];
        const auto& v = kernel[1];
        out.linear = {zp.sub(zp.mul(u[1], v[2]), zp.mul(u[2], v[1])),
                      zp.sub(zp.mul(u[2], v[0]), zp.mul(u[0], v[2])),
                      zp.sub(zp.mul(u[0], v[1]), zp.mul(u[1], v[0]))};
    }
    return out;
}

// tangent-cone quadric of the reduction at [1:0:0:0] (x0-degree-1 slice),
// returned as a genuine ternary polynomial in x1, x2, x3
MultiPoly tangent_quadric(const MultiPoly& fbar) {
    Zp zp = fbar.field();
    MultiPoly q(zp, 4);
    for (const auto& [m, c] : fbar.terms()) {
        if (m.e[0] != 1) continue;
        Mono mm = m;
        mm.e[0] = 0;
        q.add_term(mm, c);
    }
    return q.drop_var(0);
}

} // namespace

std::vector<int> claimed_weight(const IntMat& t, const mpz_class& p) {
    auto snf = smith_normal_form(t);
    std::vector<int> w;
    for (const auto& d : snf.diag) w.push_back(static_cast<int>(vp_exponent(d, p)));
    std::sort(w.begin(), w.end());
    int w0 = w.empty() ? 0 : w[0];
    for (auto& x : w) x -= w0;
    return w;
}

StepResult one_step(const Form& f, const mpz_class& p) {
    if (f.n_vars() != 4) throw std::invalid_argument("minimize_cubic_surface: quaternary form required");
    if (f.degree() != 3) throw std::invalid_argument("minimize_cubic_surface: cubic required");
    auto v = valuation(f, p);
    if (!v || *v != 0) throw std::invalid_argument("minimize_cubic_surface: form not primitive at p");
    StepResult fail{false, f, IntMat::identity(4), 0, {}};

    fp::MultiPoly fbar = fp::reduce_mod_p(f, p);
    fp::Zp zp = fbar.field();

    // [0,0,0,1]: reduction splits off a plane
    {
        auto lf = fp::linear_factors(fbar);
        if (!lf.factors.empty()) {
            IntMat t = fp::move_hyperplane_to_last(lf.factors.front().first, p);
            auto [g, e] = apply_weight(f, t, WeightVector{{0, 0, 0, 1}}, p);
            if (e < 1) throw std::logic_error("minimize_cubic_surface: [0,0,0,1] failed on a split form");
            IntMat full = IntMat::diag_p_powers(p, {0, 0, 0, 1}) * t;
            verify_instability_certificate(f, full, e, p);
            return StepResult{true, g, full, e, claimed_weight(full, p)};
        }
    }

    fp::SingularLocusReport locus = fp::cubic_surface_singular_locus(fbar);

    // [0,0,1,1]: singular line consisting of very singular points
    if (locus.kind == fp::SingularLocusReport::Kind::singular_line) {
        const auto& [lp, lq] = *locus.line_span;
        IntMat t = fp::move_line_to_front(lp, lq, p);
        auto [g, e] = apply_weight(f, t, WeightVector{{0, 0, 1, 1}}, p);
        if (e >= 2) {
            IntMat full = IntMat::diag_p_powers(p, {0, 0, 1, 1}) * t;
            verify_instability_certificate(f, full, e, p);
            return StepResult{true, g, full, e, claimed_weight(full, p)};
        }
    }

    fp::VerySingularReport vs = fp::very_singular_points(f, p, locus);
    if (vs.whole_line)
        throw std::logic_error("minimize_cubic_surface: very singular line escaped the [0,0,1,1] test");

    for (const auto& pt : vs.points) {
        IntMat t1 = fp::move_point_to_first(pt, p);
        auto [f1, e1] = apply_weight(f, t1, WeightVector{{0, 1, 1, 1}}, p);
        IntMat s1 = IntMat::diag_p_powers(p, {0, 1, 1, 1}) * t1;
        if (e1 >= 3) {
            verify_instability_certificate(f, s1, e1, p);
            return StepResult{true, f1, s1, e1, claimed_weight(s1, p)};
        }
        if (e1 < 2) throw std::logic_error("minimize_cubic_surface: very singular point with valuation < 2");
        long gamma = 9 - 4 * e1; // = 1

        // tangent cone at the moved point decides the remaining chains
        fp::MultiPoly fbar_moved = fbar.subst_linear(fp::reduce_matrix(t1, zp));
        QuadricClass qc = classify_ternary_quadric(tangent_quadric(fbar_moved));

        if (qc.rank == 2) {
            // singular line of the rank-2 quadric joins the point and the
            // radical direction; test [0,0,1,1] on F1 there
            fp::ProjPoint p0 = fp::normalize_point({1, 0, 0, 0}, zp);
            fp::ProjPoint p1 = fp::normalize_point(
                {0, qc.kernel_point[0], qc.kernel_point[1], qc.kernel_point[2]}, zp);
            IntMat t2 = fp::move_line_to_front(p0, p1, p);
            auto [f2, e2] = apply_weight(f1, t2, WeightVector{{0, 0, 1, 1}}, p);
            if (gamma + 6 - 4 * e2 < 0) {
                IntMat full = (IntMat::diag_p_powers(p, {0, 0, 1, 1}) * t2) * s1;
                verify_instability_certificate(f, full, e1 + e2, p);
                return StepResult{true, f2, full, e1 + e2, claimed_weight(full, p)};
            }
        } else if (qc.rank == 1) {
            // double plane; move it to x3 and apply [0,0,0,1] to F1
            fp::ProjLinearForm plane =
                fp::normalize_form({0, qc.linear[0], qc.linear[1], qc.linear[2]}, zp);
            IntMat t3 = fp::move_hyperplane_to_last(plane, p);
            auto [f2, e3] = apply_weight(f1, t3, WeightVector{{0, 0, 0, 1}}, p);
            IntMat s2 = (IntMat::diag_p_powers(p, {0, 0, 0, 1}) * t3) * s1;
            long gamma2 = gamma + 3 - 4 * e3;
            if (gamma2 < 0) {
                verify_instability_certificate(f, s2, e1 + e3, p);
                return StepResult{true, f2, s2, e1 + e3, claimed_weight(s2, p)};
            }
            // then either [0,0,0,1] (-> overall [0,1,2,2]) or [0,1,1,1]
            // (-> [0,2,2,3]) on the result
            fp::MultiPoly f2bar = fp::reduce_mod_p(f2, p);
            auto lf2 = fp::linear_factors(f2bar);
            if (!lf2.factors.empty()) {
                IntMat t4 = fp::move_hyperplane_to_last(lf2.factors.front().first, p);
                auto [f3, e4] = apply_weight(f2, t4, WeightVector{{0, 0, 0, 1}}, p);
                if (gamma2 + 3 - 4 * e4 < 0) {
                    IntMat full = (IntMat::diag_p_powers(p, {0, 0, 0, 1}) * t4) * s2;
                    verify_instability_certificate(f, full, e1 + e3 + e4, p);
                    return StepResult{true, f3, full, e1 + e3 + e4, claimed_weight(full, p)};
                }
            } else {
                fp::VerySingularReport vs2 = fp::very_singular_points(f2, p);
                for (const auto& pt2 : vs2.points) {
                    IntMat t5 = fp::move_point_to_first(pt2, p);
                    auto [f3, e5] = apply_weight(f2, t5, WeightVector{{0, 1, 1, 1}}, p);
                    if (gamma2 + 9 - 4 * e5 < 0) {
                        IntMat full = (IntMat::diag_p_powers(p, {0, 1, 1, 1}) * t5) * s2;
                        verify_instability_certificate(f, full, e1 + e3 + e5, p);
                        return StepResult{true, f3, full, e1 + e3 + e5, claimed_weight(full, p)};
                    }
                }
            }
        }
        // rank 0 or 3: no chain applies at this point
    }
    return fail;
}

std::pair<Form, TransformRecord> minimize(const Form& f, const mpz_class& p, long step_cap) {
    if (f.is_zero()) throw std::invalid_argument("minimize_cubic_surface: zero form");
    long e = *valuation(f, p);
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    Form g = f.divided_by(pe);
    IntMat t = IntMat::identity(4);
    long steps = 0;
    for (;;) {
        StepResult s = one_step(g, p);
        if (!s.success) break;
        if (++steps > step_cap)
            throw std::runtime_error(
                "minimize_cubic_surface: step cap exceeded (input unstable at p, or raise the cap)");
        g = s.form;
        t = s.t * t;
        e += s.e;
    }
    return {g, TransformRecord{t, e, p}};
}

} // namespace hymin::surface
