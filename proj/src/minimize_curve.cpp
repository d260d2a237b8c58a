#include "minimize_curve.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fp_geometry.hpp"
#include "invariants.hpp"
#include "weights.hpp"

namespace hymin::curve {

long v011(const Form& f, const mpz_class& p) {
    auto [g, e] = apply_weight(f, IntMat::identity(3), WeightVector{{0, 1, 1}}, p);
    (void)g;
    return e;
}

long v001(const Form& f, const mpz_class& p) {
    auto [g, e] = apply_weight(f, IntMat::identity(3), WeightVector{{0, 0, 1}}, p);
    (void)g;
    return e;
}

int delta_bound(int d) {
    if (d < 2) return 1;
    if (d > 40) return 2 * d - 1;
    static std::mutex mu;
    static std::map<int, int> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    auto set = weights::minimal_complete_set(2, d);
    int best = 1;
    for (const auto& w : set.vectors) best = std::max<int>(best, w.w[1] + w.w[2]);
    memo[d] = best;
    return best;
}

namespace {

struct Node {
    Form f;
    int r;
    long gamma;
    IntMat t0;
    long acc_e;
    long order; // tie-break for the best-first queue
};

} // namespace

StepResult one_step(const Form& f, const mpz_class& p, Strategy strategy) {
    if (f.n_vars() != 3) throw std::invalid_argument("minimize_plane_curve: ternary form required");
    int d = f.degree();
    if (d < 2) throw std::invalid_argument("minimize_plane_curve: degree >= 2 required");
    auto v = valuation(f, p);
    if (!v || *v != 0) throw std::invalid_argument("minimize_plane_curve: form not primitive at p");

    StepResult out{false, f, IntMat::identity(3), 0, 0};
    std::deque<Node> queue;
    long counter = 0;
    queue.push_back(Node{f, delta_bound(d), 0, IntMat::identity(3), 0, counter++});

    auto pop = [&]() -> Node {
        if (strategy == Strategy::dfs) {
            Node n = queue.back();
            queue.pop_back();
            return n;
        }
        if (strategy == Strategy::bfs) {
            Node n = queue.front();
            queue.pop_front();
            return n;
        }
        // best-first: smallest gamma, FIFO tie-break
        std::size_t best = 0;
        for (std::size_t i = 1; i < queue.size(); ++i)
            if (queue[i].gamma < queue[best].gamma ||
                (queue[i].gamma == queue[best].gamma && queue[i].order < queue[best].order))
                best = i;
        Node n = queue[best];
        queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));
        return n;
    };

    while (!queue.empty()) {
        Node node = pop();
        ++out.nodes;
        if (node.gamma < 0) {
            verify_instability_certificate(f, node.t0, node.acc_e, p);
            out.success = true;
            out.form = node.f;
            out.t = node.t0;
            out.e = node.acc_e;
            return out;
        }
        if (node.t0.divisible_by(p) || node.r <= 0) continue; // off the path or budget spent

        fp::MultiPoly fbar = fp::reduce_mod_p(node.f, p);
        if (fbar.is_zero()) throw std::logic_error("minimize_plane_curve: non-primitive node form");
        fp::LinearFactorization lf = fp::linear_factors(fbar);

        std::vector<Node> children;
        for (const auto& [l, m] : lf.factors) {
            IntMat t = fp::move_hyperplane_to_last(l, p);
            if (3 * m <= d) {
                // line of low multiplicity must meet the residual curve in a
                // high-multiplicity point
                auto frame = fp::reduce_matrix(t, fbar.field());
                fp::MultiPoly moved = fbar.subst_linear(frame);
                for (int k = 0; k < m; ++k) moved = moved.divide_by_var(2);
                fp::MultiPoly h3 = moved.set_var(2, 0);
                fp::MultiPoly h = h3.drop_var(2);
                bool good = false;
                if (!h.is_zero())
                    for (const auto& [hl, hm] : fp::binary_form_linear_factors(h))
                        if (2 * hm > d - 3 * m) {
                            good = true;
                            break;
                        }
                if (!good) continue;
            }
            auto [f1, e] = apply_weight(node.f, t, WeightVector{{0, 0, 1}}, p);
            IntMat step = IntMat::diag_p_powers(p, {0, 0, 1}) * t;
            children.push_back(Node{f1, node.r - 1, node.gamma + d - 3 * e, step * node.t0,
                                    node.acc_e + e, counter++});
        }
        // point branch: multiplicity > d/2 on the factor-free part, avoiding
        // every line found above
        if (!lf.cofactor.is_zero() && lf.cofactor.total_degree() > d / 2) {
            auto pt = fp::high_multiplicity_point(lf.cofactor, d / 2);
            if (pt) {
                bool on_line = false;
                for (const auto& [l, m] : lf.factors) {
                    std::uint64_t val = 0;
                    for (std::size_t i = 0; i < 3; ++i)
                        val = fbar.field().add(val, fbar.field().mul(l.c[i], pt->x[i]));
                    if (val == 0) {
                        on_line = true;
                        break;
                    }
                }
                if (!on_line) {
                    IntMat t = fp::move_point_to_first(*pt, p);
                    auto [f1, e] = apply_weight(node.f, t, WeightVector{{0, 1, 1}}, p);
                    IntMat step = IntMat::diag_p_powers(p, {0, 1, 1}) * t;
                    children.push_back(Node{f1, node.r - 2, node.gamma + 2 * d - 3 * e,
                                            step * node.t0, node.acc_e + e, counter++});
                }
            }
        }
        if (strategy == Strategy::dfs) {
            for (auto it = children.rbegin(); it != children.rend(); ++it) queue.push_back(*it);
        } else {
            for (auto& c : children) queue.push_back(c);
        }
    }
    return out;
}

std::pair<Form, TransformRecord> minimize(const Form& f, const mpz_class& p, Strategy strategy) {
    if (f.is_zero()) throw std::invalid_argument("minimize_plane_curve: zero form");
    long e = *valuation(f, p);
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    Form g = f.divided_by(pe);
    IntMat t = IntMat::identity(3);

    long cap = 64;
    if (auto cert = inv::semistability_certificate(g)) {
        long vd = 0;
        mpz_class x = abs(*cert);
        while (x % p == 0) {
            x /= p;
            ++vd;
        }
        cap = vd + 2;
    }
    long steps = 0;
    for (;;) {
        StepResult s = one_step(g, p, strategy);
        if (!s.success) break;
        if (++steps > cap) throw std::runtime_error("minimize_plane_curve: step cap exceeded (input unstable at p?)");
        g = s.form;
        t = s.t * t;
        e += s.e;
    }
    return {g, TransformRecord{t, e, p}};
}

} // namespace hymin::curve
