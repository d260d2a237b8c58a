#include "oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "weights.hpp"

namespace hymin::oracle {

namespace {

// int64 Smith diagonal for the small matrices of the enumeration (entries
// bounded by p^max(w), quotients keep values small)
std::vector<long long> smith_diag_i64(std::vector<std::vector<long long>> m) {
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t n = std::min(rows, cols);
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            std::size_t pi = k, pj = k;
            long long best = 0;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    long long v = m[i][j] < 0 ? -m[i][j] : m[i][j];
                    if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
                }
            if (best == 0) goto done;
            std::swap(m[k], m[pi]);
            if (pj != k)
                for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pj]);
            bool dirty = false;
            for (std::size_t i = k + 1; i < rows; ++i) {
                long long q = m[i][k] / m[k][k];
                if (q)
                    for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
                if (m[i][k] != 0) dirty = true;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                long long q = m[k][j] / m[k][k];
                if (q)
                    for (std::size_t i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
                if (m[k][j] != 0) dirty = true;
            }
            if (dirty) continue;
            bool bad = false;
            for (std::size_t i = k + 1; i < rows && !bad; ++i)
                for (std::size_t j = k + 1; j < cols && !bad; ++j)
                    if (m[i][j] % m[k][k] != 0) {
                        for (std::size_t c = k; c < cols; ++c) m[k][c] += m[i][c];
                        bad = true;
                    }
            if (!bad) break;
        }
        if (m[k][k] < 0) m[k][k] = -m[k][k];
    }
done:
    std::vector<long long> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = m[i][i];
    return d;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

// compositions of `total` into `parts` slots, each entry <= hi, such that the
// descending rearrangement is majorized by the descending rearrangement of w
// (a necessary condition for the Smith type to match)
void compositions_majorized(int total, int parts, const std::vector<int>& w_desc,
                            std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == parts - 1) {
            cur[static_cast<std::size_t>(pos)] = rest;
            std::vector<int> sorted = cur;
            std::sort(sorted.rbegin(), sorted.rend());
            long run = 0, wrun = 0;
            for (std::size_t k = 0; k < sorted.size(); ++k) {
                run += sorted[k];
                wrun += w_desc[k];
                if (run > wrun) return;
            }
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, rest - v);
        }
    };
    rec(0, total);
}

} // namespace

std::vector<IntMat> coset_lattices(const WeightVector& w, const mpz_class& p, unsigned long cap) {
    if (!w.normalized()) throw std::invalid_argument("coset_lattices: weight not normalized");
    int n1 = w.size();
    long total = w.sum();
    if (mpz_sizeinbase(p.get_mpz_t(), 2) * static_cast<std::size_t>(std::max<long>(total, 1)) > 40)
        throw std::length_error("coset_lattices: p^sum(w) too large for the enumeration");
    long long pl = mpz_get_si(p.get_mpz_t());

    std::vector<long long> target(static_cast<std::size_t>(n1));
    for (int i = 0; i < n1; ++i) target[static_cast<std::size_t>(i)] = ipow(pl, w.w[static_cast<std::size_t>(i)]);

    std::vector<int> w_desc(w.w.begin(), w.w.end());
    std::sort(w_desc.rbegin(), w_desc.rend());
    std::vector<std::vector<int>> comps;
    compositions_majorized(static_cast<int>(total), n1, w_desc, comps);

    std::vector<IntMat> out;
    unsigned long considered = 0;
    std::vector<std::vector<long long>> h(static_cast<std::size_t>(n1),
                                          std::vector<long long>(static_cast<std::size_t>(n1), 0));
    for (const auto& a : comps) {
        for (int i = 0; i < n1; ++i) {
            for (int j = 0; j < n1; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = ipow(pl, a[static_cast<std::size_t>(i)]);
        }
        // free positions: (i, j) with i < j, entry in [0, p^{a_j})
        std::vector<std::pair<int, int>> free_pos;
        unsigned long volume = 1;
        bool overflow = false;
        for (int j = 0; j < n1; ++j)
            for (int i = 0; i < j; ++i) {
                if (a[static_cast<std::size_t>(j)] == 0) continue;
                free_pos.emplace_back(i, j);
                unsigned long m = static_cast<unsigned long>(ipow(pl, a[static_cast<std::size_t>(j)]));
                if (volume > cap / m + 1) overflow = true;
                volume *= m;
            }
        if (overflow || considered + volume > cap)
            throw std::length_error("coset_lattices: enumeration cap exceeded");
        considered += volume;

        std::vector<long long> counter(free_pos.size(), 0);
        for (;;) {
            for (std::size_t k = 0; k < free_pos.size(); ++k)
                h[static_cast<std::size_t>(free_pos[k].first)][static_cast<std::size_t>(free_pos[k].second)] = counter[k];
            auto d = smith_diag_i64(h);
            if (std::equal(d.begin(), d.end(), target.begin())) {
                IntMat m(static_cast<std::size_t>(n1));
                for (int i = 0; i < n1; ++i)
                    for (int j = 0; j < n1; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = mpz_class(static_cast<long>(h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
                out.push_back(std::move(m));
            }
            // increment mixed-radix counter
            std::size_t k = 0;
            while (k < free_pos.size()) {
                long long radix = ipow(pl, a[static_cast<std::size_t>(free_pos[k].second)]);
                if (++counter[k] < radix) break;
                counter[k] = 0;
                ++k;
            }
            if (k == free_pos.size()) break;
            if (free_pos.empty()) break;
        }
    }
    return out;
}

const std::vector<IntMat>& cached_lattices(const WeightVector& w, const mpz_class& p,
                                           unsigned long cap) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<int>, mpz_class>, std::vector<IntMat>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(w.w, p);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    return memo.emplace(key, coset_lattices(w, p, cap)).first->second;
}

std::vector<IntMat> coset_representatives(const WeightVector& w, const mpz_class& p,
                                          unsigned long cap) {
    std::vector<IntMat> out;
    for (const auto& h : coset_lattices(w, p, cap)) {
        auto snf = smith_normal_form(h);
        // D = U H V, so H = U^{-1} D V^{-1} and M_w * V^{-1} is in the same
        // left coset as H
        IntMat us = snf.u * h; // = D * V^{-1}
        IntMat vinv(h.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = 0; j < h.size(); ++j) {
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), us(i, j).get_mpz_t(), snf.diag[i].get_mpz_t());
                if (r != 0) throw std::logic_error("coset_representatives: Smith mismatch");
                vinv(i, j) = q;
            }
        out.push_back(std::move(vinv));
    }
    return out;
}

StepResult one_step(const Form& f, const mpz_class& p,
                    const std::vector<WeightVector>& weight_set, unsigned long cap) {
    StepResult fail{false, f, IntMat::identity(static_cast<std::size_t>(f.n_vars())), 0};
    int n1 = f.n_vars();
    long d = f.degree();
    std::vector<WeightVector> ws = weight_set;
    std::sort(ws.begin(), ws.end(), [](const WeightVector& a, const WeightVector& b) {
        if (a.sum() != b.sum()) return a.sum() < b.sum();
        return a.w < b.w;
    });
    for (const auto& w : ws) {
        if (w.size() != n1) throw std::invalid_argument("oracle_one_step: weight length mismatch");
        if (w.is_zero()) continue; // content is handled by the caller
        for (const auto& m : cached_lattices(w, p, cap)) {
            Form f1 = substitute(f, m);
            auto v = valuation(f1, p);
            long e = v ? *v : 0;
            if (static_cast<long>(n1) * e > d * w.sum()) {
                mpz_class pe;
                mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
                return StepResult{true, f1.divided_by(pe), m, e};
            }
        }
    }
    return fail;
}

StepResult one_step(const Form& f, const mpz_class& p, unsigned long cap) {
    auto set = weights::minimal_complete_set(f.n_vars() - 1, f.degree());
    return one_step(f, p, set.vectors, cap);
}

std::pair<Form, TransformRecord> minimize(const Form& f, const mpz_class& p, unsigned long cap,
                                          long step_cap) {
    if (f.is_zero()) throw std::invalid_argument("oracle_minimize: zero form");
    long e = *valuation(f, p);
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    Form g = f.divided_by(pe);
    IntMat t = IntMat::identity(static_cast<std::size_t>(f.n_vars()));
    auto set = weights::minimal_complete_set(f.n_vars() - 1, f.degree());
    long steps = 0;
    for (;;) {
        StepResult s = one_step(g, p, set.vectors, cap);
        if (!s.success) break;
        if (++steps > step_cap) throw std::runtime_error("oracle_minimize: step cap exceeded");
        g = s.form;
        t = s.t * t;
        e += s.e;
    }
    return {g, TransformRecord{t, e, p}};
}

} // namespace hymin::oracle
