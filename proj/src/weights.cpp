#include "weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace hymin::weights {

std::vector<std::vector<int>> index_set(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
    // ascending lex enumeration of compositions of d into n+1 parts
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == n) {
            cur[static_cast<std::size_t>(pos)] = rest;
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= rest; ++k) {
            cur[static_cast<std::size_t>(pos)] = k;
            rec(pos + 1, rest - k);
        }
    };
    rec(0, d);
    return out;
}

std::vector<long> fw_profile(const WeightVector& w, int n, int d) {
    if (w.size() != n + 1) throw std::invalid_argument("fw_profile: length mismatch");
    auto idx = index_set(n, d);
    std::vector<long> out;
    out.reserve(idx.size());
    long sw = w.sum();
    for (const auto& i : idx) {
        long dot = 0; // <v_i, w> = d*sum(w) - (n+1)*<i,w>
        for (int j = 0; j <= n; ++j) dot += static_cast<long>(i[static_cast<std::size_t>(j)]) * w.w[static_cast<std::size_t>(j)];
        long vi = static_cast<long>(d) * sw - static_cast<long>(n + 1) * dot;
        long f = 0;
        if (vi >= 0) f = vi / (n + 1) + 1;
        out.push_back(f);
    }
    return out;
}

bool dominates(const WeightVector& w, const WeightVector& w2, int n, int d) {
    auto a = fw_profile(w, n, d);
    auto b = fw_profile(w2, n, d);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

bool dominates_prefilter(const WeightVector& w, const WeightVector& w2, int n, int d) {
    auto idx = index_set(n, d);
    long sw = w.sum(), sw2 = w2.sum();
    for (const auto& i : idx) {
        long dot = 0, dot2 = 0;
        for (int j = 0; j <= n; ++j) {
            dot += static_cast<long>(i[static_cast<std::size_t>(j)]) * w.w[static_cast<std::size_t>(j)];
            dot2 += static_cast<long>(i[static_cast<std::size_t>(j)]) * w2.w[static_cast<std::size_t>(j)];
        }
        long vi = static_cast<long>(d) * sw - static_cast<long>(n + 1) * dot;
        long vi2 = static_cast<long>(d) * sw2 - static_cast<long>(n + 1) * dot2;
        if (vi >= 0 && vi2 < vi) return false;
    }
    return true;
}

long enumeration_bound(int n, int d) {
    if (n == 1) return 1;
    if (n == 2) return d;
    // 2*n*d^{n-1} / gcd(d, n+1)
    long b = 2 * static_cast<long>(n);
    for (int k = 0; k < n - 1; ++k) b *= d;
    return b / std::gcd(static_cast<long>(d), static_cast<long>(n) + 1);
}

namespace {

// primitive normalized weight vectors with w_n <= bound, ordered by
// ascending sum then lex
std::vector<WeightVector> enumerate_candidates(int n, long bound) {
    std::vector<WeightVector> out;
    std::vector<int> w(static_cast<std::size_t>(n) + 1, 0); // w_0 = 0 fixed
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n + 1) {
            long g = 0;
            for (int x : w) g = std::gcd(g, static_cast<long>(x));
            if (g == 1) out.push_back(WeightVector{w});
            return;
        }
        for (int v = w[static_cast<std::size_t>(pos) - 1]; v <= static_cast<int>(bound); ++v) {
            w[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(), [](const WeightVector& a, const WeightVector& b) {
        long sa = a.sum(), sb = b.sum();
        if (sa != sb) return sa < sb;
        return a.w < b.w;
    });
    return out;
}

} // namespace

MinimalWeightSet minimal_complete_set(int n, int d, int threads) {
    if (n < 1 || d < 1) throw std::invalid_argument("minimal_complete_set: need n, d >= 1");
    MinimalWeightSet out;
    out.n = n;
    out.d = d;
    if (n == 1) {
        out.bound = 1;
        out.vectors = {WeightVector{{0, 0}}, WeightVector{{0, 1}}};
        return out;
    }
    out.bound = enumeration_bound(n, d);
    if (out.bound > 4096) throw std::length_error("minimal_complete_set: enumeration bound too large");
    auto cands = enumerate_candidates(n, out.bound);

    auto leq = [](const std::vector<long>& a, const std::vector<long>& b) {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] > b[k]) return false;
        return true;
    };

    // Sweep in enumeration order: keep a candidate iff no kept vector
    // dominates it. Profiles are computed block-wise (in parallel when
    // requested) so memory stays proportional to the block, and cached only
    // for the kept set.
    std::vector<WeightVector> kept;
    std::vector<std::vector<long>> kept_prof;
    const std::size_t block = 2048;
    std::vector<std::vector<long>> buf;
    for (std::size_t base = 0; base < cands.size(); base += block) {
        std::size_t hi = std::min(cands.size(), base + block);
        buf.assign(hi - base, {});
        auto compute_range = [&](std::size_t lo2, std::size_t hi2) {
            for (std::size_t i = lo2; i < hi2; ++i) buf[i] = fw_profile(cands[base + i], n, d);
        };
        if (threads > 1 && hi - base > 256) {
            std::vector<std::thread> pool;
            std::size_t chunk = (hi - base) / static_cast<std::size_t>(threads) + 1;
            for (int t = 0; t < threads; ++t) {
                std::size_t lo2 = static_cast<std::size_t>(t) * chunk;
                std::size_t hi2 = std::min(hi - base, lo2 + chunk);
                if (lo2 < hi2) pool.emplace_back(compute_range, lo2, hi2);
            }
            for (auto& th : pool) th.join();
        } else {
            compute_range(0, hi - base);
        }
        for (std::size_t i = 0; i < hi - base; ++i) {
            bool dominated = false;
            for (const auto& kp : kept_prof) {
                if (leq(kp, buf[i])) {
                    if (kp == buf[i]) out.profile_ties = true;
                    dominated = true;
                    break;
                }
            }
            if (!dominated) {
                kept.push_back(cands[base + i]);
                kept_prof.push_back(std::move(buf[i]));
            }
        }
    }
    // final minimality pass over the (small) kept set: a later vector can
    // still dominate an earlier one
    std::vector<bool> drop(kept.size(), false);
    for (std::size_t a = 0; a < kept.size(); ++a)
        for (std::size_t b = 0; b < kept.size(); ++b) {
            if (a == b || drop[a] || drop[b]) continue;
            if (leq(kept_prof[a], kept_prof[b])) drop[b] = true;
        }
    for (std::size_t a = 0; a < kept.size(); ++a)
        if (!drop[a]) out.vectors.push_back(kept[a]);
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

std::vector<WeightVector> n2_complete_set(int d) {
    if (d < 1) throw std::invalid_argument("n2_complete_set: need d >= 1");
    // Stern-Brocot traversal: fraction a/b corresponds to z1 = b, z2 = a,
    // i.e. w = [0, b, a+b]. Subdivide while the mediant still satisfies
    // a + b <= d; emitted endpoints are exactly those of the minimal basic
    // intervals with a_- + a_+ + b_- + b_+ > d.
    std::vector<WeightVector> out;
    auto emit = [&](long a, long b) {
        WeightVector w{{0, static_cast<int>(b), static_cast<int>(a + b)}};
        out.push_back(w);
    };
    struct Iv {
        long am, bm, ap, bp;
    };
    std::vector<Iv> stack{{0, 1, 1, 0}};
    while (!stack.empty()) {
        Iv iv = stack.back();
        stack.pop_back();
        long a = iv.am + iv.ap, b = iv.bm + iv.bp;
        if (a + b > d) {
            emit(iv.am, iv.bm);
            emit(iv.ap, iv.bp);
        } else {
            stack.push_back({iv.am, iv.bm, a, b});
            stack.push_back({a, b, iv.ap, iv.bp});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<long> flag_multiplicities(const WeightVector& w, int n, int d) {
    if (w.size() != n + 1) throw std::invalid_argument("flag_multiplicities: length mismatch");
    if (!w.normalized() || w.w.back() == 0)
        throw std::invalid_argument("flag_multiplicities: need a normalized nonzero weight");
    long sw = w.sum();
    long wn = w.w.back();
    std::vector<long> out;
    for (int k = 0; k < n; ++k) {
        long wk = w.w[static_cast<std::size_t>(k)];
        if (static_cast<long>(n + 1) * wk > sw) {
            out.push_back(0);
            continue;
        }
        // floor(d*(sum - (n+1) w_k) / ((n+1)(w_n - w_k))) + 1;  w_k < w_n here
        long num = static_cast<long>(d) * (sw - static_cast<long>(n + 1) * wk);
        long den = static_cast<long>(n + 1) * (wn - wk);
        out.push_back(num / den + 1);
    }
    return out;
}

} // namespace hymin::weights
