#include "global.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <stdexcept>

#include "fp.hpp"
#include "invariants.hpp"
#include "minimize_binary.hpp"
#include "minimize_curve.hpp"
#include "minimize_surface.hpp"

namespace hymin::global {

std::uint64_t default_seed() { return fp::process_seed(); }
void set_default_seed(std::uint64_t seed) { fp::set_process_seed(seed); }

namespace {
std::atomic<int> g_threads{1};
}

int worker_threads() { return g_threads.load(); }
void set_worker_threads(int n) { g_threads.store(n < 1 ? 1 : n); }

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    // GMP: 2 = certainly prime, 1 = probably. Below 2^64 its test (BPSW +
    // extra MR rounds) is known exact, so treat 1 as certain there.
    int r = mpz_probab_prime_p(n.get_mpz_t(), 32);
    if (r == 2) return true;
    if (r == 0) return false;
    return true;
}

namespace {

bool prime_certified(const mpz_class& n) {
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return true;
    return mpz_probab_prime_p(n.get_mpz_t(), 32) == 2;
}

mpz_class pollard_rho(const mpz_class& n, std::mt19937_64& rng) {
    // Brent's cycle variant
    if (n % 2 == 0) return 2;
    for (;;) {
        mpz_class y = mpz_class(static_cast<unsigned long>(rng() % 1000000007ULL)) % n;
        mpz_class c = mpz_class(static_cast<unsigned long>(rng() % 1000000007ULL)) % n;
        if (c == 0) c = 1;
        mpz_class m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
            mpz_class k = 0;
            while (k < r && g == 1) {
                ys = y;
                mpz_class rk = r - k;
                mpz_class lim = std::min(m, rk);
                for (mpz_class i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
        // cycle degenerated; retry with new parameters
    }
}

void factor_rec(const mpz_class& n, std::mt19937_64& rng, FactorResult& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        if (!prime_certified(n)) out.all_certified = false;
        out.factors[n] += 1;
        return;
    }
    // perfect powers first: rho stalls on p^k with large p
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        for (unsigned long k = 2; k <= bits; ++k) {
            mpz_class root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                FactorResult base;
                base.all_certified = out.all_certified;
                factor_rec(root, rng, base);
                out.all_certified = base.all_certified;
                for (const auto& [q, e] : base.factors) out.factors[q] += e * static_cast<int>(k);
                return;
            }
        }
    }
    mpz_class d = pollard_rho(n, rng);
    factor_rec(d, rng, out);
    factor_rec(n / d, rng, out);
}

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 1000000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

} // namespace

FactorResult factor_integer(const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero input");
    FactorResult out;
    mpz_class m = abs(n);
    for (unsigned long q : small_primes()) {
        if (m == 1) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
            out.factors[mpz_class(q)] += 1;
            m /= static_cast<unsigned long>(q);
        }
        if (mpz_cmp_ui(m.get_mpz_t(), q * q) < 0) break;
    }
    if (m > 1) {
        if (is_prime(m)) {
            if (!prime_certified(m)) out.all_certified = false;
            out.factors[m] += 1;
        } else {
            std::mt19937_64 rng(default_seed() ^ 0x5bf03635ULL);
            factor_rec(m, rng, out);
        }
    }
    return out;
}

namespace {

// divided derivatives of f(x) = F(1, x) up to order floor(d/2), as
// coefficient vectors indexed by x-power
std::vector<std::vector<mpz_class>> divided_derivatives_binary(const Form& f) {
    int d = f.degree();
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& [e, c] : f.terms()) coeffs[static_cast<std::size_t>(e[1])] = c;
    std::vector<std::vector<mpz_class>> out;
    for (int k = 0; k <= d / 2; ++k) {
        std::vector<mpz_class> dk;
        for (int j = k; j <= d; ++j) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(k));
            dk.push_back(coeffs[static_cast<std::size_t>(j)] * b);
        }
        out.push_back(std::move(dk));
    }
    return out;
}

std::vector<mpz_class> primes_of(const mpz_class& n) {
    std::vector<mpz_class> out;
    if (n == 0) return out;
    for (const auto& [q, e] : factor_integer(n).factors) out.push_back(q);
    return out;
}

} // namespace

std::vector<mpz_class> candidate_primes_binary(const Form& f) {
    if (f.n_vars() != 2) throw std::invalid_argument("candidate_primes_binary: binary form required");
    int d = f.degree();
    if (d < 2) throw std::invalid_argument("candidate_primes_binary: degree >= 2 required");
    Form g = normalized(f);

    // x0-side: all coefficients of x0^j x1^{d-j}, j <= floor(d/2), divisible
    mpz_class g1 = 0;
    for (const auto& [e, c] : g.terms())
        if (e[0] <= d / 2) g1 = gcd(g1, c);
    if (g1 == 0)
        throw std::invalid_argument("candidate_primes_binary: form is a nullform (high-order factor over Q)");

    // finite side: pairwise resultants of the divided derivatives, framed at
    // their actual degrees
    auto derivs = divided_derivatives_binary(g);
    for (auto& dk : derivs)
        while (!dk.empty() && dk.back() == 0) dk.pop_back();
    mpz_class g2 = 0;
    for (std::size_t i = 0; i < derivs.size(); ++i)
        for (std::size_t j = i + 1; j < derivs.size(); ++j) {
            if (derivs[i].empty() || derivs[j].empty()) continue;
            int da = static_cast<int>(derivs[i].size()) - 1;
            int db = static_cast<int>(derivs[j].size()) - 1;
            if (da == 0 && db == 0) continue;
            mpz_class r = sylvester_resultant(derivs[i], da, derivs[j], db);
            if (r != 0) g2 = gcd(g2, r);
        }
    if (g2 == 0 && abs(g1) == 1)
        throw std::invalid_argument("candidate_primes_binary: all derivative resultants vanish");

    std::set<mpz_class> primes;
    for (const auto& q : primes_of(g1)) primes.insert(q);
    for (const auto& q : primes_of(g2)) primes.insert(q);
    return {primes.begin(), primes.end()};
}

std::vector<mpz_class> candidate_primes_ternary(const Form& f) {
    if (f.n_vars() != 3) throw std::invalid_argument("candidate_primes_ternary: ternary form required");
    int d = f.degree();
    Form g = normalized(f);
    mpz_class a = 0, b = 0;
    if (d % 2 == 0) {
        auto [i1, i2] = inv::invariants_even(g);
        a = i1.value;
        b = i2.value;
    } else {
        inv::Covariant cov = inv::cubic_covariant(g);
        if (cov.result.is_zero())
            throw std::invalid_argument("candidate_primes_ternary: cubic covariant vanishes (needs manual primes)");
        auto [c4, c6] = inv::ternary_cubic_invariants(cov.result);
        a = c4.value;
        b = c6.value;
    }
    if (a == 0 && b == 0)
        throw std::invalid_argument("candidate_primes_ternary: both invariants vanish (needs manual primes)");
    mpz_class n = gcd(abs(a), abs(b));
    return primes_of(n);
}

namespace {

mpz_class coeff_norm_sq(const Form& f) {
    mpz_class s = 0;
    for (const auto& [e, c] : f.terms()) s += c * c;
    return s;
}

// determinant-1 signed permutation matrices
std::vector<IntMat> signed_permutations(int n) {
    std::vector<IntMat> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        // parity of the permutation
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
        for (int signs = 0; signs < (1 << n); ++signs) {
            int neg = __builtin_popcount(static_cast<unsigned>(signs));
            int det_sign = ((inv + neg) % 2 == 0) ? 1 : -1;
            if (det_sign != 1) continue;
            IntMat m(static_cast<std::size_t>(n));
            bool ident = true;
            for (int i = 0; i < n; ++i) {
                int s = (signs >> i) & 1 ? -1 : 1;
                m(static_cast<std::size_t>(i), static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])) = s;
                if (perm[static_cast<std::size_t>(i)] != i || s != 1) ident = false;
            }
            if (!ident) out.push_back(std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<IntMat> shear_moves(int n) {
    std::vector<IntMat> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int s : {1, -1}) {
                IntMat m = IntMat::identity(static_cast<std::size_t>(n));
                m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s;
                out.push_back(std::move(m));
            }
        }
    return out;
}

} // namespace

std::pair<Form, IntMat> adhoc_reduce(const Form& f) {
    int n = f.n_vars();
    if (n != 3 && n != 4) throw std::invalid_argument("adhoc_reduce: 3 or 4 variables required");
    if (f.is_zero()) throw std::invalid_argument("adhoc_reduce: zero form");

    const auto shears = shear_moves(n);
    const auto perms = signed_permutations(n);

    Form cur = f;
    IntMat total = IntMat::identity(static_cast<std::size_t>(n));
    mpz_class cur_norm = coeff_norm_sq(cur);

    // shear by k along direction (i, j, sign): x_i -> x_i + k*s*x_j
    auto shear_pow = [&](const IntMat& m, long k) {
        IntMat mm = IntMat::identity(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 0)
                    mm(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * k;
        return mm;
    };

    for (;;) {
        // steepest move among all candidates; shear directions carry an
        // integer line search (doubling bracket, then halving refinement)
        bool improved = false;
        IntMat best_m(0);
        Form best_f = cur;
        mpz_class best_norm = cur_norm;
        for (const IntMat& m : shears) {
            if (coeff_norm_sq(substitute(cur, m)) >= cur_norm) continue;
            long k = 1;
            mpz_class nk = coeff_norm_sq(substitute(cur, shear_pow(m, k)));
            for (;;) {
                mpz_class n2 = coeff_norm_sq(substitute(cur, shear_pow(m, 2 * k)));
                if (n2 >= nk) break;
                k *= 2;
                nk = n2;
            }
            for (long step = k / 2; step >= 1; step /= 2) {
                for (long cand : {k - step, k + step}) {
                    if (cand < 1) continue;
                    mpz_class nc = coeff_norm_sq(substitute(cur, shear_pow(m, cand)));
                    if (nc < nk) {
                        k = cand;
                        nk = nc;
                    }
                }
            }
            if (nk < best_norm) {
                best_norm = nk;
                best_m = shear_pow(m, k);
                best_f = substitute(cur, best_m);
            }
        }
        for (const IntMat& m : perms) {
            mpz_class norm = coeff_norm_sq(substitute(cur, m));
            if (norm < best_norm) {
                best_norm = norm;
                best_m = m;
                best_f = substitute(cur, m);
            }
        }
        if (best_norm < cur_norm) {
            cur = best_f;
            total = best_m * total;
            cur_norm = best_norm;
            improved = true;
        }
        if (!improved) break;
    }
    mpz_class dt = total.det();
    if (dt != 1 && dt != -1) throw std::logic_error("adhoc_reduce: transform not unimodular");
    return {cur, total};
}

std::pair<Form, GlobalRecord> minimize_global(const Form& f,
                                              std::optional<std::vector<mpz_class>> primes) {
    int n = f.n_vars();
    if (f.is_zero()) throw std::invalid_argument("minimize_global: zero form");
    if (n < 2 || n > 4) throw std::invalid_argument("minimize_global: 2 to 4 variables supported");
    if (n == 4 && f.degree() != 3)
        throw std::invalid_argument("minimize_global: quaternary inputs must be cubic");
    if (n == 4 && !primes)
        throw std::invalid_argument("minimize_global: prime list required for quaternary cubics");

    std::vector<mpz_class> plist;
    if (primes) {
        plist = *primes;
    } else if (n == 2) {
        plist = candidate_primes_binary(f);
    } else {
        plist = candidate_primes_ternary(f);
    }
    std::sort(plist.begin(), plist.end());
    plist.erase(std::unique(plist.begin(), plist.end()), plist.end());
    for (const auto& q : plist)
        if (!is_prime(q)) throw std::invalid_argument("minimize_global: non-prime in the prime list");

    GlobalRecord rec;
    rec.matrix = IntMat::identity(static_cast<std::size_t>(n));

    // global content first
    Form cur = f;
    {
        mpz_class c = content(cur);
        if (c != 1) {
            cur = cur.divided_by(c);
            rec.scale *= c;
            for (const auto& [q, e] : factor_integer(c).factors) rec.scale_exps[q] += e;
        }
    }
    auto reduce_now = [&]() {
        if (n == 2) return;
        auto [g, t] = adhoc_reduce(cur);
        cur = g;
        rec.matrix = t * rec.matrix;
    };
    reduce_now();

    for (const auto& p : plist) {
        Form before = cur;
        TransformRecord r;
        if (n == 2) {
            auto [g, rr] = binary::minimize(cur, p);
            cur = g;
            r = rr;
        } else if (n == 3) {
            auto [g, rr] = curve::minimize(cur, p);
            cur = g;
            r = rr;
        } else {
            auto [g, rr] = surface::minimize(cur, p);
            cur = g;
            r = rr;
        }
        rec.matrix = r.matrix * rec.matrix;
        if (r.scale_exp > 0) {
            mpz_class pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(r.scale_exp));
            rec.scale *= pe;
            rec.scale_exps[p] += r.scale_exp;
        }
        if (r.scale_exp > 0 || !r.matrix.is_identity()) rec.primes_touched.push_back(p);
        reduce_now();
        (void)before;
    }
    return {cur, rec};
}

} // namespace hymin::global
