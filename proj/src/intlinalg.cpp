#include "intlinalg.hpp"

#include <stdexcept>
#include <utility>

namespace hymin {

IntMat::IntMat(std::size_t n, std::vector<mpz_class> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw std::invalid_argument("IntMat: entry count mismatch");
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::diag_p_powers(const mpz_class& p, const std::vector<int>& w) {
    IntMat m(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        mpz_class e;
        mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(w[i]));
        m(i, i) = e;
    }
    return m;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("IntMat: size mismatch in product");
    IntMat r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const mpz_class& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) r(i, j) += aik * rhs(k, j);
        }
    return r;
}

mpz_class IntMat::det() const {
    // fraction-free Gaussian elimination (Bareiss)
    std::size_t n = n_;
    if (n == 0) return 1;
    std::vector<mpz_class> m(a_);
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * n + j]; };
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = t;
            }
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : mpz_class(-at(n - 1, n - 1));
}

bool IntMat::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMat::divisible_by(const mpz_class& m) const {
    for (const auto& x : a_)
        if (x % m != 0) return false;
    return true;
}

namespace {

// Rectangular Smith elimination. Optionally tracks U (rows x rows) with
// D = U*A*V, and W = V^{-1} (cols x cols) so that A's row lattice equals the
// lattice spanned by the first rank(A) rows of W scaled by the diagonal.
struct Work {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;
    IntMat u, v, w; // w tracks V^{-1} via inverse column ops
    bool track_u = false, track_v = false, track_w = false;

    mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
        if (track_u)
            for (std::size_t c = 0; c < rows; ++c) std::swap(u(i, c), u(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
        if (track_v)
            for (std::size_t r = 0; r < cols; ++r) std::swap(v(r, i), v(r, j));
        if (track_w)
            for (std::size_t c = 0; c < cols; ++c) std::swap(w(i, c), w(j, c));
    }
    // row i -= q * row j
    void row_sub(std::size_t i, std::size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < cols; ++c) at(i, c) -= q * at(j, c);
        if (track_u)
            for (std::size_t c = 0; c < rows; ++c) u(i, c) -= q * u(j, c);
    }
    // col i -= q * col j;  inverse op on W: row j += q * row i
    void col_sub(std::size_t i, std::size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < rows; ++r) at(r, i) -= q * at(r, j);
        if (track_v)
            for (std::size_t r = 0; r < cols; ++r) v(r, i) -= q * v(r, j);
        if (track_w)
            for (std::size_t c = 0; c < cols; ++c) w(j, c) += q * w(i, c);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols; ++c) at(i, c) = -at(i, c);
        if (track_u)
            for (std::size_t c = 0; c < rows; ++c) u(i, c) = -u(i, c);
    }
};

void smith_reduce(Work& w) {
    std::size_t n = std::min(w.rows, w.cols);
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            std::size_t pi = k, pj = k;
            bool found = false;
            mpz_class best;
            for (std::size_t i = k; i < w.rows; ++i)
                for (std::size_t j = k; j < w.cols; ++j) {
                    if (w.at(i, j) == 0) continue;
                    mpz_class v = abs(w.at(i, j));
                    if (!found || v < best) { found = true; best = v; pi = i; pj = j; }
                }
            if (!found) return;
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);
            bool dirty = false;
            for (std::size_t i = k + 1; i < w.rows; ++i) {
                mpz_class q = w.at(i, k) / w.at(k, k);
                w.row_sub(i, k, q);
                if (w.at(i, k) != 0) dirty = true;
            }
            for (std::size_t j = k + 1; j < w.cols; ++j) {
                mpz_class q = w.at(k, j) / w.at(k, k);
                w.col_sub(j, k, q);
                if (w.at(k, j) != 0) dirty = true;
            }
            if (dirty) continue;
            bool bad = false;
            for (std::size_t i = k + 1; i < w.rows && !bad; ++i)
                for (std::size_t j = k + 1; j < w.cols && !bad; ++j)
                    if (w.at(i, j) % w.at(k, k) != 0) {
                        w.row_sub(k, i, mpz_class(-1)); // pull row i into play
                        bad = true;
                    }
            if (!bad) break;
        }
        if (w.at(k, k) < 0) w.negate_row(k);
    }
}

Work make_work(const std::vector<std::vector<mpz_class>>& rows) {
    Work w;
    w.rows = rows.size();
    w.cols = rows.empty() ? 0 : rows[0].size();
    w.a.resize(w.rows * w.cols);
    for (std::size_t i = 0; i < w.rows; ++i)
        for (std::size_t j = 0; j < w.cols; ++j) w.a[i * w.cols + j] = rows[i][j];
    return w;
}

} // namespace

SmithResult smith_normal_form(const IntMat& a) {
    std::size_t n = a.size();
    std::vector<std::vector<mpz_class>> rows(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    Work w = make_work(rows);
    w.u = IntMat::identity(n);
    w.v = IntMat::identity(n);
    w.track_u = w.track_v = true;
    smith_reduce(w);
    SmithResult r;
    r.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.diag[i] = w.at(i, i);
    r.u = w.u;
    r.v = w.v;
    return r;
}

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> rows) {
    Work w = make_work(rows);
    smith_reduce(w);
    std::size_t n = std::min(w.rows, w.cols);
    std::vector<mpz_class> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = w.at(i, i);
    return d;
}

IntMat unimodular_with_rowspan(const std::vector<std::vector<mpz_class>>& rows_in,
                               std::size_t n, const mpz_class& p) {
    std::size_t k = rows_in.size();
    if (k == 0 || k >= n) throw std::invalid_argument("unimodular_with_rowspan: bad row count");

    std::vector<std::vector<mpz_class>> rows(k, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < k; ++i) {
        if (rows_in[i].size() != n) throw std::invalid_argument("unimodular_with_rowspan: row length");
        mpz_class g = 0;
        for (std::size_t j = 0; j < n; ++j) {
            rows[i][j] = ((rows_in[i][j] % p) + p) % p;
            g = gcd(g, rows[i][j]);
        }
        if (g == 0) throw std::invalid_argument("unimodular_with_rowspan: zero row");
        if (g > 1 && g % p != 0)
            for (auto& x : rows[i]) x /= g; // residue row rescaled by a unit
    }

    // independence check mod p
    {
        std::vector<std::vector<mpz_class>> red = rows;
        for (std::size_t r = 0; r < k; ++r) {
            std::size_t c = 0;
            while (c < n && red[r][c] % p == 0) ++c;
            if (c == n) throw std::invalid_argument("unimodular_with_rowspan: dependent rows mod p");
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), red[r][c].get_mpz_t(), p.get_mpz_t());
            for (std::size_t r2 = r + 1; r2 < k; ++r2) {
                mpz_class f = (red[r2][c] * inv) % p;
                for (std::size_t j = 0; j < n; ++j)
                    red[r2][j] = ((red[r2][j] - f * red[r][j]) % p + p) % p;
            }
        }
    }

    // Nudge by multiples of p until the integer row lattice is primitive
    // (all Smith invariants 1); residues mod p never change.
    int attempts = 0;
    for (;;) {
        auto d = smith_diagonal(rows);
        bool ok = true;
        for (auto& x : d) ok = ok && (x == 1);
        if (ok) break;
        if (++attempts > 200) throw std::logic_error("unimodular_with_rowspan: primitivity fixup failed");
        std::size_t r = static_cast<std::size_t>(attempts - 1) % k;
        std::size_t c = static_cast<std::size_t>((attempts - 1) / k) % n;
        rows[r][c] += p * ((attempts % 3) + 1);
    }

    Work w = make_work(rows);
    w.w = IntMat::identity(n);
    w.track_w = true;
    smith_reduce(w);
    for (std::size_t i = 0; i < k; ++i)
        if (w.at(i, i) != 1) throw std::logic_error("unimodular_with_rowspan: unexpected Smith form");

    // D = U*A*V = [E_k | 0]  =>  A = U^{-1} * (first k rows of V^{-1}),
    // so V^{-1} is unimodular and its leading rows span A's row lattice.
    IntMat t = w.w;
    mpz_class dt = t.det();
    if (dt != 1 && dt != -1) throw std::logic_error("unimodular_with_rowspan: completion not unimodular");
    return t;
}

mpz_class sylvester_resultant(const std::vector<mpz_class>& a, int da,
                              const std::vector<mpz_class>& b, int db) {
    int n = da + db;
    if (n == 0) return 1;
    IntMat s(static_cast<std::size_t>(n));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k)
            s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = a[static_cast<std::size_t>(da - k)];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k)
            s(static_cast<std::size_t>(db + r), static_cast<std::size_t>(r + k)) = b[static_cast<std::size_t>(db - k)];
    return s.det();
}

} // namespace hymin
