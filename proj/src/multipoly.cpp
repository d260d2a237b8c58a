#include "multipoly.hpp"

#include <stdexcept>

namespace hymin::fp {

Mono mono_mul(const Mono& a, const Mono& b, int nvars) {
    Mono r;
    for (int i = 0; i < nvars; ++i) {
        int s = a.e[i] + b.e[i];
        if (s > 255) throw std::overflow_error("Mono: exponent overflow");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

Mono mono_div(const Mono& a, const Mono& b, int nvars) {
    Mono r;
    for (int i = 0; i < nvars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    return r;
}

Mono mono_lcm(const Mono& a, const Mono& b, int nvars) {
    Mono r;
    for (int i = 0; i < nvars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool mono_less(const Mono& a, const Mono& b, Order ord, int nvars) {
    if (ord == Order::lex) {
        for (int i = 0; i < nvars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
    int da = a.deg(nvars), db = b.deg(nvars);
    if (da != db) return da < db;
    // graded reverse lex: larger power of the *last* variable is smaller
    for (int i = nvars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.deg(nv_));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    int d = -2;
    for (const auto& [m, c] : t_) {
        if (d == -2)
            d = m.deg(nv_);
        else if (m.deg(nv_) != d)
            return false;
    }
    return true;
}

void MultiPoly::add_term(const Mono& m, std::uint64_t c) {
    c %= f_.p;
    if (c == 0) return;
    auto [it, ins] = t_.emplace(m, c);
    if (!ins) {
        it->second = f_.add(it->second, c);
        if (it->second == 0) t_.erase(it);
    }
}

std::uint64_t MultiPoly::coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? 0 : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, f_.neg(c));
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(f_, nv_);
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) r.add_term(mono_mul(ma, mb, nv_), f_.mul(ca, cb));
    return r;
}

MultiPoly MultiPoly::scaled(std::uint64_t s) const {
    MultiPoly r(f_, nv_);
    s %= f_.p;
    for (const auto& [m, c] : t_) r.add_term(m, f_.mul(c, s));
    return r;
}

MultiPoly MultiPoly::monic(Order ord) const {
    if (is_zero()) return *this;
    return scaled(f_.inv(lc(ord)));
}

Mono MultiPoly::lm(Order ord) const {
    if (is_zero()) throw std::invalid_argument("MultiPoly: leading monomial of zero");
    const Mono* best = nullptr;
    for (const auto& [m, c] : t_)
        if (!best || mono_less(*best, m, ord, nv_)) best = &m;
    return *best;
}

std::uint64_t MultiPoly::lc(Order ord) const { return coeff(lm(ord)); }

MultiPoly MultiPoly::divided_partial(const std::vector<int>& alpha) const {
    if (static_cast<int>(alpha.size()) != nv_)
        throw std::invalid_argument("divided_partial: length mismatch");
    MultiPoly r(f_, nv_);
    for (const auto& [m, c] : t_) {
        std::uint64_t factor = 1;
        Mono out;
        bool ok = true;
        for (int i = 0; i < nv_ && ok; ++i) {
            if (m.e[i] < alpha[i]) {
                ok = false;
                break;
            }
            out.e[i] = static_cast<std::uint8_t>(m.e[i] - alpha[i]);
            // exact integer binomial, then reduce: no division inside F_p
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), m.e[i], static_cast<unsigned long>(alpha[i]));
            factor = f_.mul(factor, f_.reduce(b));
        }
        if (ok) r.add_term(out, f_.mul(c, factor));
    }
    return r;
}

MultiPoly MultiPoly::subst_linear(const std::vector<std::vector<std::uint64_t>>& mat) const {
    // x_k -> sum_j x_j * mat[j][k], row-vector convention
    if (static_cast<int>(mat.size()) != nv_)
        throw std::invalid_argument("subst_linear: matrix size mismatch");
    std::vector<MultiPoly> lin;
    lin.reserve(static_cast<std::size_t>(nv_));
    for (int k = 0; k < nv_; ++k) {
        MultiPoly l(f_, nv_);
        for (int j = 0; j < nv_; ++j) {
            Mono m;
            m.e[j] = 1;
            l.add_term(m, mat[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
        }
        lin.push_back(std::move(l));
    }
    MultiPoly r(f_, nv_);
    for (const auto& [m, c] : t_) {
        MultiPoly acc(f_, nv_);
        acc.add_term(Mono{}, c);
        for (int k = 0; k < nv_; ++k)
            for (int rep = 0; rep < m.e[k]; ++rep) acc = acc * lin[static_cast<std::size_t>(k)];
        for (const auto& [mm, cc] : acc.terms()) r.add_term(mm, cc);
    }
    return r;
}

MultiPoly MultiPoly::set_var(int var, std::uint64_t value) const {
    MultiPoly r(f_, nv_);
    value %= f_.p;
    for (const auto& [m, c] : t_) {
        Mono out = m;
        out.e[var] = 0;
        r.add_term(out, f_.mul(c, f_.pow(value, m.e[var])));
    }
    return r;
}

MultiPoly MultiPoly::drop_var(int var) const {
    MultiPoly r(f_, nv_ - 1);
    for (const auto& [m, c] : t_) {
        if (m.e[var] != 0) continue;
        Mono out;
        int j = 0;
        for (int i = 0; i < nv_; ++i) {
            if (i == var) continue;
            out.e[j++] = m.e[i];
        }
        r.add_term(out, c);
    }
    return r;
}

MultiPoly MultiPoly::divide_by_var(int var) const {
    MultiPoly r(f_, nv_);
    for (const auto& [m, c] : t_) {
        if (m.e[var] == 0) throw std::invalid_argument("divide_by_var: not divisible");
        Mono out = m;
        out.e[var] -= 1;
        r.add_term(out, c);
    }
    return r;
}

std::uint64_t MultiPoly::eval(const std::vector<std::uint64_t>& x) const {
    std::uint64_t r = 0;
    for (const auto& [m, c] : t_) {
        std::uint64_t v = c;
        for (int i = 0; i < nv_; ++i) v = f_.mul(v, f_.pow(x[static_cast<std::size_t>(i)] % f_.p, m.e[i]));
        r = f_.add(r, v);
    }
    return r;
}

UniPoly MultiPoly::to_univariate(int var) const {
    std::vector<std::uint64_t> c;
    for (const auto& [m, cc] : t_) {
        for (int i = 0; i < nv_; ++i)
            if (i != var && m.e[i] != 0)
                throw std::invalid_argument("to_univariate: extra variables present");
        if (m.e[var] >= static_cast<int>(c.size())) c.resize(static_cast<std::size_t>(m.e[var]) + 1, 0);
        c[m.e[var]] = cc;
    }
    return UniPoly(f_, std::move(c));
}

MultiPoly MultiPoly::from_univariate(const UniPoly& u, int var, int nvars) {
    MultiPoly r(u.field(), nvars);
    for (int i = 0; i <= u.degree(); ++i) {
        if (u.coeff(i) == 0) continue;
        Mono m;
        m.e[var] = static_cast<std::uint8_t>(i);
        r.add_term(m, u.coeff(i));
    }
    return r;
}

MultiPoly reduce_mod_p(const Form& f, const mpz_class& p) {
    Zp zp(p);
    if (f.n_vars() > kMaxFpVars) throw std::invalid_argument("reduce_mod_p: too many variables");
    MultiPoly r(zp, f.n_vars());
    for (const auto& [e, c] : f.terms()) {
        Mono m;
        for (int i = 0; i < f.n_vars(); ++i) {
            if (e[i] > 255) throw std::overflow_error("reduce_mod_p: exponent too large");
            m.e[i] = static_cast<std::uint8_t>(e[i]);
        }
        r.add_term(m, zp.reduce(c));
    }
    return r;
}

std::vector<std::vector<std::uint64_t>> fp_matrix_inverse(
    const std::vector<std::vector<std::uint64_t>>& m, Zp zp) {
    std::size_t n = m.size();
    std::vector<std::vector<std::uint64_t>> a = m, inv(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] % zp.p == 0) ++piv;
        if (piv == n) throw std::invalid_argument("fp_matrix_inverse: singular");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        std::uint64_t s = zp.inv(a[c][c] % zp.p);
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] = zp.mul(a[c][j] % zp.p, s);
            inv[c][j] = zp.mul(inv[c][j] % zp.p, s);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            std::uint64_t f = a[r][c] % zp.p;
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = zp.sub(a[r][j] % zp.p, zp.mul(f, a[c][j]));
                inv[r][j] = zp.sub(inv[r][j] % zp.p, zp.mul(f, inv[c][j]));
            }
        }
    }
    return inv;
}

std::vector<std::vector<std::uint64_t>> reduce_matrix(const IntMat& m, Zp zp) {
    std::vector<std::vector<std::uint64_t>> r(m.size(), std::vector<std::uint64_t>(m.size(), 0));
    mpz_class p(static_cast<unsigned long>(zp.p));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            mpz_class x = m(i, j) % p;
            if (x < 0) x += p;
            r[i][j] = mpz_get_ui(x.get_mpz_t());
        }
    return r;
}

} // namespace hymin::fp
