#include "fp.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace hymin::fp {

namespace {
std::atomic<std::uint64_t> g_seed{0x9e3779b97f4a7c15ULL};
}

std::uint64_t process_seed() { return g_seed.load(); }
void set_process_seed(std::uint64_t seed) { g_seed.store(seed ? seed : 1); }

Zp::Zp(const mpz_class& prime) {
    if (prime <= 1) throw std::invalid_argument("Zp: modulus must be a prime >= 2");
    if (mpz_sizeinbase(prime.get_mpz_t(), 2) > 62)
        throw std::invalid_argument("Zp: modulus too large (needs < 2^62)");
    p = mpz_get_ui(prime.get_mpz_t());
}

std::uint64_t Zp::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Zp::inv(std::uint64_t a) const {
    if (a == 0) throw std::invalid_argument("Zp: inverse of zero");
    return pow(a, p - 2);
}

std::uint64_t Zp::reduce(const mpz_class& x) const {
    mpz_class r = x % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return mpz_get_ui(r.get_mpz_t());
}

UniPoly::UniPoly(Zp zp, std::vector<std::uint64_t> coeffs) : f_(zp), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= f_.p;
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::x(Zp zp) { return UniPoly(zp, {0, 1}); }
UniPoly UniPoly::constant(Zp zp, std::uint64_t c) { return UniPoly(zp, {c}); }

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f_.add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return UniPoly(f_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f_.sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return UniPoly(f_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(f_);
    std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
    }
    return UniPoly(f_, std::move(r));
}

UniPoly UniPoly::scaled(std::uint64_t s) const {
    std::vector<std::uint64_t> r(c_);
    for (auto& x : r) x = f_.mul(x, s);
    return UniPoly(f_, std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(f_.inv(lc()));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(f_);
    std::vector<std::uint64_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_.mul(c_[i], i % f_.p);
    return UniPoly(f_, std::move(r));
}

std::uint64_t UniPoly::eval(std::uint64_t x) const {
    std::uint64_t r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = f_.add(f_.mul(r, x), c_[i]);
    return r;
}

void UniPoly::divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("UniPoly: division by zero");
    const Zp& f = a.f_;
    std::vector<std::uint64_t> rem(a.c_), quo;
    int db = b.degree();
    std::uint64_t inv_lc = f.inv(b.lc());
    if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        std::uint64_t c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        std::uint64_t t = f.mul(c, inv_lc);
        quo[static_cast<std::size_t>(i - db)] = t;
        for (int j = 0; j <= db; ++j) {
            auto& x = rem[static_cast<std::size_t>(i - db + j)];
            x = f.sub(x, f.mul(t, b.c_[static_cast<std::size_t>(j)]));
        }
    }
    q = UniPoly(f, std::move(quo));
    r = UniPoly(f, std::move(rem));
}

UniPoly UniPoly::mod(const UniPoly& m) const {
    UniPoly q(f_), r(f_);
    divrem(*this, m, q, r);
    return r;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly UniPoly::powmod(const UniPoly& base, const mpz_class& e, const UniPoly& m) {
    UniPoly r = UniPoly::constant(base.f_, 1).mod(m);
    UniPoly b = base.mod(m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r).mod(m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b).mod(m);
    }
    return r;
}

namespace {

// split a product of distinct monic linear factors into roots
void split_linear_product(const UniPoly& g, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
    const Zp f = g.field();
    int d = g.degree();
    if (d <= 0) return;
    if (d == 1) {
        // monic x + c  ->  root -c
        out.push_back(f.neg(g.coeff(0)));
        return;
    }
    mpz_class half = (mpz_class(static_cast<unsigned long>(f.p)) - 1) / 2;
    for (;;) {
        std::uint64_t a = rng() % f.p;
        UniPoly shift(f, {a, 1});
        UniPoly h = UniPoly::powmod(shift, half, g) - UniPoly::constant(f, 1);
        UniPoly g1 = UniPoly::gcd(h, g);
        if (g1.degree() > 0 && g1.degree() < d) {
            UniPoly q(f), r(f);
            UniPoly::divrem(g, g1, q, r);
            split_linear_product(g1, rng, out);
            split_linear_product(q.monic(), rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<std::uint64_t, int>> univariate_roots(const UniPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("univariate_roots: zero polynomial");
    const Zp zp = f.field();
    std::vector<std::uint64_t> roots;

    if (zp.p <= 257) {
        for (std::uint64_t x = 0; x < zp.p; ++x)
            if (f.eval(x) == 0) roots.push_back(x);
    } else {
        // distinct roots divide x^p - x
        UniPoly xp = UniPoly::powmod(UniPoly::x(zp), mpz_class(static_cast<unsigned long>(zp.p)),
                                     f.monic());
        UniPoly g = UniPoly::gcd(xp - UniPoly::x(zp), f);
        std::mt19937_64 rng((seed ? seed : process_seed()) ^ zp.p);
        split_linear_product(g, rng, roots);
        std::sort(roots.begin(), roots.end());
    }

    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t r : roots) {
        // multiplicity by repeated synthetic division
        UniPoly lin(zp, {zp.neg(r), 1});
        UniPoly cur = f;
        int m = 0;
        for (;;) {
            UniPoly q(zp), rest(zp);
            UniPoly::divrem(cur, lin, q, rest);
            if (!rest.is_zero()) break;
            ++m;
            cur = std::move(q);
        }
        out.emplace_back(r, m);
    }
    return out;
}

} // namespace hymin::fp
