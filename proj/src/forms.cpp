#include "forms.hpp"

#include <numeric>
#include <stdexcept>

namespace hymin {

void Form::check_shape() const {
    if (nv_ < 2) throw std::invalid_argument("Form: need at least 2 variables");
    if (deg_ < 0) throw std::invalid_argument("Form: negative degree");
}

Form::Form(int n_vars, int degree, std::map<Expo, mpz_class> terms)
    : nv_(n_vars), deg_(degree), t_(std::move(terms)) {
    check_shape();
    for (auto it = t_.begin(); it != t_.end();) {
        const Expo& e = it->first;
        if (static_cast<int>(e.size()) != nv_)
            throw std::invalid_argument("Form: exponent length mismatch");
        int s = 0;
        for (int x : e) {
            if (x < 0) throw std::invalid_argument("Form: negative exponent");
            s += x;
        }
        if (s != deg_) throw std::invalid_argument("Form: term degree mismatch");
        if (it->second == 0)
            it = t_.erase(it);
        else
            ++it;
    }
}

mpz_class Form::coeff(const Expo& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? mpz_class(0) : it->second;
}

void Form::add_term(const Expo& e, const mpz_class& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != nv_) throw std::invalid_argument("Form: exponent length mismatch");
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (s != deg_) throw std::invalid_argument("Form: term degree mismatch");
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Form Form::operator+(const Form& o) const {
    if (nv_ != o.nv_ || deg_ != o.deg_) throw std::invalid_argument("Form: shape mismatch in sum");
    Form r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

Form Form::operator-() const {
    Form r(nv_, deg_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

Form Form::operator*(const mpz_class& c) const {
    Form r(nv_, deg_);
    if (c == 0) return r;
    for (const auto& [e, cc] : t_) r.t_.emplace(e, cc * c);
    return r;
}

Form Form::divided_by(const mpz_class& c) const {
    if (c == 0) throw std::invalid_argument("Form: division by zero");
    Form r(nv_, deg_);
    for (const auto& [e, cc] : t_) {
        mpz_class q;
        mpz_class rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), cc.get_mpz_t(), c.get_mpz_t());
        if (rem != 0) throw std::invalid_argument("Form: inexact scalar division");
        r.t_.emplace(e, q);
    }
    return r;
}

long WeightVector::sum() const {
    long s = 0;
    for (int x : w) s += x;
    return s;
}

bool WeightVector::normalized() const {
    if (w.empty() || w[0] != 0) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) return false;
    return w[0] >= 0;
}

bool WeightVector::is_zero() const {
    for (int x : w)
        if (x != 0) return false;
    return true;
}

bool WeightVector::primitive() const {
    long g = 0;
    for (int x : w) g = std::gcd(g, static_cast<long>(x));
    return g == 1;
}

namespace {

// multiply two (inhomogeneous-safe) term maps; degrees add
void mul_into(std::map<Expo, mpz_class>& acc, const std::map<Expo, mpz_class>& a,
              const std::map<Expo, mpz_class>& b) {
    acc.clear();
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, ins] = acc.emplace(std::move(e), ca * cb);
            if (!ins) {
                it->second += ca * cb;
                if (it->second == 0) acc.erase(it);
            }
        }
}

} // namespace

Form substitute(const Form& f, const IntMat& t) {
    int n = f.n_vars();
    if (t.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("substitute: matrix size mismatch");
    if (t.det() == 0) throw std::invalid_argument("substitute: singular matrix");

    // linear images: x_k -> sum_j x_j * T(j,k)
    std::vector<std::map<Expo, mpz_class>> lin(n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            if (t(j, k) == 0) continue;
            Expo e(n, 0);
            e[j] = 1;
            lin[k].emplace(std::move(e), t(j, k));
        }

    // memoized powers of each linear image
    std::vector<std::vector<std::map<Expo, mpz_class>>> pow(n);
    for (int k = 0; k < n; ++k) {
        pow[k].resize(static_cast<std::size_t>(f.degree()) + 1);
        pow[k][0].emplace(Expo(n, 0), mpz_class(1));
    }
    // nonsingular T has no zero column, so an empty slot means "not computed"
    auto power = [&](int k, int e) -> const std::map<Expo, mpz_class>& {
        for (int i = 1; i <= e; ++i)
            if (pow[k][i].empty()) mul_into(pow[k][i], pow[k][i - 1], lin[k]);
        return pow[k][e];
    };

    Form r(n, f.degree());
    std::map<Expo, mpz_class> acc, tmp;
    for (const auto& [e, c] : f.terms()) {
        acc.clear();
        acc.emplace(Expo(n, 0), c);
        for (int k = 0; k < n; ++k) {
            if (e[k] == 0) continue;
            mul_into(tmp, acc, power(k, e[k]));
            acc.swap(tmp);
        }
        for (const auto& [ee, cc] : acc) r.add_term(ee, cc);
    }
    return r;
}

std::optional<long> valuation(const Form& f, const mpz_class& p) {
    if (f.is_zero()) return std::nullopt;
    std::optional<long> best;
    for (const auto& [e, c] : f.terms()) {
        long v = 0;
        mpz_class x = c;
        while (x % p == 0) {
            x /= p;
            ++v;
            if (best && v >= *best) break;
        }
        if (!best || v < *best) best = v;
        if (*best == 0) break;
    }
    return best;
}

mpz_class content(const Form& f) {
    if (f.is_zero()) throw std::invalid_argument("content: zero form");
    mpz_class g = 0;
    for (const auto& [e, c] : f.terms()) g = gcd(g, c);
    return abs(g);
}

Form normalized(const Form& f) { return f.divided_by(content(f)); }

Form scale_by_weight(const Form& f, const WeightVector& w, const mpz_class& p) {
    if (w.size() != f.n_vars()) throw std::invalid_argument("scale_by_weight: length mismatch");
    Form r(f.n_vars(), f.degree());
    for (const auto& [e, c] : f.terms()) {
        long k = 0;
        for (int j = 0; j < f.n_vars(); ++j) k += static_cast<long>(e[j]) * w.w[j];
        mpz_class m;
        mpz_pow_ui(m.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
        r.add_term(e, c * m);
    }
    return r;
}

std::pair<Form, long> apply_weight(const Form& f, const IntMat& t, const WeightVector& w,
                                   const mpz_class& p) {
    if (f.is_zero()) throw std::invalid_argument("apply_weight: zero form");
    Form f1 = substitute(f, t);
    Form f2 = scale_by_weight(f1, w, p);
    long e = *valuation(f2, p);
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return {f2.divided_by(pe), e};
}

bool is_unstable(const Form& f, const WeightVector& w, const mpz_class& p) {
    if (f.is_zero()) return true;
    auto [g, e] = apply_weight(f, IntMat::identity(f.n_vars()), w, p);
    (void)g;
    // (n+1) e > d * sum(w)
    return static_cast<long>(f.n_vars()) * e > static_cast<long>(f.degree()) * w.sum();
}

bool verify_record(const Form& input, const Form& output, const TransformRecord& rec) {
    Form lhs = substitute(input, rec.matrix);
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), rec.prime.get_mpz_t(), static_cast<unsigned long>(rec.scale_exp));
    return output * pe == lhs;
}

void verify_instability_certificate(const Form& f, const IntMat& s, long e_claimed,
                                    const mpz_class& p) {
    auto snf = smith_normal_form(s);
    std::vector<int> a;
    long sum = 0;
    for (const auto& d : snf.diag) {
        long v = 0;
        mpz_class x = abs(d);
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        a.push_back(static_cast<int>(v));
        sum += v;
    }
    // U*s = D*V^{-1}; every row divides exactly by the diagonal
    IntMat us = snf.u * s;
    IntMat vinv(us.size());
    for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = 0; j < us.size(); ++j) {
            mpz_class q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), us(i, j).get_mpz_t(), snf.diag[i].get_mpz_t());
            if (r != 0) throw std::logic_error("verify_certificate: Smith decomposition mismatch");
            vinv(i, j) = q;
        }
    auto [g, e] = apply_weight(f, vinv, WeightVector{a}, p);
    (void)g;
    if (e != e_claimed) throw std::logic_error("verify_certificate: valuation mismatch");
    if (static_cast<long>(f.n_vars()) * e <= static_cast<long>(f.degree()) * sum)
        throw std::logic_error("verify_certificate: step is not an instability");
}

} // namespace hymin
