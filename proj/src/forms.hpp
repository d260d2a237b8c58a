#ifndef HYMIN_FORMS_HPP
#define HYMIN_FORMS_HPP

#include <gmpxx.h>
#include <map>
#include <optional>
#include <vector>

#include "intlinalg.hpp"

namespace hymin {

using Expo = std::vector<int>; // exponent vector, one entry per variable

// Sparse homogeneous form over Z. Variable count and degree are fixed at
// construction; every stored exponent vector sums to the degree and no
// stored coefficient is zero.
class Form {
public:
    Form(int n_vars, int degree) : nv_(n_vars), deg_(degree) { check_shape(); }
    Form(int n_vars, int degree, std::map<Expo, mpz_class> terms);

    int n_vars() const { return nv_; }
    int degree() const { return deg_; }
    const std::map<Expo, mpz_class>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    mpz_class coeff(const Expo& e) const;
    // add c * x^e (merges, prunes zero)
    void add_term(const Expo& e, const mpz_class& c);

    bool operator==(const Form& o) const { return nv_ == o.nv_ && deg_ == o.deg_ && t_ == o.t_; }
    bool operator!=(const Form& o) const { return !(*this == o); }

    Form operator+(const Form& o) const;
    Form operator-() const;
    Form operator*(const mpz_class& c) const;
    // exact division by a scalar; throws if not exact
    Form divided_by(const mpz_class& c) const;

private:
    void check_shape() const;
    int nv_, deg_;
    std::map<Expo, mpz_class> t_;
};

struct WeightVector {
    std::vector<int> w;

    int size() const { return static_cast<int>(w.size()); }
    long sum() const;
    bool normalized() const; // w0 = 0, weakly increasing, entries >= 0
    bool is_zero() const;
    bool primitive() const; // gcd of entries is 1
    bool operator==(const WeightVector& o) const { return w == o.w; }
    bool operator<(const WeightVector& o) const { return w < o.w; }
};

// (T, e, p) with p^e * result == F(x * T); the audit trail of a minimization.
struct TransformRecord {
    IntMat matrix;
    long scale_exp = 0;
    mpz_class prime;
};

// --- core operations -------------------------------------------------------

// F(x * T). Throws on size mismatch or singular T.
Form substitute(const Form& f, const IntMat& t);

// min p-adic valuation over the coefficients; nullopt for the zero form.
std::optional<long> valuation(const Form& f, const mpz_class& p);

// gcd of coefficients (positive); throws on the zero form.
mpz_class content(const Form& f);
Form normalized(const Form& f);

// F2 = (F(x*T))(p^w0 x0, ..., p^wn xn), e = v_p(F2); returns (p^-e F2, e).
std::pair<Form, long> apply_weight(const Form& f, const IntMat& t, const WeightVector& w,
                                   const mpz_class& p);

// Instability of F at p for the weight system (E, w):  (n+1) e > d * sum(w).
bool is_unstable(const Form& f, const WeightVector& w, const mpz_class& p);

// Coefficient-wise scaling x_j -> p^{w_j} x_j without normalization.
Form scale_by_weight(const Form& f, const WeightVector& w, const mpz_class& p);

// Checks p^e * g == F(x * T) exactly.
bool verify_record(const Form& input, const Form& output, const TransformRecord& rec);

// Exact instability certificate for a composite step matrix s with
// det = +-p^k: via the Smith decomposition D = U*s*V, the valuation of
// F(x*s) equals that of (F(x*V^{-1}))(p^a x) for the diagonal exponents a.
// Throws std::logic_error unless that valuation equals e_claimed and
// (n+1) e > deg * sum(a).
void verify_instability_certificate(const Form& f, const IntMat& s, long e_claimed,
                                    const mpz_class& p);

} // namespace hymin

#endif
