#ifndef HYMIN_MULTIPOLY_HPP
#define HYMIN_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "forms.hpp"
#include "fp.hpp"

namespace hymin::fp {

constexpr int kMaxFpVars = 5;

// exponent tuple for up to kMaxFpVars variables
struct Mono {
    std::array<std::uint8_t, kMaxFpVars> e{};

    int deg(int nvars) const {
        int s = 0;
        for (int i = 0; i < nvars; ++i) s += e[i];
        return s;
    }
    bool divides(const Mono& m, int nvars) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    bool operator==(const Mono& m) const { return e == m.e; }
    bool operator<(const Mono& m) const { return e < m.e; } // storage order only
};

Mono mono_mul(const Mono& a, const Mono& b, int nvars);
Mono mono_div(const Mono& a, const Mono& b, int nvars); // assumes divisibility
Mono mono_lcm(const Mono& a, const Mono& b, int nvars);

enum class Order { lex, grevlex };

// strict "a < b" in the chosen order, x0 > x1 > ... variable precedence
bool mono_less(const Mono& a, const Mono& b, Order ord, int nvars);

// Sparse multivariate polynomial over F_p in a fixed number of variables.
class MultiPoly {
public:
    MultiPoly(Zp zp, int nvars) : f_(zp), nv_(nvars) {}

    const Zp& field() const { return f_; }
    int n_vars() const { return nv_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Mono, std::uint64_t>& terms() const { return t_; }
    int total_degree() const;
    bool is_homogeneous() const;

    void add_term(const Mono& m, std::uint64_t c);
    std::uint64_t coeff(const Mono& m) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(std::uint64_t s) const;
    MultiPoly monic(Order ord) const;
    bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

    // leading monomial/term w.r.t. an order; poly must be nonzero
    Mono lm(Order ord) const;
    std::uint64_t lc(Order ord) const;

    // divided partial derivative: binomial-coefficient form, exact in any
    // characteristic
    MultiPoly divided_partial(const std::vector<int>& alpha) const;

    MultiPoly subst_linear(const std::vector<std::vector<std::uint64_t>>& mat) const;
    MultiPoly set_var(int var, std::uint64_t value) const; // substitute a constant
    MultiPoly drop_var(int var) const; // set_var(var, 0) then remove the slot
    MultiPoly divide_by_var(int var) const; // exact; throws if any term lacks var
    std::uint64_t eval(const std::vector<std::uint64_t>& x) const;

    // view as univariate in `var`; other variables must not occur
    UniPoly to_univariate(int var) const;
    static MultiPoly from_univariate(const UniPoly& u, int var, int nvars);

private:
    Zp f_;
    int nv_;
    std::map<Mono, std::uint64_t> t_;
};

// coefficient-wise reduction of an integral form
MultiPoly reduce_mod_p(const Form& f, const mpz_class& p);

// matrix inverse over F_p (n x n, entries in [0,p)); throws if singular
std::vector<std::vector<std::uint64_t>> fp_matrix_inverse(
    const std::vector<std::vector<std::uint64_t>>& m, Zp zp);

// reduction of an integer matrix mod p
std::vector<std::vector<std::uint64_t>> reduce_matrix(const IntMat& m, Zp zp);

} // namespace hymin::fp

#endif
