#ifndef HYMIN_INTLINALG_HPP
#define HYMIN_INTLINALG_HPP

#include <gmpxx.h>
#include <cstddef>
#include <vector>

namespace hymin {

// Dense square matrix over Z (arbitrary precision). Row-vector convention
// throughout: forms are substituted as F(x * T).
class IntMat {
public:
    IntMat() : n_(0) {}
    explicit IntMat(std::size_t n) : n_(n), a_(n * n) {}
    IntMat(std::size_t n, std::vector<mpz_class> entries);

    static IntMat identity(std::size_t n);
    static IntMat diag_p_powers(const mpz_class& p, const std::vector<int>& w);

    std::size_t size() const { return n_; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    IntMat operator*(const IntMat& rhs) const;
    bool operator==(const IntMat& rhs) const { return n_ == rhs.n_ && a_ == rhs.a_; }

    mpz_class det() const;
    bool is_identity() const;
    // every entry divisible by m
    bool divisible_by(const mpz_class& m) const;

private:
    std::size_t n_;
    std::vector<mpz_class> a_;
};

// Smith normal form D = U*A*V with U, V unimodular; diagonal of D returned
// in divisibility order d1 | d2 | ... (non-negative).
struct SmithResult {
    std::vector<mpz_class> diag;
    IntMat u, v;
};
SmithResult smith_normal_form(const IntMat& a);

// Diagonal of the SNF only (rectangular input allowed).
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> rows);

// Given k independent residue rows modulo p (entries in [0,p)), produce a
// unimodular (n x n) integer matrix whose first k rows reduce mod p to a
// basis of the same span. Throws std::invalid_argument if the rows are
// dependent mod p.
IntMat unimodular_with_rowspan(const std::vector<std::vector<mpz_class>>& rows,
                               std::size_t n, const mpz_class& p);

// Sylvester resultant over Z with fixed formal framing degrees; a[i] is the
// coefficient of x^i (a has length da+1, b length db+1).
mpz_class sylvester_resultant(const std::vector<mpz_class>& a, int da,
                              const std::vector<mpz_class>& b, int db);

} // namespace hymin

#endif
