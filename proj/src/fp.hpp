#ifndef HYMIN_FP_HPP
#define HYMIN_FP_HPP

#include <gmpxx.h>
#include <cstdint>
#include <random>
#include <vector>

namespace hymin::fp {

// process-wide seed for randomized steps (equal-degree splitting downstream
// of a fixed default; settable from the CLI)
std::uint64_t process_seed();
void set_process_seed(std::uint64_t seed);

// Prime field context. Residues are uint64 in [0, p); p must fit in 62 bits
// so products are safe in __int128.
struct Zp {
    std::uint64_t p;

    explicit Zp(const mpz_class& prime);
    explicit Zp(std::uint64_t prime) : p(prime) {}

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t reduce(const mpz_class& x) const;
};

// Dense univariate polynomial over F_p; trailing (leading) coefficient kept
// nonzero, empty vector is the zero polynomial.
class UniPoly {
public:
    UniPoly(Zp zp) : f_(zp) {}
    UniPoly(Zp zp, std::vector<std::uint64_t> coeffs);

    const Zp& field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    std::uint64_t lc() const { return c_.back(); }
    std::uint64_t coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
    }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    static UniPoly x(Zp zp);
    static UniPoly constant(Zp zp, std::uint64_t c);

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(std::uint64_t s) const;
    UniPoly monic() const;
    UniPoly derivative() const;
    std::uint64_t eval(std::uint64_t x) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // division with remainder; divisor must be nonzero
    static void divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    UniPoly mod(const UniPoly& m) const;

    static UniPoly gcd(UniPoly a, UniPoly b); // monic gcd

    // base^e mod m, with arbitrary-precision exponent
    static UniPoly powmod(const UniPoly& base, const mpz_class& e, const UniPoly& m);

private:
    void trim();
    Zp f_;
    std::vector<std::uint64_t> c_;
};

// All roots in F_p with multiplicities, ascending residue order. Exhaustive
// scan for p <= 257; gcd with x^p - x plus seeded equal-degree splitting
// beyond. Throws on the zero polynomial.
// seed == 0 uses the process-wide seed
std::vector<std::pair<std::uint64_t, int>> univariate_roots(const UniPoly& f,
                                                            std::uint64_t seed = 0);

} // namespace hymin::fp

#endif
