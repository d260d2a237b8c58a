#ifndef HYMIN_GROEBNER_HPP
#define HYMIN_GROEBNER_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "multipoly.hpp"

namespace hymin::fp {

// normal form of f modulo basis (full reduction, tail included)
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, Order ord);

// reduced Groebner basis (Buchberger, normal selection, both criteria)
std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens, Order ord);

// Ideal over F_p with write-once cached bases per order.
class FpIdeal {
public:
    explicit FpIdeal(std::vector<MultiPoly> gens);
    const std::vector<MultiPoly>& generators() const { return gens_; }
    const std::vector<MultiPoly>& basis(Order ord) const;
    bool contains(const MultiPoly& f, Order ord = Order::grevlex) const;

private:
    std::vector<MultiPoly> gens_;
    struct Cache {
        std::once_flag once;
        std::vector<MultiPoly> basis;
    };
    mutable Cache lex_, grevlex_;
};

struct ZeroDimSolution {
    bool zero_dimensional = false;
    // affine F_p-rational points, sorted; empty is meaningful (no solutions)
    std::vector<std::vector<std::uint64_t>> points;
    std::vector<MultiPoly> basis; // lex basis, returned in every case
};

// F_p-rational solutions of a polynomial system via lex elimination and
// back-substitution. When the ideal is not zero-dimensional the flag is
// false and no point list is produced.
ZeroDimSolution solve_zero_dim(const FpIdeal& ideal, std::uint64_t seed = 1);

// Sylvester resultant of f and g w.r.t. one variable; entries live in the
// remaining variables. Convention: Res_x(x - a, x - b) = b - a.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

} // namespace hymin::fp

#endif
