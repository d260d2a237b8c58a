#include <doctest.h>

#include "global.hpp"
#include "invariants.hpp"
#include "minimize_curve.hpp"
#include "fixtures.hpp"
#include "testutil.hpp"
#include "textio.hpp"

using namespace hymin;
using namespace hymin::inv;
using testutil::parse;

namespace {

using fixtures::modular_sextic;

} // namespace

TEST_SUITE("invariants") {

TEST_CASE("odd transvectant with repeated arguments vanishes") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 100; ++it) {
        int d = 2 + static_cast<int>(rng() % 3);
        Form f = testutil::random_form(rng, 3, d, 9, 0.7);
        Form g = testutil::random_form(rng, 3, d, 9, 0.7);
        int k = 1 + 2 * static_cast<int>(rng() % 2); // 1 or 3
        CHECK(transvectant(f, f, g, k).is_zero());
        CHECK(transvectant(f, g, f, k).is_zero());
        CHECK(transvectant(g, f, f, k).is_zero());
    }
}

TEST_CASE("first transvectant is the Jacobian determinant") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 20; ++it) {
        Form f = testutil::random_form(rng, 3, 3, 7, 0.8);
        Form g = testutil::random_form(rng, 3, 3, 7, 0.8);
        Form h = testutil::random_form(rng, 3, 3, 7, 0.8);
        // 3x3 determinant of first partials
        Form det(3, 6);
        int idx[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
        for (int s = 0; s < 6; ++s) {
            Form prod = form_mul(form_mul(form_partial(f, idx[s][0]), form_partial(g, idx[s][1])),
                                 form_partial(h, idx[s][2]));
            det = det + (s < 3 ? prod : -prod);
        }
        CHECK(transvectant(f, g, h, 1) == det);
    }
}

TEST_CASE("second transvectant is a fixed multiple of the Hessian") {
    // frozen constant: determined on x0^3 + x1^3 + x2^3
    Form fermat = parse("x0^3 + x1^3 + x2^3", 3);
    Form lhs = transvectant(fermat, fermat, fermat, 2);
    Form rhs = hessian(fermat);
    REQUIRE_FALSE(rhs.is_zero());
    // lhs = 6 * rhs on the fixture
    CHECK(lhs == rhs * mpz_class(6));
    std::mt19937_64 rng(47);
    for (int it = 0; it < 40; ++it) {
        int d = 2 + static_cast<int>(rng() % 5); // corpus-wide, degrees 2..6
        Form f = testutil::random_form(rng, 3, d, 9, 0.8);
        CHECK(transvectant(f, f, f, 2) == hessian(f) * mpz_class(6));
    }
}

TEST_CASE("equivariance of covariants under unimodular substitution") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 15; ++it) {
        Form f = testutil::random_form(rng, 3, 4, 5, 0.6);
        IntMat t = testutil::random_unimodular(rng, 3);
        Form lhs = transvectant(substitute(f, t), substitute(f, t), substitute(f, t), 2);
        Form rhs = substitute(transvectant(f, f, f, 2), t);
        if (t.det() == 1) {
            CHECK(lhs == rhs);
        } else {
            // det -1: covariant of even weight still transforms cleanly for
            // the k=2 bracket (weight 2)
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("invariance of I1, I2 under SL(3,Z)") {
    std::mt19937_64 rng(59);
    Form f = testutil::random_form(rng, 3, 4, 4, 0.6);
    auto [i1, i2] = invariants_even(f);
    for (int it = 0; it < 8; ++it) {
        IntMat t = testutil::random_unimodular(rng, 3);
        if (t.det() != 1) continue;
        auto [j1, j2] = invariants_even(substitute(f, t));
        CHECK(j1.value == i1.value);
        CHECK(j2.value == i2.value);
    }
}

TEST_CASE("conic invariant is proportional to the symmetric determinant") {
    // normalization pinned on x0^2 + x1^2 + x2^2 (determinant 1)
    Form sphere = parse("x0^2 + x1^2 + x2^2", 3);
    auto [i1, i2] = invariants_even(sphere);
    mpz_class kappa = i1.value; // frozen proportionality constant
    CHECK(kappa != 0);
    std::mt19937_64 rng(61);
    for (int it = 0; it < 20; ++it) {
        Form q = testutil::random_form(rng, 3, 2, 9, 1.0);
        // symmetric matrix determinant times 2 (integral Gram uses doubled
        // off-diagonals): compute det of the doubled Gram matrix
        IntMat gram(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Expo e(3, 0);
                e[static_cast<std::size_t>(i)] += 1;
                e[static_cast<std::size_t>(j)] += 1;
                mpz_class c = q.coeff(e);
                gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = (i == j) ? 2 * c : c;
            }
        auto [a, b] = invariants_even(q);
        CHECK(a.value * 8 == kappa * gram.det());
    }
}

TEST_CASE("modular sextic: gcd of the two invariants") {
    auto [i1, i2] = invariants_even(modular_sextic());
    CHECK(gcd(abs(i1.value), abs(i2.value)) == 867041280);
}

TEST_CASE("scaling law for I1 under diagonal p-power scaling") {
    // coefficient degree 3: scaling by diag(p^w) multiplies I1 by p^{d*sum(w)}
    std::mt19937_64 rng(67);
    mpz_class p = 3;
    for (int it = 0; it < 6; ++it) {
        int d = 2 + 2 * static_cast<int>(rng() % 2);
        Form f = testutil::random_form(rng, 3, d, 4, 0.7);
        WeightVector w{{0, 1, 2}};
        Form scaled = scale_by_weight(f, w, p);
        auto [a, b] = invariants_even(f);
        auto [sa, sb] = invariants_even(scaled);
        mpz_class expect;
        mpz_pow_ui(expect.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d * w.sum()));
        CHECK(sa.value == a.value * expect);
        (void)sb;
    }
}

TEST_CASE("c4/c6 anchor and consistency") {
    Form anchor = parse("x0*x1*x2 + x1^3 + x2^3", 3);
    auto [c4, c6] = ternary_cubic_invariants(anchor);
    CHECK(c4.value == 1);
    CHECK(c6.value == -1);

    // F_{1,1} at p = 5 has the same invariants
    Form f11 = parse("x0*x1*x2 + 5*x1^3 + 5*x2^3", 3);
    auto [d4, d6] = ternary_cubic_invariants(f11);
    CHECK(d4.value == 1);
    CHECK(d6.value == -1);
}

TEST_CASE("c4/c6 invariance under SL(3,Z)") {
    std::mt19937_64 rng(71);
    Form f = parse("x0^3 + 2*x1^3 + 3*x2^3 + x0*x1*x2", 3);
    auto [c4, c6] = ternary_cubic_invariants(f);
    for (int it = 0; it < 10; ++it) {
        IntMat t = testutil::random_unimodular(rng, 3);
        if (t.det() != 1) continue;
        auto [d4, d6] = ternary_cubic_invariants(substitute(f, t));
        CHECK(d4.value == c4.value);
        CHECK(d6.value == c6.value);
    }
}

TEST_CASE("small transvectants agree with a naive expansion oracle") {
    // independent oracle: expand Delta^k on the 9-variable product by
    // repeated application of the 6-term determinant operator, then collapse
    std::mt19937_64 rng(73);
    // implemented via 9-variable forms: variables x0..x2, y0..y2 -> x3..x5,
    // z0..z2 -> x6..x8
    auto lift = [&](const Form& f, int block) {
        Form out(9, f.degree());
        for (const auto& [e, c] : f.terms()) {
            Expo ee(9, 0);
            for (int i = 0; i < 3; ++i) ee[static_cast<std::size_t>(3 * block + i)] = e[static_cast<std::size_t>(i)];
            out.add_term(ee, c);
        }
        return out;
    };
    auto partial9 = [&](const Form& f, int var) {
        Form r(9, f.degree() > 0 ? f.degree() - 1 : 0);
        for (const auto& [e, c] : f.terms()) {
            if (e[static_cast<std::size_t>(var)] == 0) continue;
            Expo d = e;
            d[static_cast<std::size_t>(var)] -= 1;
            r.add_term(d, c * e[static_cast<std::size_t>(var)]);
        }
        return r;
    };
    auto mul9 = [&](const Form& a, const Form& b) {
        Form r(9, a.degree() + b.degree());
        for (const auto& [ea, ca] : a.terms())
            for (const auto& [eb, cb] : b.terms()) {
                Expo e(9);
                for (std::size_t i = 0; i < 9; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    };
    auto delta = [&](const Form& f) {
        // sum over permutations sgn * d/dx_s0 d/dy_s1 d/dz_s2
        int idx[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
        Form acc(9, f.degree() >= 3 ? f.degree() - 3 : 0);
        for (int s = 0; s < 6; ++s) {
            Form t = partial9(partial9(partial9(f, idx[s][0]), 3 + idx[s][1]), 6 + idx[s][2]);
            acc = acc + (s < 3 ? t : -t);
        }
        return acc;
    };
    for (int it = 0; it < 6; ++it) {
        int d = 2 + static_cast<int>(rng() % 2);
        Form f = testutil::random_form(rng, 3, d, 4, 0.6);
        Form g = testutil::random_form(rng, 3, d, 4, 0.6);
        Form h = testutil::random_form(rng, 3, d, 4, 0.6);
        for (int k = 1; k <= 3 && k <= d; ++k) {
            Form big = mul9(mul9(lift(f, 0), lift(g, 1)), lift(h, 2));
            for (int rep = 0; rep < k; ++rep) big = delta(big);
            // collapse y, z back to x
            Form collapsed(3, f.degree() + g.degree() + h.degree() - 3 * k);
            for (const auto& [e, c] : big.terms()) {
                Expo ee(3, 0);
                for (int i = 0; i < 3; ++i)
                    ee[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] + e[static_cast<std::size_t>(i + 3)] + e[static_cast<std::size_t>(i + 6)];
                collapsed.add_term(ee, c);
            }
            CHECK(transvectant(f, g, h, k) == collapsed);
        }
    }
}

} // TEST_SUITE invariants

TEST_SUITE("invariants-odd-degree") {

TEST_CASE("quintic route: cubic covariant and its invariants") {
    std::mt19937_64 rng(173);
    int done = 0;
    while (done < 3) {
        Form f = testutil::random_form(rng, 3, 5, 4, 0.6);
        Covariant g = cubic_covariant(f);
        if (g.result.is_zero()) continue;
        CHECK(g.result.degree() == 3);
        CHECK(g.tag == "U^4(F,F,F)");
        auto [c4, c6] = ternary_cubic_invariants(g.result);
        // invariance of the composite under SL(3,Z)
        IntMat t = testutil::random_unimodular(rng, 3);
        if (t.det() == 1) {
            Covariant g2 = cubic_covariant(substitute(f, t));
            if (!g2.result.is_zero()) {
                auto [d4, d6] = ternary_cubic_invariants(g2.result);
                CHECK(d4.value == c4.value);
                CHECK(d6.value == c6.value);
            }
        }
        ++done;
    }
}

TEST_CASE("odd-degree candidate primes flag a constructed bad prime") {
    std::mt19937_64 rng(179);
    int done = 0;
    while (done < 4) {
        mpz_class p = 3;
        Form g = testutil::random_form(rng, 3, 5, 4, 0.7);
        Covariant cov = cubic_covariant(g);
        if (cov.result.is_zero()) continue;
        try {
            auto [c4, c6] = ternary_cubic_invariants(cov.result);
            if (c4.value == 0 && c6.value == 0) continue;
        } catch (const std::exception&) {
            continue;
        }
        Form f = normalized(scale_by_weight(g, WeightVector{{1, 0, 0}}, p));
        if (!hymin::curve::one_step(f, p).success) continue;
        auto ps = hymin::global::candidate_primes_ternary(f);
        CHECK(std::find(ps.begin(), ps.end(), p) != ps.end());
        ++done;
    }
}

} // TEST_SUITE invariants-odd-degree
