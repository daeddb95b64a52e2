#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "quatbound/polynomial.hpp"
#include "quatbound/random.hpp"
#include "quatbound/zeros.hpp"

using namespace quatbound;

namespace {

const Quaternion ONE = Quaternion::one();
const Quaternion ZERO = Quaternion::zero();
const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

const RightPolynomial z2_plus_1{ONE, ZERO, ONE};

RightPolynomial random_poly(std::mt19937_64& eng, std::size_t degree, double scale = 2.0) {
    std::vector<Quaternion> coeffs(degree + 1);
    for (std::size_t idx = 0; idx < degree; ++idx) coeffs[idx] = ball_quaternion(eng, scale);
    coeffs[degree] = ONE;
    return RightPolynomial(std::move(coeffs));
}

std::vector<const ZeroClass*> found_classes(const ZeroSet& zs) {
    std::vector<const ZeroClass*> out;
    for (const ZeroClass& zc : zs.classes)
        if (zc.kind != ZeroKind::None) out.push_back(&zc);
    return out;
}

}  // namespace

TEST(Zeros, CompanionPolynomialHandValues) {
    const std::vector<double> squared = companion_polynomial(z2_plus_1);
    EXPECT_EQ(squared, (std::vector<double>{1, 0, 2, 0, 1}));

    const std::vector<double> linear = companion_polynomial(RightPolynomial{-I, ONE});
    EXPECT_EQ(linear, (std::vector<double>{1, 0, 1}));
}

TEST(Zeros, CompanionPolynomialOfRealPolynomialIsItsSquare) {
    auto eng = make_engine(61);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Quaternion> coeffs(4 + rep % 3);
        for (auto& c : coeffs) c = Quaternion(uniform_symmetric(eng) * 2.0);
        coeffs.back() = ONE;
        const RightPolynomial f(coeffs);
        // Square via convolution of the real coefficient sequences.
        std::vector<double> expected(2 * f.degree() + 1, 0.0);
        for (std::size_t a = 0; a <= f.degree(); ++a)
            for (std::size_t b = 0; b <= f.degree(); ++b) expected[a + b] += f.coeff(a).w * f.coeff(b).w;
        const std::vector<double> actual = companion_polynomial(f);
        ASSERT_EQ(actual.size(), expected.size());
        for (std::size_t idx = 0; idx < actual.size(); ++idx) EXPECT_NEAR(actual[idx], expected[idx], 1e-12);
    }
}

TEST(Zeros, ComplexRootsKnownPolynomials) {
    const std::vector<std::complex<double>> quartic = complex_roots({1, 0, 2, 0, 1});
    ASSERT_EQ(quartic.size(), 4u);
    for (const auto& r : quartic) {
        EXPECT_NEAR(r.real(), 0.0, 1e-7);
        EXPECT_NEAR(std::fabs(r.imag()), 1.0, 1e-7);
    }

    const std::vector<std::complex<double>> pair = complex_roots({-1, 0, 1});
    ASSERT_EQ(pair.size(), 2u);
    EXPECT_NEAR(pair[0].real(), -1.0, 1e-10);
    EXPECT_NEAR(pair[1].real(), 1.0, 1e-10);

    EXPECT_THROW(complex_roots({3.0}), PreconditionError);
    EXPECT_THROW(complex_roots({}), PreconditionError);
}

TEST(Zeros, ComplexRootsWilkinson) {
    // prod (z - k) for k = 1..10, built by convolution.
    std::vector<double> p{1.0};
    for (int k = 1; k <= 10; ++k) {
        std::vector<double> next(p.size() + 1, 0.0);
        for (std::size_t idx = 0; idx < p.size(); ++idx) {
            next[idx + 1] += p[idx];
            next[idx] += p[idx] * -static_cast<double>(k);
        }
        p = std::move(next);
    }
    std::vector<std::complex<double>> roots = complex_roots(p);
    ASSERT_EQ(roots.size(), 10u);
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.real() < b.real(); });
    for (int k = 1; k <= 10; ++k) {
        EXPECT_NEAR(roots[static_cast<std::size_t>(k - 1)].real(), k, 1e-6);
        EXPECT_NEAR(roots[static_cast<std::size_t>(k - 1)].imag(), 0.0, 1e-6);
    }
}

TEST(Zeros, ComplexRootsConjugatePairsExact) {
    auto eng = make_engine(62);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> p(7);
        for (auto& c : p) c = uniform_symmetric(eng) * 3.0;
        p.back() = 1.0;
        const auto roots = complex_roots(p);
        for (const auto& r : roots) {
            if (r.imag() == 0.0) continue;
            const bool has_partner =
                std::any_of(roots.begin(), roots.end(), [&r](const std::complex<double>& o) {
                    return o.real() == r.real() && o.imag() == -r.imag();
                });
            EXPECT_TRUE(has_partner);
        }
    }
}

TEST(Zeros, ClassifySphericalIsolatedNone) {
    const ZeroClass spherical = classify_class(z2_plus_1, 0.0, 1.0);
    EXPECT_EQ(spherical.kind, ZeroKind::Spherical);
    EXPECT_EQ(spherical.witness, I);

    const ZeroClass isolated = classify_class(RightPolynomial{-I, ONE}, 0.0, 1.0);
    EXPECT_EQ(isolated.kind, ZeroKind::Isolated);
    EXPECT_LE(q_abs(isolated.witness - I), 1e-12);

    const ZeroClass none = classify_class(z2_plus_1, 0.0, 2.0);
    EXPECT_EQ(none.kind, ZeroKind::None);

    const ZeroClass real = classify_class(RightPolynomial{Quaternion(-2.0), ONE}, 2.0, 0.0);
    EXPECT_EQ(real.kind, ZeroKind::Real);

    EXPECT_THROW(classify_class(z2_plus_1, 0.0, -1.0), PreconditionError);
}

TEST(Zeros, FindZerosUnitSphere) {
    const ZeroSet zs = find_zeros(z2_plus_1);
    const auto found = found_classes(zs);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0]->kind, ZeroKind::Spherical);
    EXPECT_NEAR(found[0]->s, 0.0, 1e-10);
    EXPECT_NEAR(found[0]->t, 1.0, 1e-10);
    EXPECT_NEAR(zs.max_modulus, 1.0, 1e-10);

    // Eight points around the sphere must also be zeros.
    auto eng = make_engine(63);
    for (int rep = 0; rep < 8; ++rep) {
        const Quaternion u = unit_pure_quaternion(eng);
        const Quaternion point = Quaternion(found[0]->s) + found[0]->t * u;
        EXPECT_LE(q_abs(evaluate_right(z2_plus_1, point)), 1e-8 * residual_scale(z2_plus_1, 1.0));
    }
}

TEST(Zeros, FindZerosTwoIsolatedClasses) {
    // (z - i) * (z - 2j): classes of moduli 1 and 2, with i itself a zero.
    const RightPolynomial f =
        star_product(RightPolynomial{-I, ONE}, RightPolynomial{-2.0 * J, ONE});
    const ZeroSet zs = find_zeros(f);
    const auto found = found_classes(zs);
    ASSERT_EQ(found.size(), 2u);
    std::vector<double> moduli{found[0]->modulus(), found[1]->modulus()};
    std::sort(moduli.begin(), moduli.end());
    EXPECT_NEAR(moduli[0], 1.0, 1e-9);
    EXPECT_NEAR(moduli[1], 2.0, 1e-9);
    for (const ZeroClass* zc : found) EXPECT_EQ(zc->kind, ZeroKind::Isolated);
    const ZeroClass* unit = found[0]->modulus() < 1.5 ? found[0] : found[1];
    EXPECT_LE(q_abs(unit->witness - I), 1e-8);
    EXPECT_NEAR(zs.max_modulus, 2.0, 1e-9);
}

TEST(Zeros, FindZerosDeflatesOrigin) {
    const ZeroSet zs = find_zeros(RightPolynomial{ZERO, ONE, ZERO, ONE});  // z^3 + z
    const auto found = found_classes(zs);
    ASSERT_EQ(found.size(), 2u);
    EXPECT_EQ(found[0]->kind, ZeroKind::Real);
    EXPECT_EQ(found[0]->witness, ZERO);
    EXPECT_EQ(found[0]->residual, 0.0);
    EXPECT_EQ(found[1]->kind, ZeroKind::Spherical);
    EXPECT_NEAR(zs.max_modulus, 1.0, 1e-10);
}

TEST(Zeros, MaxZeroModulus) {
    EXPECT_NEAR(max_zero_modulus(z2_plus_1), 1.0, 1e-10);
    EXPECT_NEAR(max_zero_modulus(RightPolynomial{Quaternion(-3, 0, 0, -4), ONE}), 5.0, 1e-10);
    EXPECT_NEAR(max_zero_modulus(RightPolynomial{ONE, ZERO, ZERO, ONE}), 1.0, 1e-10);
}

TEST(Zeros, SphericalClassesAreConjugationInvariant) {
    auto eng = make_engine(64);
    const ZeroSet zs = find_zeros(z2_plus_1);
    const auto found = found_classes(zs);
    ASSERT_EQ(found.size(), 1u);
    const Quaternion w = found[0]->witness;
    for (int rep = 0; rep < 8; ++rep) {
        Quaternion similarity = ball_quaternion(eng, 2.0);
        if (q_abs(similarity) < 1e-2) similarity = ONE;
        const Quaternion moved = q_mul(q_mul(similarity, w), q_inv(similarity));
        EXPECT_LE(q_abs(evaluate_right(z2_plus_1, moved)), 1e-8 * residual_scale(z2_plus_1, q_abs(moved)));
    }
}

TEST(Zeros, WitnessResidualInvariant) {
    auto eng = make_engine(65);
    for (int rep = 0; rep < 25; ++rep) {
        const RightPolynomial f = random_poly(eng, 2 + rep % 5);
        const ZeroSet zs = find_zeros(f);
        for (const ZeroClass& zc : zs.classes) {
            if (zc.kind == ZeroKind::None) continue;
            EXPECT_LE(q_abs(evaluate_right(f, zc.witness)),
                      1e-8 * residual_scale(f, q_abs(zc.witness)));
        }
    }
}

TEST(Zeros, DistinctLinearFactorsRecoverExactly) {
    auto eng = make_engine(66);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t m = 2 + rep % 3;
        std::vector<Quaternion> factors;
        while (factors.size() < m) {
            const Quaternion a = ball_quaternion(eng, 3.0);
            const bool distinct =
                std::all_of(factors.begin(), factors.end(), [&a](const Quaternion& b) {
                    return std::fabs(a.w - b.w) + std::fabs(imag_abs(a) - imag_abs(b)) > 1e-2;
                });
            if (distinct) factors.push_back(a);
        }
        RightPolynomial f{-factors[0], ONE};
        for (std::size_t idx = 1; idx < factors.size(); ++idx)
            f = star_product(f, RightPolynomial{-factors[idx], ONE});
        const auto found = found_classes(find_zeros(f));
        EXPECT_EQ(found.size(), m);
    }
}

TEST(Zeros, LeftFactorZeroSurvivesStarProduct) {
    auto eng = make_engine(67);
    for (int rep = 0; rep < 20; ++rep) {
        const RightPolynomial f = random_poly(eng, 1 + rep % 4);
        const RightPolynomial g = random_poly(eng, 1 + (rep + 2) % 4);
        const RightPolynomial fg = star_product(f, g);
        for (const ZeroClass& zc : find_zeros(f).classes) {
            if (zc.kind == ZeroKind::None) continue;
            EXPECT_LE(q_abs(evaluate_right(fg, zc.witness)),
                      1e-9 * residual_scale(fg, q_abs(zc.witness)));
        }
    }
}

TEST(Zeros, NormalizationPreservesZeroClasses) {
    auto eng = make_engine(68);
    for (int rep = 0; rep < 50; ++rep) {
        RightPolynomial monic = random_poly(eng, 2);
        std::vector<Quaternion> scaled = monic.coeffs();
        Quaternion lead = ball_quaternion(eng, 2.0);
        if (q_abs(lead) < 1e-2) lead = Quaternion(2.0);
        for (auto& c : scaled) c = q_mul(c, lead);
        const auto a = found_classes(find_zeros(monic));
        const ZeroSet scaled_set = find_zeros(RightPolynomial(scaled));
        const auto b = found_classes(scaled_set);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t idx = 0; idx < a.size(); ++idx) {
            EXPECT_NEAR(a[idx]->s, b[idx]->s, 1e-7);
            EXPECT_NEAR(a[idx]->t, b[idx]->t, 1e-7);
        }
    }
}

TEST(Zeros, AuxiliaryPolynomialContainsAllZeros) {
    auto eng = make_engine(69);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Quaternion> coeffs(4);
        coeffs[0] = ball_quaternion(eng, 2.0) + Quaternion(0.25);
        coeffs[1] = ball_quaternion(eng, 2.0);
        coeffs[2] = ball_quaternion(eng, 2.0);
        coeffs[3] = ONE;
        const RightPolynomial f(coeffs);
        const RightPolynomial aux = auxiliary_polynomial(f);
        for (const ZeroClass& zc : find_zeros(f).classes) {
            if (zc.kind == ZeroKind::None) continue;
            EXPECT_LE(q_abs(evaluate_right(aux, zc.witness)),
                      1e-9 * residual_scale(aux, q_abs(zc.witness)));
        }
    }
}

TEST(Zeros, RandomPolynomialWithKnownZero) {
    const auto [linear, a1] = random_polynomial_with_known_zero(1, 9, 4.0);
    EXPECT_EQ(linear.degree(), 1u);
    EXPECT_EQ(linear.coeff(0), -a1);
    EXPECT_LE(q_abs(a1), 4.0);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t degree = 2 + seed % 5;
        const auto [f, planted] = random_polynomial_with_known_zero(degree, seed, 3.0);
        EXPECT_EQ(f.degree(), degree);
        EXPECT_TRUE(f.is_monic());
        EXPECT_LE(q_abs(evaluate_right(f, planted)), 1e-10 * residual_scale(f, q_abs(planted)));

        // The planted zero's class must appear in the oracle output.
        const ZeroSet zs = find_zeros(f);
        const double s = planted.w;
        const double t = imag_abs(planted);
        const bool present = std::any_of(zs.classes.begin(), zs.classes.end(), [&](const ZeroClass& zc) {
            return zc.kind != ZeroKind::None &&
                   std::fabs(zc.s - s) + std::fabs(zc.t - t) <= 1e-6 * (1.0 + q_abs(planted));
        });
        EXPECT_TRUE(present) << "seed " << seed << " degree " << degree;
    }

    // Determinism: identical seeds reproduce the polynomial bit for bit.
    const auto first = random_polynomial_with_known_zero(5, 1234, 5.0);
    const auto second = random_polynomial_with_known_zero(5, 1234, 5.0);
    EXPECT_EQ(first.first, second.first);
    EXPECT_EQ(first.second, second.second);

    EXPECT_THROW(random_polynomial_with_known_zero(0, 1, 1.0), PreconditionError);
}
