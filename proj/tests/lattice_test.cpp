#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helix_lattice/geometry.hpp"
#include "helix_lattice/lattice.hpp"
#include "test_support.hpp"

using namespace helix_lattice;
using helix_lattice::support::rel_err;
using helix_lattice::support::uniform;

namespace {

AffineLattice diag(double x, double y, double z) {
    return AffineLattice({0, 0, 0}, {x, 0, 0}, {0, y, 0}, {0, 0, z});
}

TEST(AffineLatticeTest, RejectsSingularBasis) {
    EXPECT_THROW(AffineLattice({0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 0, 1}), DomainError);
    EXPECT_THROW(AffineLattice({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1e-14}), DomainError);
    try {
        AffineLattice({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0});
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("det"), std::string::npos);
    }
}

TEST(GramTest, StandardAndScaled) {
    const GramForm g = gram_form(AffineLattice::standard());
    for (int i = 0; i < 3; ++i) {
        EXPECT_DOUBLE_EQ(g.eigenvalues[i], 1.0);
        for (int j = 0; j < 3; ++j) EXPECT_EQ(g.matrix(i, j), i == j ? 1.0 : 0.0);
    }
    const GramForm g2 = gram_form(diag(2, 2, 2));
    EXPECT_DOUBLE_EQ(g2.lambda1(), 4.0);
}

TEST(GramTest, ShearedBasisSmallestEigenvalue) {
    // [[1,1,0],[1,2,0],[0,0,1]]: the 2x2 block has characteristic polynomial
    // x^2 - 3x + 1, so lambda1 = (3 - sqrt 5) / 2.
    const AffineLattice l({0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 0, 1});
    const GramForm g = gram_form(l);
    EXPECT_EQ(g.matrix(0, 1), 1.0);
    EXPECT_EQ(g.matrix(1, 1), 2.0);
    EXPECT_LE(rel_err(g.lambda1(), (3.0 - std::sqrt(5.0)) / 2.0), 1e-12);
    EXPECT_LE(rel_err(g.eigenvalues[1], 1.0), 1e-12);
    EXPECT_LE(rel_err(g.eigenvalues[2], (3.0 + std::sqrt(5.0)) / 2.0), 1e-12);
}

TEST(GramTest, JacobiAgreesWithClosedForm) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 2000; ++i) {
        Vec3 v[3];
        for (auto& e : v) e = {uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)};
        if (std::abs(dot(v[0], cross(v[1], v[2]))) < 0.05) continue;
        const GramForm g = gram_form(std::array<Vec3, 3>{v[0], v[1], v[2]});
        const auto cf = closed_form_eigenvalues(g.matrix);
        for (int k = 0; k < 3; ++k)
            ASSERT_LE(std::abs(cf[k] - g.eigenvalues[k]), 1e-12 * g.eigenvalues[2]);
    }
}

TEST(GramTest, QuadraticFormMatchesCombination) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long long> m(-50, 50);
    for (int i = 0; i < 20; ++i) {
        const AffineLattice l = support::random_integer_lattice(rng, 3);
        const AffineLattice moved({0, 0, 0}, l.basis()[0] * 0.37, l.basis()[1] * 1.3, l.basis()[2] * 0.9);
        const GramForm g = gram_form(moved);
        for (int k = 0; k < 1000; ++k) {
            const Coeffs c{m(rng), m(rng), m(rng)};
            if (c == Coeffs{0, 0, 0}) continue;
            ASSERT_LE(rel_err(g(c), norm_sq(combine(moved.basis(), c))), 1e-10);
        }
    }
}

TEST(ShortestVectorTest, Standard) {
    const ShortestVector sv = shortest_vector(AffineLattice::standard());
    EXPECT_EQ(sv.length, 1.0);
    EXPECT_EQ(sv.coeffs, (Coeffs{-1, 0, 0}));
}

TEST(ShortestVectorTest, OrthogonalDiagonal) {
    const ShortestVector sv = shortest_vector(diag(3, 5, 7));
    EXPECT_EQ(sv.length, 3.0);
    EXPECT_EQ(std::abs(sv.coeffs[0]), 1);
    EXPECT_EQ(sv.coeffs[1], 0);
    EXPECT_EQ(sv.coeffs[2], 0);
}

TEST(ShortestVectorTest, ShearedMatchesBruteForce) {
    const AffineLattice l({0, 0, 0}, {1, 0, 0}, {0.5, 0.1, 0}, {0, 0, 1});
    const ShortestVector sv = shortest_vector(l);
    const auto brute = support::brute_shortest(l.basis(), 20);
    EXPECT_NEAR(sv.length, std::sqrt(brute.norm_sq), 1e-12);
    EXPECT_EQ(sv.coeffs, brute.coeffs);
    // (-1, 2, 0) -> (0, 0.2, 0)
    EXPECT_NEAR(sv.length, 0.2, 1e-12);
}

TEST(ShortestVectorTest, AtLeastSqrtLambda1) {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 50; ++i) {
        const AffineLattice l = support::random_integer_lattice(rng, 3);
        EXPECT_GE(shortest_vector(l).length, std::sqrt(gram_form(l).lambda1()) * (1 - 1e-12));
    }
}

TEST(ShortestVectorTest, ThreadCountDoesNotChangeResult) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 10; ++i) {
        const AffineLattice l = support::random_integer_lattice(rng, 3);
        setenv("HELIX_LATTICE_THREADS", "1", 1);
        const ShortestVector one = shortest_vector(l);
        setenv("HELIX_LATTICE_THREADS", "5", 1);
        const ShortestVector five = shortest_vector(l);
        unsetenv("HELIX_LATTICE_THREADS");
        EXPECT_EQ(one.length, five.length);
        EXPECT_EQ(one.coeffs, five.coeffs);
    }
}

TEST(CrossLatticeTest, StandardBasis) {
    const auto w = cross_lattice_basis(AffineLattice::standard());
    EXPECT_EQ(w[0], (Vec3{0, 0, 1}));
    EXPECT_EQ(w[1], (Vec3{1, 0, 0}));
    EXPECT_EQ(w[2], (Vec3{0, -1, 0}));
}

TEST(CrossLatticeTest, DiagonalBasis) {
    const auto w = cross_lattice_basis(diag(2, 3, 5));
    EXPECT_EQ(w[0], (Vec3{0, 0, 6}));
    EXPECT_EQ(w[1], (Vec3{15, 0, 0}));
    EXPECT_EQ(w[2], (Vec3{0, -10, 0}));
}

TEST(CrossLatticeTest, Independent) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        const auto w = cross_lattice_basis(support::random_integer_lattice(rng, 3));
        EXPECT_NE(dot(cross(w[0], w[1]), w[2]), 0.0);
    }
}

TEST(MinAreaTest, StandardIsHalf) {
    EXPECT_DOUBLE_EQ(min_area_lower_bound(AffineLattice::standard()), 0.5);
    EXPECT_DOUBLE_EQ(min_triangle_area_exhaustive(AffineLattice::standard(), 2), 0.5);
}

TEST(MinAreaTest, ScalingLaw) {
    EXPECT_DOUBLE_EQ(min_area_lower_bound(diag(2, 2, 2)), 2.0);
}

TEST(MinAreaTest, StretchedLatticeMinimumInPlane) {
    EXPECT_DOUBLE_EQ(min_triangle_area_exhaustive(diag(1, 1, 10), 2), 0.5);
}

TEST(MinAreaTest, MonotoneInBound) {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 10; ++i) {
        const AffineLattice l = support::random_integer_lattice(rng, 3);
        EXPECT_LE(min_triangle_area_exhaustive(l, 2), min_triangle_area_exhaustive(l, 1));
    }
}

TEST(MinAreaTest, LowerBoundNeverExceedsExhaustive) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 8; ++i) {
        const AffineLattice l = support::random_integer_lattice(rng, 3);
        const double lb = min_area_lower_bound(l);
        const double exact = min_triangle_area_exhaustive(l, 4);
        EXPECT_GT(lb, 0.0);
        EXPECT_LE(lb, exact * (1 + 1e-12));
    }
}

TEST(MinAreaTest, BudgetExceeded) {
    EXPECT_THROW(min_triangle_area_exhaustive(AffineLattice::standard(), 50), ResourceError);
    EXPECT_THROW(min_triangle_area_exhaustive(AffineLattice::standard(), 0), DomainError);
}

TEST(ConstantsTest, StandardLattice) {
    const LatticeConstants c = lattice_constants(AffineLattice::standard(), 2);
    EXPECT_EQ(c.d_min, 1.0);
    EXPECT_EQ(c.a_min_lb, 0.5);
    ASSERT_TRUE(c.a_min_exact.has_value());
    EXPECT_GE(*c.a_min_exact, c.a_min_lb);
    EXPECT_GE(c.d_min, std::sqrt(c.lambda1));
}

TEST(ConstantsTest, IsometryInvariance) {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 30; ++i) {
        const AffineLattice l = support::random_integer_lattice(rng, 3);
        const RigidMotion m(support::random_rotation(rng), {uniform(rng, -4, 4), 0.5, -1.0});
        const AffineLattice moved = l.transformed(m);
        EXPECT_LE(rel_err(shortest_vector(moved).length, shortest_vector(l).length), 1e-10);
        EXPECT_LE(rel_err(min_area_lower_bound(moved), min_area_lower_bound(l)), 1e-10);
    }
}

}  // namespace
