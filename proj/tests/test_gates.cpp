#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "gkpft/gates.hpp"

using gkpft::GateModel;
using gkpft::QuadraticSurd;
using gkpft::Rational;

TEST_CASE("ideal SUM quadrature action") {
    const GateModel g = gkpft::ideal_sum(1.0);

    Eigen::Vector4d in(1, 0, 0, 0);  // (x1, y1, x2, y2)
    Eigen::Vector4d out = g.m_matrix * in;
    CHECK(out.isApprox(Eigen::Vector4d(1, 0, -1, 0)));

    in = Eigen::Vector4d(0, 0, 0, 1);
    out = g.m_matrix * in;
    CHECK(out.isApprox(Eigen::Vector4d(0, 1, 0, 1)));

    CHECK(gkpft::ideal_sum(0.0).m_matrix.isIdentity(0.0));
    CHECK(g.e_matrix.cols() == 0);
}

TEST_CASE("ideal CZ quadrature action") {
    const GateModel g = gkpft::ideal_cz();
    Eigen::Vector4d out = g.m_matrix * Eigen::Vector4d(1, 0, 0, 0);
    CHECK(out.isApprox(Eigen::Vector4d(1, 0, 0, 1)));
    out = g.m_matrix * Eigen::Vector4d(0, 1, 0, 0);
    CHECK(out.isApprox(Eigen::Vector4d(0, 1, 0, 0)));
    CHECK(gkpft::symplectic_deviation(g.m_matrix) == 0.0);
}

TEST_CASE("symplecticity over random gains and reflectivities") {
    std::mt19937 gen(42);
    std::uniform_real_distribution<double> gain_dist(-5.0, 5.0);
    std::uniform_real_distribution<double> r_dist(0.01, 0.99);
    for (int i = 0; i < 100; ++i) {
        CHECK(gkpft::symplectic_deviation(gkpft::ideal_sum(gain_dist(gen)).m_matrix) <=
              1e-12);
        const GateModel rs = gkpft::realistic_sum({r_dist(gen)});
        CHECK(gkpft::symplectic_deviation(rs.m_matrix) <= 1e-12);
    }
    CHECK(gkpft::symplectic_deviation(gkpft::ideal_cz().m_matrix) <= 1e-12);
}

TEST_CASE("realistic SUM") {
    SECTION("gain values") {
        CHECK(gkpft::sum_gain(0.5) == Catch::Approx(0.70710678118654752).epsilon(1e-15));
        CHECK(gkpft::sum_gain(0.25) == Catch::Approx(1.5).epsilon(1e-15));
        CHECK_THROWS_AS(gkpft::sum_gain(0.0), std::domain_error);
        CHECK_THROWS_AS(gkpft::sum_gain(1.0), std::domain_error);
        CHECK_THROWS_AS(gkpft::realistic_sum({1.2}), std::domain_error);
    }

    SECTION("gain strictly decreasing on (0,1)") {
        double prev = gkpft::sum_gain(0.001);
        for (int i = 1; i <= 200; ++i) {
            const double r = 0.001 + (0.998 * i) / 200.0;
            const double g = gkpft::sum_gain(r);
            CHECK(g < prev);
            prev = g;
        }
    }

    SECTION("noise-free block equals the ideal SUM at the same gain") {
        std::mt19937 gen(99);
        std::uniform_real_distribution<double> r_dist(0.01, 0.99);
        for (int i = 0; i < 100; ++i) {
            const double r = r_dist(gen);
            const GateModel rs = gkpft::realistic_sum({r});
            const GateModel ideal = gkpft::ideal_sum(gkpft::sum_gain(r));
            CHECK((rs.m_matrix - ideal.m_matrix).cwiseAbs().maxCoeff() == 0.0);
        }
    }

    SECTION("ancilla couplings at the unit-gain point") {
        const double r = gkpft::solve_unit_gain_reflectivity();
        const GateModel rs = gkpft::realistic_sum({r});
        const double direct = 0.66874030497642202;  // 5^(-1/4)
        const double cross = 0.41330423812239926;   // sqrt((3-sqrt5)/(2 sqrt5))
        CHECK(rs.e_matrix(0, 0) == Catch::Approx(-direct).epsilon(1e-12));
        CHECK(rs.e_matrix(2, 0) == Catch::Approx(-cross).epsilon(1e-12));
        CHECK(rs.e_matrix(1, 1) == Catch::Approx(cross).epsilon(1e-12));
        CHECK(rs.e_matrix(3, 1) == Catch::Approx(-direct).epsilon(1e-12));
        // x couplings touch only column 0, y couplings only column 1
        CHECK(rs.e_matrix(0, 1) == 0.0);
        CHECK(rs.e_matrix(1, 0) == 0.0);
    }
}

TEST_CASE("unit-gain reflectivity") {
    const double r = gkpft::solve_unit_gain_reflectivity();
    const QuadraticSurd exact = gkpft::unit_gain_reflectivity_exact();

    CHECK(r == Catch::Approx(exact.to_double()).margin(1e-14));
    CHECK(r == Catch::Approx(0.38196601125010515).margin(1e-14));
    CHECK(gkpft::sum_gain(r) == Catch::Approx(1.0).margin(1e-14));

    // defining property (1-R)^2 = R, exactly in the field
    const QuadraticSurd one(1);
    CHECK((one - exact) * (one - exact) == exact);
    CHECK(exact.sign() == 1);
    CHECK((one - exact).sign() == 1);
}

TEST_CASE("SUM noise vectors") {
    const auto [e1, e2] = gkpft::sum_noise_vectors();

    const QuadraticSurd inv_sqrt5 = QuadraticSurd::inv_sqrt5();
    const QuadraticSurd cross{Rational(-1, 2), Rational(3, 10)};  // (3-sqrt5)/(2 sqrt5)
    CHECK(e1.x_coeff == inv_sqrt5);
    CHECK(e1.y_coeff == cross);
    CHECK(e2 == e1.swapped());

    CHECK(e1.x() == Catch::Approx(0.44721359549995794).epsilon(1e-15));
    CHECK(e1.y() == Catch::Approx(0.17082039324993691).epsilon(1e-15));

    SECTION("components are the exact squares of the unit-gain couplings") {
        const auto sq =
            gkpft::realistic_sum_coupling_squares(gkpft::unit_gain_reflectivity_exact());
        CHECK(sq.direct == e1.x_coeff);
        CHECK(sq.cross == e1.y_coeff);
        // and match the float couplings of the realistic gate
        const GateModel rs = gkpft::realistic_sum({gkpft::solve_unit_gain_reflectivity()});
        CHECK(rs.e_matrix(0, 0) * rs.e_matrix(0, 0) ==
              Catch::Approx(sq.direct.to_double()).epsilon(1e-12));
        CHECK(rs.e_matrix(1, 1) * rs.e_matrix(1, 1) ==
              Catch::Approx(sq.cross.to_double()).epsilon(1e-12));
    }
}

TEST_CASE("hybrid single-mode error constant") {
    const auto e = gkpft::hybrid_single_mode_error();
    CHECK(e.x_coeff == QuadraticSurd(2));
    CHECK(e.y_coeff == QuadraticSurd(2));
}
