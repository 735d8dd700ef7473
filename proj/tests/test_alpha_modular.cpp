#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcft/alpha_modular.hpp"
#include "lcft/errors.hpp"
#include "test_support.hpp"

#include <cmath>
#include <numbers>

using namespace lcft;
using std::numbers::pi;

TEST_CASE("S_{3,alpha} at alpha = 1 and 0.3 matches the printed matrix") {
    json fx = load_json(test::fixture("modular_p2_p3.json"));
    const auto& e = fx["S3_alpha"]["entries"];
    AlphaMatrix S = build_S_alpha(3);
    for (double a : {1.0, 0.3}) {
        double rh = std::sqrt(6.0) / 3, sh = std::sqrt(2.0) / (3 * a), th = a * std::sqrt(2.0);
        Eigen::MatrixXcd v = S.eval(a);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                const auto& c = e[i][j];
                double want = test::parse_rational(c["r"]) * rh + test::parse_rational(c["s"]) * sh +
                              test::parse_rational(c["t"]) * th;
                CHECK(std::abs(v(i, j) - want) < 1e-12);
            }
    }
}

TEST_CASE("first two rows for p = 2") {
    Eigen::MatrixXd s = build_S_alpha(2).eval(0.4).real();
    Eigen::RowVectorXd r1(5), r2(5);
    r1 << 0.5, 0.5, 1, 1, 0;
    r2 << 0.5, 0.5, -1, -1, 0;
    CHECK((s.row(0) - r1).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((s.row(1) - r2).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("S is not symmetric") {
    for (int p = 2; p <= 12; ++p) {
        Eigen::MatrixXcd s = build_S_alpha(p).eval(1.0);
        CHECK((s - s.transpose()).cwiseAbs().maxCoeff() > 0.1);
    }
}

TEST_CASE("T phases") {
    Eigen::MatrixXcd t = build_T_alpha(2).eval(0.3);
    cplx t1 = std::exp(cplx(0, pi * (1.0 / 4 - 1.0 / 12)));
    CHECK(std::abs(t(2, 2) - t1) < 1e-15);
    CHECK(std::abs(t(0, 0) - std::exp(cplx(0, -pi / 12))) < 1e-15);
    // only the off-diagonal entries carry alpha
    AlphaMatrix T = build_T_alpha(5);
    Eigen::MatrixXcd c1 = T.coefficient(1);
    Eigen::MatrixXcd c0 = T.coefficient(0);
    CHECK((c0 - Eigen::MatrixXcd(c0.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0);
    CHECK(c1.diagonal().cwiseAbs().maxCoeff() == 0);
    CHECK(T.min_degree() == 0);
    CHECK(T.max_degree() == 1);
}

TEST_CASE("group relations up to p = 12") {
    for (int p = 2; p <= 12; ++p) {
        GroupReport g = verify_group_relations(p, {1.0, 0.1, 0.01}, 1e-9);
        CAPTURE(p);
        CHECK(g.pass);
        CHECK(g.s_squared < 1e-10);
        for (double r : g.st_cubed) CHECK(r < 1e-9);
    }
    CHECK(verify_group_relations(12, {0.01}, 1e-8).st_cubed[0] < 1e-8);
    CHECK_THROWS_AS(verify_group_relations(2, {0.0}, 1e-9), invalid_parameter);
    CHECK_THROWS_AS(build_S_alpha(1), invalid_parameter);
    CHECK_THROWS_AS(build_T_alpha(1), invalid_parameter);
}

TEST_CASE("theta transformation matrix") {
    Eigen::MatrixXcd s2 = build_theta_transform(2);
    CHECK(std::abs(s2(0, 0) - 0.5) < 1e-15);
    Eigen::MatrixXcd s3 = build_theta_transform(3);
    // row 2p+1, column p+2 (1-based)
    CHECK(std::abs(s3(6, 4) - cplx(0, std::sqrt(2.0 / 3) * std::sin(pi / 3))) < 1e-15);
    for (int p = 2; p <= 8; ++p) {
        Eigen::MatrixXcd m = build_theta_transform(p);
        CHECK((m * m - Eigen::MatrixXcd::Identity(3 * p - 1, 3 * p - 1)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("two-path construction of S") {
    CHECK((build_S_via_B(2, 0.1) - build_S_alpha(2).eval(0.1)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((build_S_via_B(3, 1.0) - build_S_alpha(3).eval(1.0)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((build_S_via_B(5, 0.01) - build_S_alpha(5).eval(0.01)).cwiseAbs().maxCoeff() < 1e-7);
    for (int p = 2; p <= 12; ++p)
        for (double a : {1.0, 0.3, 0.01})
            CHECK((build_S_via_B(p, a) - build_S_alpha(p).eval(a)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK_THROWS_AS(build_B(2, 0.0), invalid_parameter);
}
