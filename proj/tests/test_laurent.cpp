#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcft/block_diag.hpp"
#include "lcft/errors.hpp"
#include "lcft/laurent.hpp"

#include <random>

using namespace lcft;

namespace {

AlphaMatrix random_matrix(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    std::uniform_int_distribution<int> deg(-2, 2);
    AlphaMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < 2; ++t) m(i, j) += LaurentScalar::monomial(cplx(u(rng), u(rng)), deg(rng));
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
    LaurentScalar inv = LaurentScalar::monomial(1.0, -1), lin = LaurentScalar::monomial(1.0, 1);
    LaurentScalar one = inv * lin;
    CHECK(one.terms().size() == 1);
    CHECK(one.coeff(0) == cplx(1));
    LaurentScalar a = LaurentScalar(cplx(3)) + LaurentScalar::monomial(2.0, -1);
    LaurentScalar b = a + LaurentScalar::monomial(-2.0, -1);
    CHECK(b.min_degree() == 0);
    CHECK(b.coeff(0) == cplx(3));
    CHECK((a - a).is_zero());
    CHECK(a.eval(0.5) == cplx(7));
    CHECK_THROWS_AS(LaurentScalar::monomial(1.0, 9), numerical_error);
}

TEST_CASE("C block times its inverse is the identity") {
    CPair c = build_C(2);
    AlphaMatrix prod = c.C * c.C_inv;
    CHECK(prod.max_nonconstant() < 1e-12);
    CHECK((prod.coefficient(0) - Eigen::MatrixXcd::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("evaluation") {
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Random(3, 3);
    AlphaMatrix c = AlphaMatrix::constant(k);
    CHECK((c.eval(0.7) - k).cwiseAbs().maxCoeff() == 0);
    AlphaMatrix d(2, 2);
    d(0, 0) = LaurentScalar::monomial(1.0, -1);
    d(1, 1) = LaurentScalar::monomial(1.0, -1);
    CHECK((d.eval(0.5) - 2.0 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_THROWS_AS(d.eval(0.0), invalid_parameter);
    AlphaMatrix wrong(3, 2);
    CHECK_THROWS_AS(d * wrong, shape_error);
    CHECK_THROWS_AS(d + wrong, shape_error);
}

TEST_CASE("limit at zero") {
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Random(3, 3);
    CHECK((AlphaMatrix::constant(k).limit0(1e-30) - k).cwiseAbs().maxCoeff() == 0);
    AlphaMatrix m(1, 1);
    m(0, 0) = LaurentScalar::monomial(1.0, -1) + LaurentScalar(cplx(5)) - LaurentScalar::monomial(1.0, -1);
    CHECK(m.limit0(1e-12)(0, 0) == cplx(5));
    AlphaMatrix bad(2, 2);
    bad(1, 0) = LaurentScalar::monomial(0.25, -2);
    try {
        bad.limit0(1e-10);
        FAIL("expected divergent_limit");
    } catch (const divergent_limit& e) {
        std::string w = e.what();
        CHECK(w.find("(2,1)") != std::string::npos);
        CHECK(w.find("degree -2") != std::string::npos);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        AlphaMatrix a = random_matrix(4, rng), b = random_matrix(4, rng);
        for (double al : {0.1, 0.01}) {
            Eigen::MatrixXcd lhs = (a * b).eval(al);
            Eigen::MatrixXcd rhs = a.eval(al) * b.eval(al);
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("limit agrees with extrapolation") {
    std::mt19937 rng(7);
    AlphaMatrix a = random_matrix(3, rng);
    // keep only nonnegative degrees so the limit exists
    AlphaMatrix r(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (const auto& [d, v] : a(i, j).terms())
                if (d >= 0) r(i, j) += LaurentScalar::monomial(v, d);
    Eigen::MatrixXcd lim = r.limit0(1e-10);
    const double al[3] = {1e-2, 1e-3, 1e-4};
    Eigen::MatrixXcd ex = Eigen::MatrixXcd::Zero(3, 3);
    for (int i = 0; i < 3; ++i) {
        double w = 1;
        for (int j = 0; j < 3; ++j)
            if (j != i) w *= -al[j] / (al[i] - al[j]);
        ex += w * r.eval(al[i]);
    }
    CHECK((lim - ex).cwiseAbs().maxCoeff() < 1e-9);
}
