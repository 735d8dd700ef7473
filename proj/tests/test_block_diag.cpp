#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcft/alpha_modular.hpp"
#include "lcft/block_diag.hpp"
#include "lcft/errors.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <cmath>

using namespace lcft;

namespace {

Eigen::MatrixXd rational_matrix(const json& rows) {
    Eigen::MatrixXd m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = test::parse_rational(rows[i][j]);
    return m;
}

// {"0": "2", "1": "3"} -> 2 + 3 alpha
LaurentScalar laurent_entry(const json& e) {
    LaurentScalar r;
    for (const auto& [deg, c] : e.items()) r += LaurentScalar::monomial(test::parse_rational(c), std::stoi(deg));
    return r;
}

double laurent_diff(const LaurentScalar& a, const LaurentScalar& b) {
    double d = 0;
    for (int k = -max_laurent_degree; k <= max_laurent_degree; ++k) d = std::max(d, std::abs(a.coeff(k) - b.coeff(k)));
    return d;
}

Eigen::MatrixXd id(int n) { return Eigen::MatrixXd::Identity(n, n); }

}  // namespace

TEST_CASE("C and its inverse") {
    json fx = load_json(test::fixture("modular_p2_p3.json"));
    for (int p : {2, 3}) {
        CPair c = build_C(p);
        const json& blocks = fx[p == 2 ? "C2_inv_blocks" : "C3_inv_blocks"];
        for (int s = 1; s < p; ++s)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    int o = block_offset(s);
                    CHECK(laurent_diff(c.C_inv(o + i, o + j), laurent_entry(blocks[s - 1][i][j])) < 1e-15);
                }
    }
    for (int p = 2; p <= 12; ++p) {
        CPair c = build_C(p);
        AlphaMatrix prod = c.C * c.C_inv;
        CHECK(prod.max_nonconstant() < 1e-10);
        CHECK((prod.coefficient(0) - Eigen::MatrixXcd::Identity(3 * p - 1, 3 * p - 1)).cwiseAbs().maxCoeff() < 1e-10);
    }
    CHECK_THROWS_AS(build_C(1), invalid_parameter);
}

TEST_CASE("C' relation to the first two rows of each C block") {
    // C rows equal C'(alpha/2) up to a factor 1/2 on the tilde column
    for (int p = 2; p <= 6; ++p) {
        AlphaMatrix C = build_C(p).C, Cp = build_C_prime(p);
        REQUIRE(Cp.rows() == 2 * p);
        REQUIRE(Cp.cols() == 3 * p - 1);
        for (double a : {0.1, 0.7}) {
            Eigen::MatrixXcd c = C.eval(a), cp = Cp.eval(a / 2);
            CHECK(std::abs(cp(0, 0) - 1.0) < 1e-15);
            CHECK(std::abs(cp(1, 1) - 1.0) < 1e-15);
            for (int s = 1; s < p; ++s) {
                int o = block_offset(s);
                for (int r = 0; r < 2; ++r) {
                    CHECK(std::abs(c(o + r, o) - cp(2 * s + r, o)) < 1e-14);
                    CHECK(std::abs(c(o + r, o + 1) - cp(2 * s + r, o + 1)) < 1e-14);
                    CHECK(std::abs(c(o + r, o + 2) - 0.5 * cp(2 * s + r, o + 2)) < 1e-14);
                }
            }
        }
    }
}

TEST_CASE("S_2 and K_2 match the printed matrices") {
    json fx = load_json(test::fixture("modular_p2_p3.json"));
    CHECK((build_S(2) - rational_matrix(fx["S2"])).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((build_K(2).M - rational_matrix(fx["K2"])).cwiseAbs().maxCoeff() < 1e-15);
    Eigen::EigenSolver<Eigen::MatrixXd> es(build_S(2));
    std::vector<double> ev;
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(es.eigenvalues()(i).imag()) < 1e-10);
        ev.push_back(es.eigenvalues()(i).real());
    }
    std::sort(ev.begin(), ev.end());
    std::vector<double> want = fx["S2_eigenvalues"].get<std::vector<double>>();
    std::sort(want.begin(), want.end());
    for (int i = 0; i < 5; ++i) CHECK(std::abs(ev[i] - want[i]) < 1e-10);
}

TEST_CASE("S_p properties") {
    for (int p = 2; p <= 12; ++p) {
        Eigen::MatrixXd S = build_S(p);
        CHECK((S * S - id(3 * p - 1)).cwiseAbs().maxCoeff() < 1e-10);
        CPair C = build_C(p);
        for (double a : {0.1, 0.01}) {
            Eigen::MatrixXcd X = C.C.eval(a) * build_S_alpha(p).eval(a) * C.C_inv.eval(a);
            CHECK((X - S.cast<cplx>()).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("K_p") {
    for (int p = 2; p <= 12; ++p) {
        RealPair K = build_K(p);
        double r = std::sqrt(2.0 * p * p * p);
        CHECK(std::abs(K.M(0, 0) - r) < 1e-12);
        CHECK(std::abs(K.M(1, 1) - (p % 2 ? r : -r)) < 1e-12);
        for (int l = 1; l < p; ++l) {
            int o = block_offset(l);
            CHECK(std::abs(K.M.block<3, 3>(o, o).determinant() - 1.0) < 1e-12);
            CHECK(K.M(o + 2, o + 2) == 1.0);
            CHECK(K.M(o + 2, o) == 0.0);
            CHECK(K.M(o, o + 2) == 0.0);
        }
        CHECK((K.M * K.M_inv - id(3 * p - 1)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("P_p") {
    for (int p = 2; p <= 12; ++p) {
        RealPair P = build_P(p);
        const int n = 3 * p - 1;
        CHECK((P.M - build_S(p) * build_K(p).M).cwiseAbs().maxCoeff() == 0);
        CHECK((P.M * P.M_inv - id(n)).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((P.M.inverse() - P.M_inv).cwiseAbs().maxCoeff() < 1e-9);
        CHECK((P.M - build_P_closed(p)).cwiseAbs().maxCoeff() < 1e-10);
        Eigen::RowVectorXd vac = Eigen::RowVectorXd::Zero(n);
        vac(0) = vac(1) = 1;
        for (int s = 1; s < p; ++s) vac(block_offset(s)) = 1;
        CHECK((P.M.row(2) - vac).cwiseAbs().maxCoeff() < 1e-12);
    }
    Eigen::Matrix2d p00;
    p00 << 2, -2, 2, -2;
    CHECK((build_P(2).M.topLeftCorner(2, 2) - p00).cwiseAbs().maxCoeff() < 1e-14);
    // P_{s,0} rows (s, (-1)^{s+1} s), (p-s, ...), (2p, ...)
    Eigen::MatrixXd P5 = build_P(5).M;
    for (int s = 1; s < 5; ++s) {
        int o = block_offset(s);
        double e = (s % 2) ? 1 : -1;
        CHECK(std::abs(P5(o, 0) - s) < 1e-12);
        CHECK(std::abs(P5(o, 1) - e * s) < 1e-12);
        CHECK(std::abs(P5(o + 1, 1) - e * (5 - s)) < 1e-12);
        CHECK(std::abs(P5(o + 2, 1) - 2 * e * 5) < 1e-12);
    }
}

TEST_CASE("M_I block shape") {
    for (int p = 2; p <= 6; ++p) {
        RealPair P = build_P(p);
        const int n = 3 * p - 1;
        BasisOrdering b = basis_ordering(p);
        CHECK((build_M(P.M, 3) - id(n)).cwiseAbs().maxCoeff() < 1e-12);
        for (int I = 1; I <= n; ++I) {
            Eigen::MatrixXd M = build_M(P.M, I);
            for (int s = 1; s < p; ++s) {
                int o = block_offset(s);
                CHECK(M(o + 1, o + 1) == M(o, o));
                CHECK(M(o + 2, o + 2) == M(o, o));
                CHECK(M(o + 1, o + 2) == 0);
                if (b.at(I).irreducible()) CHECK(std::abs(M(o, o + 2)) < 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(build_M(2, 0), invalid_parameter);
    CHECK_THROWS_AS(build_M(2, 6), invalid_parameter);
}

TEST_CASE("pre-fusion matrices") {
    json fx = load_json(test::fixture("modular_p2_p3.json"));
    FusionTable t2 = prefusion_matrices(2);
    IntMatrix n21(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) n21(i, j) = fx["N21"][i][j].get<long long>();
    CHECK(t2.N[0] == n21);
    CHECK(t2.N[2] == IntMatrix::Identity(5, 5));
    FusionTable t3 = prefusion_matrices(3);
    CHECK(t3.coeff(5, 4, 5) == -1);
    for (int p = 2; p <= 12; ++p) CHECK(prefusion_matrices(p).max_residual < 1e-7);
    CHECK_THROWS_AS(prefusion_matrices(4, 0.0), integrality_failure);
}

TEST_CASE("generalised eigenvectors and the M algebra") {
    for (int p = 2; p <= 8; ++p) {
        RealPair P = build_P(p);
        FusionTable t = prefusion_matrices(p);
        const int n = t.dim();
        for (int I = 1; I <= n; ++I) {
            Eigen::MatrixXd N = t.N[I - 1].cast<double>();
            for (int s = 1; s < p; ++s) {
                int J = block_offset(s) + 1;  // 0-based column of p_J
                Eigen::VectorXd pj = P.M.col(J), pj1 = P.M.col(J - 1);
                double d = P.M(I - 1, J - 1);
                Eigen::MatrixXd A = N - d * id(n);
                CHECK((A * A * pj).cwiseAbs().maxCoeff() < 1e-8);
                CHECK((N * pj - P.M(I - 1, J) * pj1 - d * pj).cwiseAbs().maxCoeff() < 1e-8);
            }
            for (int J = 1; J <= n; ++J) {
                Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
                for (int K = 1; K <= n; ++K) sum += double(t.coeff(I, J, K)) * build_M(P.M, K);
                CHECK((build_M(P.M, I) * build_M(P.M, J) - sum).cwiseAbs().maxCoeff() < 1e-8);
            }
        }
    }
}

TEST_CASE("projection onto the irreducibles") {
    for (int p = 2; p <= 12; ++p) {
        FusionTable t = prefusion_matrices(p);
        std::vector<IntMatrix> small = project_small(t);
        REQUIRE(int(small.size()) == 2 * p);
        std::vector<int> perm = permutation_newseq(p);
        for (int a = 0; a < 2 * p; ++a) {
            IntMatrix m = permute(t.N[perm[a] - 1], perm);
            CHECK(m.topRightCorner(2 * p, p - 1).cwiseAbs().maxCoeff() == 0);
            if (perm[a] == 3) CHECK(small[a] == IntMatrix::Identity(2 * p, 2 * p));
        }
    }
    FusionTable bad = prefusion_matrices(2);
    bad.N[0](0, 4) = 1;
    CHECK_THROWS_AS(project_small(bad), projection_violation);
}
