#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <vector>

namespace lcft {

using cplx = std::complex<double>;

inline constexpr double prune_eps = 1e-12;
inline constexpr int max_laurent_degree = 8;

// Finite Laurent polynomial in alpha with complex coefficients.
class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(cplx c);  // NOLINT: constants convert implicitly
    static LaurentScalar monomial(cplx c, int degree);
    LaurentScalar& operator=(cplx c) { return *this = LaurentScalar(c); }

    const std::map<int, cplx>& terms() const { return c_; }
    cplx coeff(int degree) const;
    bool is_zero() const { return c_.empty(); }
    int min_degree() const;
    int max_degree() const;

    cplx eval(cplx alpha) const;

    LaurentScalar& operator+=(const LaurentScalar& o);
    LaurentScalar& operator-=(const LaurentScalar& o);
    LaurentScalar& operator*=(const LaurentScalar& o);
    LaurentScalar& operator*=(cplx s);

    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    friend LaurentScalar operator*(LaurentScalar a, const LaurentScalar& b) { return a *= b; }
    friend LaurentScalar operator*(LaurentScalar a, cplx s) { return a *= s; }
    friend LaurentScalar operator*(cplx s, LaurentScalar a) { return a *= s; }
    LaurentScalar operator-() const { return *this * cplx(-1.0); }

private:
    void add_term(int degree, cplx v);
    void prune();

    std::map<int, cplx> c_;
};

// Dense rows x cols matrix of Laurent polynomials. Element access is 0-based.
class AlphaMatrix {
public:
    AlphaMatrix() = default;
    AlphaMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static AlphaMatrix identity(int n);
    static AlphaMatrix constant(const Eigen::MatrixXcd& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentScalar& operator()(int i, int j) { return e_[i * cols_ + j]; }
    const LaurentScalar& operator()(int i, int j) const { return e_[i * cols_ + j]; }

    AlphaMatrix& operator+=(const AlphaMatrix& o);
    AlphaMatrix& operator-=(const AlphaMatrix& o);
    AlphaMatrix& operator*=(cplx s);
    friend AlphaMatrix operator+(AlphaMatrix a, const AlphaMatrix& b) { return a += b; }
    friend AlphaMatrix operator-(AlphaMatrix a, const AlphaMatrix& b) { return a -= b; }
    friend AlphaMatrix operator*(AlphaMatrix a, cplx s) { return a *= s; }
    friend AlphaMatrix operator*(const AlphaMatrix& a, const AlphaMatrix& b);

    // alpha == 0 is rejected; use limit0.
    Eigen::MatrixXcd eval(cplx alpha) const;

    // Degree-0 coefficients, provided every negative-degree coefficient is
    // below tol (throws divergent_limit otherwise).
    Eigen::MatrixXcd limit0(double tol) const;

    Eigen::MatrixXcd coefficient(int degree) const;
    // Largest |coefficient| over all degrees != 0.
    double max_nonconstant() const;
    int min_degree() const;
    int max_degree() const;

    // Copy of the sub-block starting at (r, c).
    AlphaMatrix block(int r, int c, int nr, int nc) const;
    void set_block(int r, int c, const AlphaMatrix& b);

private:
    void check_same_shape(const AlphaMatrix& o, const char* op) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<LaurentScalar> e_;
};

}  // namespace lcft
