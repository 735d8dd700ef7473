#include "lcft/laurent.hpp"

#include "lcft/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lcft {

LaurentScalar::LaurentScalar(cplx c) { add_term(0, c); }

LaurentScalar LaurentScalar::monomial(cplx c, int degree) {
    LaurentScalar r;
    r.add_term(degree, c);
    return r;
}

cplx LaurentScalar::coeff(int degree) const {
    auto it = c_.find(degree);
    return it == c_.end() ? cplx{} : it->second;
}

int LaurentScalar::min_degree() const { return c_.empty() ? 0 : c_.begin()->first; }
int LaurentScalar::max_degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }

cplx LaurentScalar::eval(cplx alpha) const {
    cplx sum{};
    for (const auto& [d, v] : c_) sum += v * std::pow(alpha, d);
    return sum;
}

void LaurentScalar::add_term(int degree, cplx v) {
    if (std::abs(degree) > max_laurent_degree)
        throw numerical_error("Laurent degree " + std::to_string(degree) + " outside +-" +
                              std::to_string(max_laurent_degree));
    if (std::abs(v) < prune_eps) return;
    c_[degree] += v;
}

void LaurentScalar::prune() {
    std::erase_if(c_, [](const auto& kv) { return std::abs(kv.second) < prune_eps; });
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
    for (const auto& [d, v] : o.c_) c_[d] += v;
    prune();
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
    for (const auto& [d, v] : o.c_) c_[d] -= v;
    prune();
    return *this;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) {
    std::map<int, cplx> out;
    for (const auto& [d1, v1] : c_)
        for (const auto& [d2, v2] : o.c_) {
            int d = d1 + d2;
            if (std::abs(d) > max_laurent_degree)
                throw numerical_error("Laurent degree overflow in product");
            out[d] += v1 * v2;
        }
    c_ = std::move(out);
    prune();
    return *this;
}

LaurentScalar& LaurentScalar::operator*=(cplx s) {
    for (auto& kv : c_) kv.second *= s;
    prune();
    return *this;
}

AlphaMatrix AlphaMatrix::identity(int n) {
    AlphaMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = LaurentScalar(1.0);
    return m;
}

AlphaMatrix AlphaMatrix::constant(const Eigen::MatrixXcd& c) {
    AlphaMatrix m(static_cast<int>(c.rows()), static_cast<int>(c.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = LaurentScalar(c(i, j));
    return m;
}

void AlphaMatrix::check_same_shape(const AlphaMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        std::ostringstream os;
        os << op << ": " << rows_ << "x" << cols_ << " vs " << o.rows_ << "x" << o.cols_;
        throw shape_error(os.str());
    }
}

AlphaMatrix& AlphaMatrix::operator+=(const AlphaMatrix& o) {
    check_same_shape(o, "add");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

AlphaMatrix& AlphaMatrix::operator-=(const AlphaMatrix& o) {
    check_same_shape(o, "sub");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

AlphaMatrix& AlphaMatrix::operator*=(cplx s) {
    for (auto& x : e_) x *= s;
    return *this;
}

AlphaMatrix operator*(const AlphaMatrix& a, const AlphaMatrix& b) {
    if (a.cols_ != b.rows_) {
        std::ostringstream os;
        os << "mul: " << a.rows_ << "x" << a.cols_ << " * " << b.rows_ << "x" << b.cols_;
        throw shape_error(os.str());
    }
    AlphaMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const auto& y = b(k, j);
                if (!y.is_zero()) r(i, j) += x * y;
            }
        }
    return r;
}

Eigen::MatrixXcd AlphaMatrix::eval(cplx alpha) const {
    if (alpha == cplx{}) throw invalid_parameter("eval at alpha = 0; use limit0");
    Eigen::MatrixXcd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(alpha);
    return m;
}

Eigen::MatrixXcd AlphaMatrix::limit0(double tol) const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            for (const auto& [d, v] : (*this)(i, j).terms())
                if (d < 0 && std::abs(v) >= tol) {
                    std::ostringstream os;
                    os << "divergent limit at entry (" << i + 1 << "," << j + 1 << "), degree " << d
                       << ", |coefficient| = " << std::abs(v);
                    throw divergent_limit(os.str());
                }
    return coefficient(0);
}

Eigen::MatrixXcd AlphaMatrix::coefficient(int degree) const {
    Eigen::MatrixXcd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).coeff(degree);
    return m;
}

double AlphaMatrix::max_nonconstant() const {
    double worst = 0;
    for (const auto& x : e_)
        for (const auto& [d, v] : x.terms())
            if (d != 0) worst = std::max(worst, std::abs(v));
    return worst;
}

int AlphaMatrix::min_degree() const {
    int d = 0;
    for (const auto& x : e_)
        if (!x.is_zero()) d = std::min(d, x.min_degree());
    return d;
}

int AlphaMatrix::max_degree() const {
    int d = 0;
    for (const auto& x : e_)
        if (!x.is_zero()) d = std::max(d, x.max_degree());
    return d;
}

AlphaMatrix AlphaMatrix::block(int r, int c, int nr, int nc) const {
    AlphaMatrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r + i, c + j);
    return b;
}

void AlphaMatrix::set_block(int r, int c, const AlphaMatrix& b) {
    if (r + b.rows() > rows_ || c + b.cols() > cols_) throw shape_error("set_block out of range");
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) (*this)(r + i, c + j) = b(i, j);
}

}  // namespace lcft
