#include "qjoin/matrix.hpp"

#include "qjoin/error.hpp"
#include "qjoin/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace qjoin {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("mat_mul: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    const auto& k = kern::active();
    for (int i = 0; i < a.rows(); ++i) {
        double* ci = c.row(i);
        for (int l = 0; l < a.cols(); ++l) {
            const double ail = a(i, l);
            if (ail != 0.0) k.axpy(ail, b.row(l), ci, static_cast<std::size_t>(b.cols()));
        }
    }
    return c;
}

Matrix mat_mul_bt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw InvalidArgument("mat_mul_bt: inner dimensions differ");
    Matrix c(a.rows(), b.rows());
    const auto& k = kern::active();
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.rows(); ++j)
            c(i, j) = k.dot(a.row(i), b.row(j), static_cast<std::size_t>(a.cols()));
    return c;
}

Matrix conjugate_diag(const Matrix& q, std::span<const double> d) {
    if (static_cast<std::size_t>(q.cols()) != d.size())
        throw InvalidArgument("conjugate_diag: diagonal length must match column count");
    Matrix scaled = q;
    for (int i = 0; i < scaled.rows(); ++i)
        for (int j = 0; j < scaled.cols(); ++j) scaled(i, j) *= d[j];
    return mat_mul_bt(scaled, q);
}

std::vector<double> mat_vec(const Matrix& a, std::span<const double> x) {
    if (static_cast<std::size_t>(a.cols()) != x.size())
        throw InvalidArgument("mat_vec: dimension mismatch");
    std::vector<double> y(static_cast<std::size_t>(a.rows()), 0.0);
    const auto& k = kern::active();
    for (int i = 0; i < a.rows(); ++i)
        y[static_cast<std::size_t>(i)] = k.dot(a.row(i), x.data(), x.size());
    return y;
}

double symmetry_defect(const Matrix& a) {
    double d = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) d = std::max(d, std::fabs(a(i, j) - a(j, i)));
    return d;
}

Matrix require_symmetric(const Matrix& a, const char* what) {
    if (!a.is_square()) throw InvalidArgument(std::string(what) + ": matrix is not square");
    const double tol = 1e-12 * (1.0 + a.max_abs());
    if (symmetry_defect(a) > tol)
        throw InvalidArgument(std::string(what) + ": matrix is not symmetric");
    Matrix s = a;
    for (int i = 0; i < s.rows(); ++i)
        for (int j = i + 1; j < s.cols(); ++j) {
            const double v = 0.5 * (s(i, j) + s(j, i));
            s(i, j) = v;
            s(j, i) = v;
        }
    return s;
}

void write_matrix(std::ostream& os, const Matrix& a) {
    if (!a.is_square()) throw InvalidArgument("write_matrix: matrix is not square");
    os << a.rows() << '\n';
    char buf[64];
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
            os << (j ? " " : "") << buf;
        }
        os << '\n';
    }
}

Matrix read_matrix(std::istream& is) {
    int n = 0;
    if (!(is >> n) || n <= 0) throw ParseError("matrix file: bad dimension line");
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(is >> a(i, j))) throw ParseError("matrix file: truncated entries");
    return a;
}

void write_matrix_file(const std::string& path, const Matrix& a) {
    std::ofstream os(path);
    if (!os) throw ParseError("cannot open for writing: " + path);
    write_matrix(os, a);
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open: " + path);
    return read_matrix(is);
}

} // namespace qjoin
