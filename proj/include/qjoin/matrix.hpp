#pragma once

#include <iosfwd>
#include <span>
#include <vector>

namespace qjoin {

// Dense row-major real matrix. Square symmetric matrices are the common case
// here; rectangular ones appear as eigenvector/basis blocks.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static Matrix identity(int n);
    static Matrix diagonal(std::span<const double> d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    double* row(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }
    const double* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }

    std::span<double> data() { return a_; }
    std::span<const double> data() const { return a_; }

    Matrix transposed() const;
    double max_abs() const;
    bool is_square() const { return rows_ == cols_; }

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
// a * b^T without forming the transpose.
Matrix mat_mul_bt(const Matrix& a, const Matrix& b);
// q * diag(d) * q^T for q with orthonormal columns spanning the d entries.
Matrix conjugate_diag(const Matrix& q, std::span<const double> d);

std::vector<double> mat_vec(const Matrix& a, std::span<const double> x);

// max |a - a^T| over entries.
double symmetry_defect(const Matrix& a);

// Throws InvalidArgument unless a is square and symmetric to 1e-12 relative;
// returns (a + a^T)/2 so downstream code sees an exactly symmetric matrix.
Matrix require_symmetric(const Matrix& a, const char* what);

// Text format: first line n, then n rows of n entries. Values are written
// with 17 significant digits so read(write(A)) == A.
void write_matrix(std::ostream& os, const Matrix& a);
Matrix read_matrix(std::istream& is);
void write_matrix_file(const std::string& path, const Matrix& a);
Matrix read_matrix_file(const std::string& path);

} // namespace qjoin
