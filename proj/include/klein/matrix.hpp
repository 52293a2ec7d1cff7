#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "klein/scalars.hpp"

namespace klein {

/// Dense row-major matrix over exact cyclotomic scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<Cyclotomic>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cyclotomic& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_diagonal() const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Cyclotomic& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Cyclotomic& s) { return a *= s; }
    friend Matrix operator*(const Cyclotomic& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    Cyclotomic trace() const;
    Cyclotomic determinant() const;
    /// Throws std::domain_error when singular.
    Matrix inverse() const;
    Matrix pow(long long e) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cyclotomic> data_;
};

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

/// Basis of {x : m x = 0}; the k-th vector has a 1 in the k-th free
/// coordinate and 0 in the other free coordinates.
std::vector<std::vector<Cyclotomic>> nullspace(const Matrix& m);

}  // namespace klein
