#pragma once

// Smith normal form over the integers, with overflow-checked arithmetic.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace klein {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    long long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<long long> data_;
};

/// Throws std::overflow_error on overflow.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
long long determinant(const IntMatrix& m);

struct SmithForm {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;

    /// Diagonal entries, including zeros, min(rows, cols) of them.
    std::vector<long long> diagonal() const;
    std::size_t rank() const;
};

/// U M V = D with U, V unimodular, D diagonal with d_i >= 0 and d_i | d_(i+1).
/// Throws std::overflow_error if an intermediate entry leaves the range of
/// long long.
SmithForm smith_normal_form(const IntMatrix& m);

/// Invariant factors of Z^cols / (row space of the relation matrix):
/// the free rank and the torsion factors greater than 1.
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<long long> torsion;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
    /// "Z+Z/2" style; "0" for the trivial group.
    std::string to_string() const;
};

AbelianGroup cokernel_of_relations(const IntMatrix& relations);

}  // namespace klein
