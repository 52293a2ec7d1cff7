#include "klein/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace klein {

namespace {

long long checked_mul(long long a, long long b)
{
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith normal form");
    return r;
}

long long checked_add(long long a, long long b)
{
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith normal form");
    return r;
}

// row_i += k * row_j, on D and on U (U accumulates the row operations).
void add_row(IntMatrix& m, std::size_t i, std::size_t j, long long k)
{
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = checked_add(m(i, c), checked_mul(k, m(j, c)));
}

void add_col(IntMatrix& m, std::size_t i, std::size_t j, long long k)
{
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) = checked_add(m(r, i), checked_mul(k, m(r, j)));
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j)
{
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j)
{
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

void negate_row(IntMatrix& m, std::size_t i)
{
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged integer matrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    }
    os << ']';
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("integer matrix shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            long long s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) s = checked_add(s, checked_mul(a(r, k), b(k, c)));
            out(r, c) = s;
        }
    return out;
}

long long determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() > 8) throw std::invalid_argument("determinant: matrix too large for cofactor expansion");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    long long total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        const long long term = checked_mul(m(0, c), determinant(minor));
        total = checked_add(total, (c % 2) ? -term : term);
    }
    return total;
}

std::vector<long long> SmithForm::diagonal() const
{
    std::vector<long long> out;
    for (std::size_t k = 0; k < std::min(d.rows(), d.cols()); ++k) out.push_back(d(k, k));
    return out;
}

std::size_t SmithForm::rank() const
{
    std::size_t r = 0;
    for (long long x : diagonal()) r += x != 0;
    return r;
}

SmithForm smith_normal_form(const IntMatrix& m)
{
    SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& d = s.d;
    const std::size_t rows = d.rows(), cols = d.cols();

    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        for (;;) {
            // Smallest nonzero entry of the remaining block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = k; r < rows; ++r)
                for (std::size_t c = k; c < cols; ++c)
                    if (d(r, c) != 0 && (pr == rows || std::llabs(d(r, c)) < std::llabs(d(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows) return s;
            swap_rows(d, k, pr);
            swap_rows(s.u, k, pr);
            swap_cols(d, k, pc);
            swap_cols(s.v, k, pc);

            bool clean = true;
            for (std::size_t r = k + 1; r < rows; ++r) {
                const long long q = d(r, k) / d(k, k);
                add_row(d, r, k, -q);
                add_row(s.u, r, k, -q);
                clean = clean && d(r, k) == 0;
            }
            for (std::size_t c = k + 1; c < cols; ++c) {
                const long long q = d(k, c) / d(k, k);
                add_col(d, c, k, -q);
                add_col(s.v, c, k, -q);
                clean = clean && d(k, c) == 0;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t r = k + 1; r < rows && divides; ++r)
                for (std::size_t c = k + 1; c < cols; ++c)
                    if (d(r, c) % d(k, k) != 0) {
                        add_row(d, k, r, 1);
                        add_row(s.u, k, r, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d(k, k) < 0) {
            negate_row(d, k);
            negate_row(s.u, k);
        }
    }
    return s;
}

std::string AbelianGroup::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < rank; ++k, first = false) os << (first ? "" : "+") << "Z";
    for (long long t : torsion) {
        os << (first ? "" : "+") << "Z/" << t;
        first = false;
    }
    return first ? "0" : os.str();
}

AbelianGroup cokernel_of_relations(const IntMatrix& relations)
{
    const SmithForm s = smith_normal_form(relations);
    AbelianGroup g;
    g.rank = relations.cols() - s.rank();
    for (long long x : s.diagonal())
        if (x > 1) g.torsion.push_back(x);
    return g;
}

}  // namespace klein
