#pragma once

// Dense exact linear algebra over a prime field F_q.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tate::la {

using Scalar = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 32003;

class PrimeField {
public:
    explicit PrimeField(std::uint32_t q = kDefaultPrime);

    std::uint32_t prime() const { return q_; }

    Scalar add(Scalar a, Scalar b) const
    {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + q_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : q_ - a; }
    Scalar mul(Scalar a, Scalar b) const
    {
        return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % q_);
    }
    Scalar inv(Scalar a) const;
    Scalar from_int(std::int64_t x) const;
    /// Symmetric representative in (-q/2, q/2], for display.
    std::int64_t to_signed(Scalar a) const;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t q_;
};

bool is_prime(std::uint32_t q);

class Matrix {
public:
    Matrix() = default;
    Matrix(PrimeField field, std::size_t rows, std::size_t cols);

    static Matrix identity(PrimeField field, std::size_t n);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Scalar* row(std::size_t r) { return data_.data() + r * cols_; }
    const Scalar* row(std::size_t r) const { return data_.data() + r * cols_; }

    Matrix transpose() const;
    bool is_zero() const;

    /// Columns listed in `which`, in that order.
    Matrix select_columns(const std::vector<std::size_t>& which) const;
    /// Rows listed in `which`, in that order.
    Matrix select_rows(const std::vector<std::size_t>& which) const;
    /// [this | other], row counts must agree.
    Matrix hconcat(const Matrix& other) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    bool operator==(const Matrix&) const = default;

private:
    PrimeField field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RankProfile {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form with leftmost pivots. Zero rows are dropped.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

Echelon row_echelon(Matrix m);

RankProfile rank_profile(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns spanning ker m. The basis restricted to the free (non-pivot)
/// columns of m is the identity, so coordinates of any kernel vector can be
/// read off at `coordinate_rows`.
struct Kernel {
    Matrix basis;
    std::vector<std::size_t> coordinate_rows;
};

Kernel kernel(const Matrix& m);
Matrix kernel_basis(const Matrix& m);

/// Echelon basis (as columns) of the column span of m, with the same
/// coordinate-row property as Kernel.
Kernel column_space(const Matrix& m);

/// X with m * X == target, or nullopt when some column of target lies
/// outside the column span of m.
std::optional<Matrix> preimage_solve(const Matrix& m, const Matrix& target);

/// Incrementally grown span, used to build echelon bases one vector at a time.
class SpanBuilder {
public:
    SpanBuilder(PrimeField field, std::size_t dim);

    /// Reduces v against the current basis; adds it and returns true when
    /// it was independent.
    bool insert(std::vector<Scalar> v);
    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    bool full() const { return rows_.size() == dim_; }
    /// Positions that are not pivots of the span; the matching unit vectors
    /// complement it.
    std::vector<std::size_t> non_pivots() const;

private:
    PrimeField field_;
    std::size_t dim_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::int64_t> pivot_row_of_; // -1 when not a pivot
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace tate::la
