#include "tate/exactla.hpp"

#include <algorithm>
#include <utility>

namespace tate::la {

bool is_prime(std::uint32_t q)
{
    if (q < 2)
        return false;
    for (std::uint64_t f = 2; f * f <= q; ++f)
        if (q % f == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q)
{
    // Products are formed in 64 bits and sums must not overflow 32 bits.
    if (q >= (1u << 31) || !is_prime(q))
        throw std::invalid_argument("field modulus must be a prime below 2^31, got " + std::to_string(q));
}

Scalar PrimeField::inv(Scalar a) const
{
    if (a == 0)
        throw std::domain_error("inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q_, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0)
        t += q_;
    return static_cast<Scalar>(t);
}

Scalar PrimeField::from_int(std::int64_t x) const
{
    std::int64_t r = x % static_cast<std::int64_t>(q_);
    if (r < 0)
        r += q_;
    return static_cast<Scalar>(r);
}

std::int64_t PrimeField::to_signed(Scalar a) const
{
    return a > q_ / 2 ? static_cast<std::int64_t>(a) - q_ : a;
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

Matrix Matrix::identity(PrimeField field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& which) const
{
    Matrix out(field_, rows_, which.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < which.size(); ++k)
            out(r, k) = (*this)(r, which[k]);
    return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& which) const
{
    Matrix out(field_, which.size(), cols_);
    for (std::size_t k = 0; k < which.size(); ++k)
        std::copy_n(row(which[k]), cols_, out.row(k));
    return out;
}

Matrix Matrix::hconcat(const Matrix& other) const
{
    if (rows_ != other.rows_)
        throw DimensionMismatch("hconcat: row counts differ");
    Matrix out(field_, rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::copy_n(row(r), cols_, out.row(r));
        std::copy_n(other.row(r), other.cols_, out.row(r) + cols_);
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product: inner dimensions differ");
    const std::uint64_t q = a.field_.prime();
    Matrix out(a.field_, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        const Scalar* arow = a.row(i);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const std::uint64_t x = arow[k];
            if (x == 0)
                continue;
            const Scalar* brow = b.row(k);
            for (std::size_t j = 0; j < b.cols_; ++j)
                acc[j] = (acc[j] + x * brow[j]) % q;
        }
        Scalar* orow = out.row(i);
        for (std::size_t j = 0; j < b.cols_; ++j)
            orow[j] = static_cast<Scalar>(acc[j]);
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix sum: shapes differ");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix difference: shapes differ");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return out;
}

Echelon row_echelon(Matrix m)
{
    const PrimeField field = m.field();
    const std::uint64_t q = field.prime();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows; ++c) {
        std::size_t found = rows;
        for (std::size_t r = next; r < rows; ++r)
            if (m(r, c) != 0) {
                found = r;
                break;
            }
        if (found == rows)
            continue;
        if (found != next)
            std::swap_ranges(m.row(found), m.row(found) + cols, m.row(next));
        Scalar* prow = m.row(next);
        const Scalar scale = field.inv(prow[c]);
        for (std::size_t j = c; j < cols; ++j)
            prow[j] = field.mul(prow[j], scale);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next)
                continue;
            Scalar* row = m.row(r);
            const std::uint64_t f = row[c];
            if (f == 0)
                continue;
            const std::uint64_t nf = q - f;
            for (std::size_t j = c; j < cols; ++j)
                row[j] = static_cast<Scalar>((row[j] + nf * prow[j]) % q);
        }
        pivots.push_back(c);
        ++next;
    }
    Matrix reduced(field, next, cols);
    for (std::size_t r = 0; r < next; ++r)
        std::copy_n(m.row(r), cols, reduced.row(r));
    return {std::move(reduced), std::move(pivots)};
}

RankProfile rank_profile(const Matrix& m)
{
    auto ech = row_echelon(m);
    return {ech.pivot_columns.size(), std::move(ech.pivot_columns)};
}

std::size_t rank(const Matrix& m)
{
    // Eliminate along the shorter side.
    if (m.rows() > m.cols())
        return row_echelon(m.transpose()).pivot_columns.size();
    return row_echelon(m).pivot_columns.size();
}

Kernel kernel(const Matrix& m)
{
    const PrimeField field = m.field();
    auto ech = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivot_columns)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);

    Matrix basis(field, m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis(f, k) = 1;
        for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i)
            basis(ech.pivot_columns[i], k) = field.neg(ech.reduced(i, f));
    }
    return {std::move(basis), std::move(free_cols)};
}

Matrix kernel_basis(const Matrix& m)
{
    return kernel(m).basis;
}

Kernel column_space(const Matrix& m)
{
    auto ech = row_echelon(m.transpose());
    return {ech.reduced.transpose(), std::move(ech.pivot_columns)};
}

std::optional<Matrix> preimage_solve(const Matrix& m, const Matrix& target)
{
    if (m.rows() != target.rows())
        throw DimensionMismatch("preimage_solve: row counts differ");
    const PrimeField field = m.field();
    auto ech = row_echelon(m.hconcat(target));
    Matrix x(field, m.cols(), target.cols());
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
        const std::size_t c = ech.pivot_columns[i];
        if (c >= m.cols())
            return std::nullopt;
        for (std::size_t j = 0; j < target.cols(); ++j)
            x(c, j) = ech.reduced(i, m.cols() + j);
    }
    return x;
}

SpanBuilder::SpanBuilder(PrimeField field, std::size_t dim)
    : field_(field), dim_(dim), pivot_row_of_(dim, -1)
{
}

bool SpanBuilder::insert(std::vector<Scalar> v)
{
    if (v.size() != dim_)
        throw DimensionMismatch("SpanBuilder::insert: wrong vector length");
    const std::uint64_t q = field_.prime();
    // Row i vanishes at the pivots of rows 0..i-1, so one pass in insertion
    // order clears every pivot position of v.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint64_t f = v[pivots_[i]];
        if (f == 0)
            continue;
        const std::uint64_t nf = q - f;
        const auto& r = rows_[i];
        for (std::size_t j = 0; j < dim_; ++j)
            if (r[j] != 0)
                v[j] = static_cast<Scalar>((v[j] + nf * r[j]) % q);
    }
    std::size_t lead = 0;
    while (lead < dim_ && v[lead] == 0)
        ++lead;
    if (lead == dim_)
        return false;
    const Scalar scale = field_.inv(v[lead]);
    for (std::size_t j = lead; j < dim_; ++j)
        v[j] = field_.mul(v[j], scale);
    pivot_row_of_[lead] = static_cast<std::int64_t>(rows_.size());
    pivots_.push_back(lead);
    rows_.push_back(std::move(v));
    return true;
}

std::vector<std::size_t> SpanBuilder::non_pivots() const
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < dim_; ++j)
        if (pivot_row_of_[j] < 0)
            out.push_back(j);
    return out;
}

} // namespace tate::la
