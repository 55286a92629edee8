#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hochkit/scalar_ring.hpp"

namespace hochkit {

/// Default ceiling on rows * cols for any dense matrix.
inline constexpr std::size_t kDefaultEntryLimit = 4'000'000;

/// Current entry limit (process wide, thread safe).
[[nodiscard]] std::size_t entry_limit() noexcept;
void set_entry_limit(std::size_t limit) noexcept;

/// Throws SizeGuardError when rows * cols exceeds entry_limit().
void check_entry_limit(std::size_t rows, std::size_t cols, const std::string& what);

/// Dense row-major matrix over a ScalarRing. Entries are always canonical.
class Matrix {
   public:
    Matrix() : ring_(ScalarRing::rationals()) {}
    Matrix(ScalarRing ring, std::size_t rows, std::size_t cols);

    static Matrix identity(ScalarRing ring, std::size_t n);
    /// Convenience constructor for literals; values are reduced into the ring.
    static Matrix from_rows(ScalarRing ring, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix column_vector(ScalarRing ring, std::span<const Scalar> values);

    [[nodiscard]] const ScalarRing& ring() const noexcept { return ring_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    [[nodiscard]] const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// Stores ring.reduce(value).
    void set(std::size_t r, std::size_t c, const Scalar& value);
    /// Adds value into (r, c) and reduces.
    void add_to(std::size_t r, std::size_t c, const Scalar& value);

    [[nodiscard]] std::span<const Scalar> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    [[nodiscard]] Matrix column(std::size_t c) const;
    [[nodiscard]] Matrix select_columns(std::span<const std::size_t> indices) const;
    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_identity() const;
    /// Same entries viewed over another ring (e.g. Z -> Q); entries are re-reduced.
    [[nodiscard]] Matrix over(const ScalarRing& ring) const;

    [[nodiscard]] const std::vector<Scalar>& entries() const noexcept { return data_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

   private:
    ScalarRing ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

[[nodiscard]] Matrix hconcat(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix vconcat(const Matrix& a, const Matrix& b);
/// Kronecker product a (x) b, row-major in (row of a, row of b).
[[nodiscard]] Matrix kronecker(const Matrix& a, const Matrix& b);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace hochkit
