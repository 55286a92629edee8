#include "hochkit/matrix.hpp"

#include <atomic>
#include <ostream>

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

std::atomic<std::size_t> g_entry_limit{kDefaultEntryLimit};

void require_same_ring(const Matrix& a, const Matrix& b, const char* op) {
    if (a.ring() != b.ring()) {
        throw ValidationError("ring", std::string("ring mismatch in ") + op + ": " + a.ring().name() + " vs " +
                                          b.ring().name());
    }
}

}  // namespace

std::size_t entry_limit() noexcept { return g_entry_limit.load(std::memory_order_relaxed); }

void set_entry_limit(std::size_t limit) noexcept { g_entry_limit.store(limit, std::memory_order_relaxed); }

void check_entry_limit(std::size_t rows, std::size_t cols, const std::string& what) {
    const std::size_t limit = entry_limit();
    if (cols != 0 && rows > limit / cols) {
        throw SizeGuardError("size_guard",
                             what + " would need " + std::to_string(rows) + "x" + std::to_string(cols) +
                                 " entries, above the limit of " + std::to_string(limit),
                             std::to_string(rows) + "x" + std::to_string(cols));
    }
}

Matrix::Matrix(ScalarRing ring, std::size_t rows, std::size_t cols) : ring_(ring), rows_(rows), cols_(cols) {
    check_entry_limit(rows, cols, "matrix");
    data_.resize(rows * cols);
}

Matrix Matrix::identity(ScalarRing ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(ScalarRing ring, std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    Matrix m(ring, nr, nc);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw ValidationError("shape", "ragged matrix literal");
        std::size_t c = 0;
        for (long v : row) m.set(r, c++, Scalar(v));
        ++r;
    }
    return m;
}

Matrix Matrix::column_vector(ScalarRing ring, std::span<const Scalar> values) {
    Matrix m(ring, values.size(), 1);
    for (std::size_t i = 0; i < values.size(); ++i) m.set(i, 0, values[i]);
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) { data_[r * cols_ + c] = ring_.reduce(value); }

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
    if (value == 0) return;
    Scalar& slot = data_[r * cols_ + c];
    slot = ring_.reduce(slot + value);
}

Matrix Matrix::column(std::size_t c) const {
    Matrix out(ring_, rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
    Matrix out(ring_, rows_, indices.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < indices.size(); ++j) out.data_[r * indices.size() + j] = (*this)(r, indices[j]);
    }
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix out(ring_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) out.data_[r * nc + c] = (*this)(r0 + r, c0 + c);
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = (*this)(r, c);
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (x != 0) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

Matrix Matrix::over(const ScalarRing& ring) const {
    Matrix out(ring, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring.reduce(data_[i]);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b, "product");
    if (a.cols_ != b.rows_) {
        throw ValidationError("shape", "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                           " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    Matrix out(a.ring_, a.rows_, b.cols_);
    std::vector<Scalar> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (auto& x : acc) x = 0;
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik == 0) continue;
            const Scalar* brow = b.data_.data() + k * b.cols_;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (brow[j] != 0) acc[j] += aik * brow[j];
            }
        }
        for (std::size_t j = 0; j < b.cols_; ++j) out.data_[i * b.cols_ + j] = a.ring_.reduce(acc[j]);
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b, "sum");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("shape", "sum of mismatched shapes");
    Matrix out(a.ring_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.ring_.add(a.data_[i], b.data_[i]);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b, "difference");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw ValidationError("shape", "difference of mismatched shapes");
    }
    Matrix out(a.ring_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.ring_.sub(a.data_[i], b.data_[i]);
    return out;
}

Matrix operator-(const Matrix& a) {
    Matrix out(a.ring_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.ring_.neg(a.data_[i]);
    return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix out(a.ring_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.ring_.mul(s, a.data_[i]);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ValidationError("shape", "hconcat of matrices with different row counts");
    Matrix out(a.ring(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b(r, c));
    }
    return out;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ValidationError("shape", "vconcat of matrices with different column counts");
    Matrix out(a.ring(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b(r, c));
    }
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix out(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    if (b(k, l) != 0) out.set(i * b.rows() + k, j * b.cols() + l, aij * b(k, l));
                }
            }
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[" << m.ring().name() << " " << m.rows() << "x" << m.cols() << "]\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << " ";
        for (std::size_t c = 0; c < m.cols(); ++c) os << ' ' << m(r, c).get_str();
        os << '\n';
    }
    return os;
}

}  // namespace hochkit
