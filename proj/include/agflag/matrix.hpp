#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "agflag/field.hpp"

namespace agflag {

/// Dense matrix over GF(q), row-major. Entries are stored as raw encodings;
/// at()/set() wrap them as FieldElement with cross-field checks.
class GFMatrix {
public:
    GFMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }

    FieldElement at(std::size_t i, std::size_t j) const {
        return {field_.get(), data_[i * cols_ + j]};
    }
    void set(std::size_t i, std::size_t j, FieldElement e) {
        if (!e.field().same_as(*field_)) throw FieldMismatchError("entry from a different field");
        data_[i * cols_ + j] = e.value();
    }

    std::uint32_t raw(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set_raw(std::size_t i, std::size_t j, std::uint32_t v) { data_[i * cols_ + j] = v; }

    std::span<const std::uint32_t> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const std::uint32_t> r);

    friend bool operator==(const GFMatrix& a, const GFMatrix& b) {
        return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.data_ == b.data_;
    }

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> data_;
};

struct RrefResult {
    GFMatrix matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
};

/// Unique reduced row echelon form, Gauss-Jordan with first-nonzero pivoting.
RrefResult rref(const GFMatrix& m);

/// Basis of the right kernel {v : M v^T = 0} as rows; rows() = cols - rank.
/// Basis vectors carry a 1 in their free column, free columns ascending.
GFMatrix nullspace(const GFMatrix& m);

/// True iff the two row spaces coincide (RREF comparison).
bool rowspace_equal(const GFMatrix& a, const GFMatrix& b);

GFMatrix multiply(const GFMatrix& a, const GFMatrix& b);
GFMatrix transpose(const GFMatrix& m);

/// Copy of m with column j scaled by x[j].
GFMatrix scale_columns(const GFMatrix& m, const std::vector<FieldElement>& x);

/// Incremental row-echelon accumulator: feed rows one at a time, track rank.
/// Rows are kept pivot-normalized and sorted by pivot column, so the rank is
/// exact at every step regardless of insertion order.
class EchelonAccumulator {
public:
    EchelonAccumulator(FieldPtr field, std::size_t cols)
        : field_(std::move(field)), cols_(cols) {}

    /// Reduces the row against the current basis; returns true (and keeps
    /// the reduced row) iff it increases the rank.
    bool absorb(std::vector<std::uint32_t> row);

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    /// The accumulated rows as a matrix (row space equals the span of
    /// everything absorbed so far).
    GFMatrix to_matrix() const;

private:
    struct Row {
        std::size_t pivot;
        std::vector<std::uint32_t> v;
    };
    FieldPtr field_;
    std::size_t cols_;
    std::vector<Row> rows_;
};

}  // namespace agflag
