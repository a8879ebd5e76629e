#include "agflag/matrix.hpp"

#include <algorithm>

namespace agflag {

namespace {

// row[from..] -= c * other[from..]
void row_axpy(const Field& f, std::span<std::uint32_t> row, std::span<const std::uint32_t> other,
              std::uint32_t c, std::size_t from) {
    if (c == 0) return;
    if (const std::uint32_t* mr = f.mul_row(c)) {
        if (f.p() == 2) {
            for (std::size_t j = from; j < row.size(); ++j) row[j] ^= mr[other[j]];
        } else {
            for (std::size_t j = from; j < row.size(); ++j)
                row[j] = f.sub(row[j], mr[other[j]]);
        }
    } else {
        for (std::size_t j = from; j < row.size(); ++j)
            row[j] = f.sub(row[j], f.mul(c, other[j]));
    }
}

void row_scale(const Field& f, std::span<std::uint32_t> row, std::uint32_t c, std::size_t from) {
    if (c == 1) return;
    if (const std::uint32_t* mr = f.mul_row(c)) {
        for (std::size_t j = from; j < row.size(); ++j) row[j] = mr[row[j]];
    } else {
        for (std::size_t j = from; j < row.size(); ++j) row[j] = f.mul(c, row[j]);
    }
}

}  // namespace

void GFMatrix::append_row(std::span<const std::uint32_t> r) {
    if (r.size() != cols_) throw ShapeMismatchError("appended row has wrong length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

RrefResult rref(const GFMatrix& m) {
    GFMatrix r = m;
    const Field& f = r.field();
    const std::size_t nr = r.rows(), nc = r.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t sel = row;
        while (sel < nr && r.raw(sel, col) == 0) ++sel;
        if (sel == nr) continue;
        if (sel != row)
            for (std::size_t j = col; j < nc; ++j) {
                const std::uint32_t t = r.raw(row, j);
                r.set_raw(row, j, r.raw(sel, j));
                r.set_raw(sel, j, t);
            }
        row_scale(f, r.row(row), f.inv(r.raw(row, col)), col);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row) continue;
            row_axpy(f, r.row(i), r.row(row), r.raw(i, col), col);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), pivots.size(), std::move(pivots)};
}

GFMatrix nullspace(const GFMatrix& m) {
    const auto [r, rank, pivots] = rref(m);
    const Field& f = m.field();
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    GFMatrix basis(m.field_ptr(), nc - rank, nc);
    std::size_t out = 0;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        basis.set_raw(out, free, 1);
        for (std::size_t i = 0; i < rank; ++i)
            basis.set_raw(out, pivots[i], f.neg(r.raw(i, free)));
        ++out;
    }
    return basis;
}

bool rowspace_equal(const GFMatrix& a, const GFMatrix& b) {
    if (!a.field().same_as(b.field())) throw FieldMismatchError("matrices over different fields");
    if (a.cols() != b.cols()) throw ShapeMismatchError("column counts differ");
    const auto ra = rref(a);
    const auto rb = rref(b);
    if (ra.rank != rb.rank) return false;
    if (ra.pivots != rb.pivots) return false;
    for (std::size_t i = 0; i < ra.rank; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (ra.matrix.raw(i, j) != rb.matrix.raw(i, j)) return false;
    return true;
}

GFMatrix multiply(const GFMatrix& a, const GFMatrix& b) {
    if (!a.field().same_as(b.field())) throw FieldMismatchError("matrices over different fields");
    if (a.cols() != b.rows()) throw ShapeMismatchError("inner dimensions differ");
    const Field& f = a.field();
    GFMatrix c(a.field_ptr(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint32_t aik = a.raw(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.set_raw(i, j, f.add(c.raw(i, j), f.mul(aik, b.raw(k, j))));
        }
    return c;
}

GFMatrix transpose(const GFMatrix& m) {
    GFMatrix t(m.field_ptr(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.set_raw(j, i, m.raw(i, j));
    return t;
}

GFMatrix scale_columns(const GFMatrix& m, const std::vector<FieldElement>& x) {
    if (x.size() != m.cols()) throw ShapeMismatchError("scale vector length differs from cols");
    const Field& f = m.field();
    GFMatrix out = m;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!x[j].field().same_as(f)) throw FieldMismatchError("scale vector from a different field");
        for (std::size_t i = 0; i < m.rows(); ++i)
            out.set_raw(i, j, f.mul(m.raw(i, j), x[j].value()));
    }
    return out;
}

bool EchelonAccumulator::absorb(std::vector<std::uint32_t> row) {
    if (row.size() != cols_) throw ShapeMismatchError("absorbed row has wrong length");
    const Field& f = *field_;
    for (const Row& r : rows_) {
        const std::uint32_t c = row[r.pivot];
        if (c != 0) row_axpy(f, row, r.v, c, r.pivot);
    }
    std::size_t pivot = 0;
    while (pivot < cols_ && row[pivot] == 0) ++pivot;
    if (pivot == cols_) return false;
    row_scale(f, row, f.inv(row[pivot]), pivot);
    Row nr{pivot, std::move(row)};
    const auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                      [](const Row& r, std::size_t p) { return r.pivot < p; });
    rows_.insert(pos, std::move(nr));
    return true;
}

GFMatrix EchelonAccumulator::to_matrix() const {
    GFMatrix m(field_, rows_.size(), cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set_raw(i, j, rows_[i].v[j]);
    return m;
}

}  // namespace agflag
