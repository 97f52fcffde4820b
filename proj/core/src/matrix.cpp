#include "raagrep/matrix.hpp"

#include <sstream>

namespace raagrep {

ExactMatrix::ExactMatrix(int dim) : dim_(dim), e_(std::size_t(dim) * dim) {
    if (dim <= 0) throw DimensionMismatch("matrix dimension must be positive");
}

ExactMatrix ExactMatrix::identity(int dim) {
    ExactMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = FieldElement(1L);
    return m;
}

ExactMatrix ExactMatrix::from_rows(std::vector<std::vector<FieldElement>> rows) {
    const int n = static_cast<int>(rows.size());
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw DimensionMismatch("from_rows: ragged rows");
        for (int j = 0; j < n; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

ExactMatrix ExactMatrix::from_integer_rows(const std::vector<std::vector<long>>& rows) {
    const int n = static_cast<int>(rows.size());
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw DimensionMismatch("from_integer_rows: ragged rows");
        for (int j = 0; j < n; ++j) m.at(i, j) = FieldElement(rows[i][j]);
    }
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("matrix add: dimension mismatch");
    ExactMatrix r(dim_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("matrix sub: dimension mismatch");
    ExactMatrix r(dim_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("matrix mul: dimension mismatch");
    ExactMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return dim_ == o.dim_ && e_ == o.e_;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(i, j) = at(j, i);
    return r;
}

FieldElement ExactMatrix::det() const {
    if (dim_ == 1) return at(0, 0);
    if (dim_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (dim_ == 3) {
        FieldElement d;
        d += at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1));
        d -= at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0));
        d += at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
        return d;
    }
    // Bareiss fraction-free elimination with exact division.
    ExactMatrix a = *this;
    FieldElement prev(1L);
    int sign = 1;
    for (int k = 0; k < dim_ - 1; ++k) {
        if (a.at(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < dim_; ++i)
                if (!a.at(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return FieldElement();
            for (int j = 0; j < dim_; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < dim_; ++i)
            for (int j = k + 1; j < dim_; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    FieldElement d = a.at(dim_ - 1, dim_ - 1);
    return sign > 0 ? d : -d;
}

ExactMatrix ExactMatrix::inverse() const {
    // Gauss-Jordan on [A | I].
    ExactMatrix a = *this;
    ExactMatrix inv = identity(dim_);
    for (int col = 0; col < dim_; ++col) {
        int pivot = -1;
        for (int i = col; i < dim_; ++i)
            if (!a.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw SingularMatrix("mat_inv: singular matrix");
        if (pivot != col)
            for (int j = 0; j < dim_; ++j) {
                std::swap(a.at(col, j), a.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
        const FieldElement scale = a.at(col, col).inverse();
        for (int j = 0; j < dim_; ++j) {
            a.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (int i = 0; i < dim_; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            const FieldElement f = a.at(i, col);
            for (int j = 0; j < dim_; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

ExactMatrix ExactMatrix::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    ExactMatrix result = identity(dim_);
    ExactMatrix base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1UL) result = result * base;
        base = base * base;
        e >>= 1UL;
    }
    return result;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const { return *this == identity(dim_); }

bool ExactMatrix::is_integral() const {
    for (const auto& x : e_) {
        if (!x.is_rational()) return false;
        if (denominator(x.rational_part()) != 1) return false;
    }
    return true;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < dim_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (int j = 0; j < dim_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]" << (i + 1 == dim_ ? "]" : "\n");
    }
    return os.str();
}

ExactMatrix additive_commutator(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("commutator: dimension mismatch");
    return a * b - b * a;
}

bool commutes(const ExactMatrix& a, const ExactMatrix& b) {
    return additive_commutator(a, b).is_zero();
}

std::vector<std::vector<std::int64_t>> matrix_mod_p(const ExactMatrix& a, std::int64_t p) {
    if (p < 2) throw Error("matrix_mod_p: modulus must be >= 2");
    std::vector<std::vector<std::int64_t>> out(a.dim(), std::vector<std::int64_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            const FieldElement& x = a.at(i, j);
            if (!x.is_rational() || denominator(x.rational_part()) != 1)
                throw NonIntegralEntry("matrix_mod_p: non-integral entry at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
            Integer r = numerator(x.rational_part()) % p;
            if (r < 0) r += p;
            out[i][j] = r.convert_to<std::int64_t>();
        }
    return out;
}

} // namespace raagrep
