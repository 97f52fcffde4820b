#pragma once

#include "raagrep/field.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace raagrep {

/// Dense square matrix over FieldElement.
class ExactMatrix {
  public:
    explicit ExactMatrix(int dim); // zero matrix
    static ExactMatrix identity(int dim);
    static ExactMatrix from_rows(std::vector<std::vector<FieldElement>> rows);
    static ExactMatrix from_integer_rows(const std::vector<std::vector<long>>& rows);

    int dim() const { return dim_; }
    const FieldElement& at(int i, int j) const { return e_[std::size_t(i) * dim_ + j]; }
    FieldElement& at(int i, int j) { return e_[std::size_t(i) * dim_ + j]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix transpose() const;
    /// Cofactor expansion for dim <= 3, fraction-free elimination above.
    FieldElement det() const;
    ExactMatrix inverse() const;                  // throws SingularMatrix
    ExactMatrix pow(long k) const;                // negative k inverts first

    bool is_zero() const;
    bool is_identity() const;
    /// All entries are rational integers (no radicals, denominator 1).
    bool is_integral() const;

    std::string str() const;

  private:
    int dim_;
    std::vector<FieldElement> e_;
};

/// AB - BA; the zero matrix iff A and B commute.
ExactMatrix additive_commutator(const ExactMatrix& a, const ExactMatrix& b);

bool commutes(const ExactMatrix& a, const ExactMatrix& b);

/// Entrywise reduction of an integral matrix into {0, ..., p-1}.
std::vector<std::vector<std::int64_t>> matrix_mod_p(const ExactMatrix& a, std::int64_t p);

} // namespace raagrep
