#pragma once

#include "raagrep/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace raagrep {

enum class FormKind { special_linear, orthogonal };

/// Ambient group: SL(n) with the trivial form, or SO(p,q) with
/// J = diag(+1 x p, -1 x q).
class GroupForm {
  public:
    static GroupForm special_linear(int n);
    static GroupForm orthogonal(int p, int q);

    FormKind kind() const { return kind_; }
    int dim() const { return j_.dim(); }
    const ExactMatrix& form_matrix() const { return j_; }

    bool operator==(const GroupForm& o) const { return kind_ == o.kind_ && j_ == o.j_; }
    bool operator!=(const GroupForm& o) const { return !(*this == o); }

  private:
    GroupForm(FormKind kind, ExactMatrix j) : kind_(kind), j_(std::move(j)) {}
    FormKind kind_;
    ExactMatrix j_;
};

/// det(M) = 1 and, for the orthogonal kind, M^T J M = J, all exactly.
bool is_isometry(const ExactMatrix& m, const GroupForm& form);

/// Axial isometry of the symmetric space. Validates det = 1 and form
/// preservation; symmetry/positive-definiteness is a separate check because
/// lattice generators translate geodesics away from the basepoint.
class Transvection {
  public:
    Transvection(ExactMatrix m, GroupForm form);

    const ExactMatrix& matrix() const { return m_; }
    const GroupForm& form() const { return form_; }

    bool is_symmetric_positive_definite() const;

  private:
    ExactMatrix m_;
    GroupForm form_;
};

/// Adjacency of the axis geodesics, decided as commutation of the chosen
/// axial isometries.
bool adjacent(const Transvection& a, const Transvection& b);

/// Distinct exact eigenvalues with multiplicities. Requires the
/// characteristic polynomial to factor over Q into linear and quadratic
/// pieces (quadratic roots land in prime-radical extensions); otherwise
/// throws UnsupportedExtension.
std::vector<std::pair<FieldElement, int>> eigenvalues(const ExactMatrix& m);

/// Columns form a simultaneous eigenbasis of two commuting semisimple
/// matrices; conjugation by the result diagonalizes both.
ExactMatrix common_eigenbasis(const ExactMatrix& a, const ExactMatrix& b);

/// The 2-plane spanned by log A and log B inside a maximal flat, recorded as
/// one linear form a*e_i + b*f_i per common eigenvector: eigenvalues are
/// integer powers of one fundamental unit, and (e_i, f_i) are the exponents.
struct FlatSpan {
    std::vector<std::pair<Rational, Rational>> forms;
};

FlatSpan flat_span_of_pair(const ExactMatrix& a, const ExactMatrix& b);

/// Primitive integer direction (a : b), gcd 1, sign-normalized.
struct Direction {
    Integer a;
    Integer b;

    bool operator==(const Direction& o) const { return a == o.a && b == o.b; }
    bool operator<(const Direction& o) const { return a < o.a || (a == o.a && b < o.b); }
};

struct SingularDirections {
    bool infinite = false;            // two identical forms: every direction singular
    std::vector<Direction> lines;     // distinct solution lines, sorted
};

/// Solve form_i = form_j over all pairs and collect the solution lines.
SingularDirections singular_directions(const FlatSpan& span);

/// True iff some direction makes all eigen-pattern forms pairwise distinct
/// (a regular direction, which lies in exactly one maximal flat). Decided
/// exactly at (a, b) = (1, t) for the smallest positive integer t outside
/// the finitely many degenerate values.
bool flat_uniqueness(const FlatSpan& span);

/// Exact characteristic polynomial, leading coefficient first.
std::vector<FieldElement> char_poly(const ExactMatrix& m);

/// d(p0, A p0) = sqrt(sum_i log(s_i)^2) over the singular values of A.
/// The artifact's only floating-point surface; documented tolerance 1e-9.
double displacement_numeric(const ExactMatrix& m);

/// Same axis geodesic: the matrices commute and their logarithm
/// eigen-patterns are proportional.
bool same_geodesic(const ExactMatrix& a, const ExactMatrix& b);

} // namespace raagrep
