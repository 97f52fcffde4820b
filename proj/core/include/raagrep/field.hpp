#pragma once

#include "raagrep/errors.hpp"
#include "raagrep/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace raagrep {

/// Sorted list of distinct primes whose square roots are adjoined to Q.
class PrimeRadicalBasis {
  public:
    PrimeRadicalBasis() = default;
    explicit PrimeRadicalBasis(std::vector<std::int64_t> primes);

    static PrimeRadicalBasis merged(const PrimeRadicalBasis& a, const PrimeRadicalBasis& b);

    std::size_t size() const { return primes_.size(); }
    const std::vector<std::int64_t>& primes() const { return primes_; }
    bool contains(std::int64_t p) const;
    std::size_t index_of(std::int64_t p) const; // throws Error if absent

    bool operator==(const PrimeRadicalBasis& other) const { return primes_ == other.primes_; }
    bool operator!=(const PrimeRadicalBasis& other) const { return !(*this == other); }

  private:
    std::vector<std::int64_t> primes_;
};

/**
 * FieldElement: an element of Q(sqrt(p_1), ..., sqrt(p_k)) for distinct
 * primes p_i, stored as a coefficient per subset S of the basis with value
 * sum_S c_S * prod_{p in S} sqrt(p).
 *
 * The representation is canonical: the basis is the minimal set of primes
 * actually appearing, so structural equality decides field equality (the
 * products of radicals over distinct subsets are linearly independent / Q).
 */
class FieldElement {
  public:
    /// A nonzero coefficient together with its subset of basis primes.
    struct Term {
        std::vector<std::int64_t> subset; // sorted primes
        Rational coefficient;
    };

    FieldElement(); // zero
    FieldElement(const Rational& q);
    FieldElement(long v);
    FieldElement(const Integer& v);

    /// sqrt(p) for a prime p.
    static FieldElement radical(std::int64_t prime);
    /// c * prod_{p in subset} sqrt(p); subset primes must be distinct.
    static FieldElement term(const Rational& c, std::vector<std::int64_t> subset);
    /// Exact square root of a positive rational: factor q = r^2 * d with d
    /// squarefree and return r * prod_{p | d} sqrt(p).
    static FieldElement sqrt_rational(const Rational& q);

    bool is_zero() const;
    bool is_rational() const;
    bool is_one() const;
    Rational rational_part() const;   // coefficient of the empty subset
    Rational as_rational() const;     // throws Error when irrational

    /// Exact sign (-1, 0, +1) of the real number this element denotes.
    int sign() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Multiplicative inverse by recursive conjugation over each adjoined
    /// prime: x + y*sqrt(p) -> (x - y*sqrt(p)) / (x^2 - p*y^2).
    FieldElement inverse() const; // throws DivisionByZero on zero

    double to_double() const;

    const PrimeRadicalBasis& basis() const { return basis_; }
    /// Nonzero terms, sorted by subset; canonical serialization order.
    std::vector<Term> terms() const;

    std::string str() const;

  private:
    friend class FieldElementOps;

    PrimeRadicalBasis basis_;
    std::vector<Rational> coeff_; // size 1 << basis_.size(), index = subset bitmask

    void shrink_basis();
    FieldElement lifted_to(const PrimeRadicalBasis& target) const;
};

int compare(const FieldElement& a, const FieldElement& b); // sign of a - b

} // namespace raagrep
