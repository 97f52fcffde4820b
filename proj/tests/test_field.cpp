#include "raagrep/field.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace raagrep;

namespace {

FieldElement sqrt_of(long p) { return FieldElement::radical(p); }

// deterministic random elements over basis {2,3,5}
FieldElement random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    FieldElement acc;
    const std::vector<std::vector<std::int64_t>> subsets = {{}, {2}, {3}, {5}, {2, 3}, {2, 5},
                                                            {3, 5}, {2, 3, 5}};
    for (const auto& s : subsets) {
        const int n = num(rng);
        if (n == 0) continue;
        acc += FieldElement::term(Rational(n, den(rng)), std::vector<std::int64_t>(s));
    }
    return acc;
}

} // namespace

TEST_CASE("squarefree decomposition") {
    auto [s, primes] = squarefree_decompose(Integer(40));
    CHECK(s == 2);
    CHECK(primes == std::vector<Integer>{2, 5});
    auto [s2, primes2] = squarefree_decompose(Integer(1));
    CHECK(s2 == 1);
    CHECK(primes2.empty());
    auto [s3, primes3] = squarefree_decompose(Integer(49));
    CHECK(s3 == 7);
    CHECK(primes3.empty());
    CHECK_THROWS_AS(squarefree_decompose(Integer(0)), NegativeRadicand);
}

TEST_CASE("radical product law") {
    CHECK(sqrt_of(2) * sqrt_of(3) == FieldElement::term(Rational(1), {2, 3}));
    CHECK(sqrt_of(2) * sqrt_of(2) == FieldElement(2L));
    // sqrt(6) * sqrt(10) = 2 sqrt(15)
    CHECK(FieldElement::term(Rational(1), {2, 3}) * FieldElement::term(Rational(1), {2, 5}) ==
          FieldElement::term(Rational(2), {3, 5}));
}

TEST_CASE("difference of squares on the SO(3,2) unit") {
    const FieldElement u = FieldElement(2L) + sqrt_of(3);
    const FieldElement v = FieldElement(2L) - sqrt_of(3);
    CHECK(u * v == FieldElement(1L));
    CHECK(u.inverse() == v);
}

TEST_CASE("rotation column is unit length") {
    // (sqrt(10)/4)^2 + (sqrt(6)/4)^2 = 10/16 + 6/16 = 1
    const FieldElement a = FieldElement::term(Rational(1, 4), {2, 5});
    const FieldElement b = FieldElement::term(Rational(1, 4), {2, 3});
    CHECK(a * a + b * b == FieldElement(1L));
}

TEST_CASE("inverse examples") {
    CHECK(FieldElement(Rational(1, 2)).inverse() == FieldElement(2L));
    // (1/2 + sqrt(3)/2)^-1 = -1 + sqrt(3)
    const FieldElement x = FieldElement(Rational(1, 2)) + FieldElement::term(Rational(1, 2), {3});
    const FieldElement expected = FieldElement(-1L) + sqrt_of(3);
    CHECK(x.inverse() == expected);
    CHECK(x * x.inverse() == FieldElement(1L));
    CHECK_THROWS_AS(FieldElement().inverse(), DivisionByZero);
}

TEST_CASE("sqrt of rationals") {
    // 2/5 -> sqrt(10)/5, the R3 entry
    CHECK(FieldElement::sqrt_rational(Rational(2, 5)) == FieldElement::term(Rational(1, 5), {2, 5}));
    // 10/16 -> sqrt(10)/4, the closure solver norm
    CHECK(FieldElement::sqrt_rational(Rational(10, 16)) ==
          FieldElement::term(Rational(1, 4), {2, 5}));
    CHECK(FieldElement::sqrt_rational(Rational(4)) == FieldElement(2L));
    CHECK_THROWS_AS(FieldElement::sqrt_rational(Rational(-1)), NegativeRadicand);
    CHECK_THROWS_AS(FieldElement::sqrt_rational(Rational(0)), NegativeRadicand);
}

TEST_CASE("sqrt squares back over a range of rationals") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> d(1, 9999);
    for (int i = 0; i < 300; ++i) {
        const Rational q(d(rng), d(rng));
        const FieldElement root = FieldElement::sqrt_rational(q);
        CHECK(root * root == FieldElement(q));
        CHECK(root.sign() > 0);
    }
}

TEST_CASE("exact sign") {
    CHECK(FieldElement(0L).sign() == 0);
    CHECK((sqrt_of(2) - FieldElement(1L)).sign() > 0);
    CHECK((sqrt_of(2) - FieldElement(2L)).sign() < 0);
    // sqrt(2) + sqrt(3) is between 3 and 4
    CHECK((FieldElement(3L) - sqrt_of(2) - sqrt_of(3)).sign() < 0);
    CHECK((FieldElement(4L) - sqrt_of(2) - sqrt_of(3)).sign() > 0);
    // sqrt(2)*sqrt(3) vs sqrt(6): equal, sign 0
    CHECK((sqrt_of(2) * sqrt_of(3) - FieldElement::term(Rational(1), {2, 3})).sign() == 0);
    // mixed signs across several radicals, checked against evaluation
    const FieldElement tight = FieldElement(7L) + FieldElement::term(Rational(5), {2}) -
                               sqrt_of(3) - FieldElement::term(Rational(9), {5});
    CHECK(tight.sign() == (tight.to_double() > 0 ? 1 : -1));
}

TEST_CASE("field axioms hold exactly on random elements") {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
        const FieldElement a = random_element(rng);
        const FieldElement b = random_element(rng);
        const FieldElement c = random_element(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement(1L));
    }
}

TEST_CASE("sign agrees with numeric evaluation away from zero") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 6);
    const std::vector<std::int64_t> primes{2, 3, 5, 7};
    for (int trial = 0; trial < 120; ++trial) {
        FieldElement x;
        for (std::size_t mask = 0; mask < 16; ++mask) {
            const int n = num(rng);
            if (n == 0) continue;
            std::vector<std::int64_t> subset;
            for (std::size_t b = 0; b < 4; ++b)
                if (mask & (std::size_t(1) << b)) subset.push_back(primes[b]);
            x += FieldElement::term(Rational(n, den(rng)), std::move(subset));
        }
        const double v = x.to_double();
        if (std::abs(v) > 1e-6) CHECK(x.sign() == (v > 0 ? 1 : -1));
        CHECK((x - x).sign() == 0);
        CHECK((-x).sign() == -x.sign());
        if (!x.is_zero()) CHECK(x * x.inverse() == FieldElement(1L));
    }
}

TEST_CASE("canonical form is minimal and stable") {
    // multiplication collapsing radicals shrinks the basis
    const FieldElement x = sqrt_of(2) * sqrt_of(2);
    CHECK(x.is_rational());
    CHECK(x.basis().size() == 0);
    // cancellation drops unused primes from the basis
    const FieldElement y = (sqrt_of(5) + FieldElement(1L)) - sqrt_of(5);
    CHECK(y == FieldElement(1L));
    CHECK(y.basis().size() == 0);
    // terms() never reports zero coefficients
    for (const auto& t : (sqrt_of(2) + FieldElement(3L)).terms())
        CHECK(t.coefficient != 0);
}

TEST_CASE("parsing helpers") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
    CHECK_THROWS_AS(parse_integer("abc"), ParseError);
    CHECK(to_string(Rational(-3, 7)) == "-3/7");
}

TEST_CASE("prime radical basis validation") {
    CHECK_THROWS_AS(PrimeRadicalBasis({4}), Error);
    CHECK_THROWS_AS(PrimeRadicalBasis({2, 2}), Error);
    const PrimeRadicalBasis b({5, 2, 3});
    CHECK(b.primes() == std::vector<std::int64_t>{2, 3, 5});
}
