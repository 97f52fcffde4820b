#include "raagrep/field.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace raagrep {

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

std::pair<Integer, std::vector<Integer>> squarefree_decompose(Integer x) {
    if (x <= 0) throw NegativeRadicand("squarefree_decompose: input must be positive");
    Integer square_part = 1;
    std::vector<Integer> radical_primes;

    auto strip = [&](const Integer& p) {
        int e = 0;
        while (x % p == 0) {
            x /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square_part *= p;
        if (e % 2 == 1) radical_primes.push_back(p);
    };

    strip(2);
    strip(3);
    Integer p = 5;
    int step = 2; // 6k-1, 6k+1 pattern
    const Integer trial_bound = 1000000;
    while (p <= trial_bound && p * p <= x) {
        if (x % p == 0) strip(p);
        p += step;
        step = 6 - step;
    }
    if (x > 1) {
        Integer root = boost::multiprecision::sqrt(x);
        if (root * root == x) {
            if (!is_prime(root))
                throw NonFactorable("squarefree_decompose: unfactorable square cofactor");
            square_part *= root;
        } else if (is_prime(x)) {
            radical_primes.push_back(x);
        } else {
            throw NonFactorable("squarefree_decompose: composite cofactor beyond trial bound");
        }
    }
    std::sort(radical_primes.begin(), radical_primes.end());
    return {square_part, radical_primes};
}

Integer parse_integer(const std::string& text) {
    try {
        return Integer(text);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + text + "'");
    }
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DivisionByZero("rational with zero denominator: '" + text + "'");
    return Rational(num, den);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// ---------------------------------------------------------------------------
// PrimeRadicalBasis

PrimeRadicalBasis::PrimeRadicalBasis(std::vector<std::int64_t> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i > 0 && primes_[i] == primes_[i - 1])
            throw Error("PrimeRadicalBasis: duplicate prime");
        if (!is_prime(Integer(primes_[i])))
            throw Error("PrimeRadicalBasis: " + std::to_string(primes_[i]) + " is not prime");
    }
    if (primes_.size() > 16) throw Error("PrimeRadicalBasis: too many adjoined primes");
}

PrimeRadicalBasis PrimeRadicalBasis::merged(const PrimeRadicalBasis& a, const PrimeRadicalBasis& b) {
    std::vector<std::int64_t> u;
    std::set_union(a.primes_.begin(), a.primes_.end(), b.primes_.begin(), b.primes_.end(),
                   std::back_inserter(u));
    PrimeRadicalBasis out;
    out.primes_ = std::move(u); // already sorted, distinct, prime
    return out;
}

bool PrimeRadicalBasis::contains(std::int64_t p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::size_t PrimeRadicalBasis::index_of(std::int64_t p) const {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) throw Error("PrimeRadicalBasis: prime not in basis");
    return static_cast<std::size_t>(it - primes_.begin());
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement() : coeff_(1, Rational(0)) {}

FieldElement::FieldElement(const Rational& q) : coeff_(1, q) {}

FieldElement::FieldElement(long v) : coeff_(1, Rational(v)) {}

FieldElement::FieldElement(const Integer& v) : coeff_(1, Rational(v)) {}

FieldElement FieldElement::radical(std::int64_t prime) {
    return term(Rational(1), {prime});
}

FieldElement FieldElement::term(const Rational& c, std::vector<std::int64_t> subset) {
    FieldElement out;
    if (c == 0) return out;
    out.basis_ = PrimeRadicalBasis(std::move(subset));
    out.coeff_.assign(std::size_t(1) << out.basis_.size(), Rational(0));
    out.coeff_.back() = c; // full-subset mask
    out.shrink_basis();
    return out;
}

FieldElement FieldElement::sqrt_rational(const Rational& q) {
    if (q <= 0) throw NegativeRadicand("sqrt_rational: radicand must be positive");
    // q = num/den = num*den / den^2
    Integer num = numerator(q), den = denominator(q);
    auto [square_part, primes] = squarefree_decompose(num * den);
    std::vector<std::int64_t> subset;
    subset.reserve(primes.size());
    for (const Integer& p : primes) {
        if (p > std::numeric_limits<std::int64_t>::max())
            throw NonFactorable("sqrt_rational: radical prime too large");
        subset.push_back(static_cast<std::int64_t>(p));
    }
    return term(Rational(square_part, den), std::move(subset));
}

bool FieldElement::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_rational() const { return basis_.size() == 0; }

bool FieldElement::is_one() const { return is_rational() && coeff_[0] == 1; }

Rational FieldElement::rational_part() const { return coeff_[0]; }

Rational FieldElement::as_rational() const {
    if (!is_rational()) throw Error("FieldElement: not rational: " + str());
    return coeff_[0];
}

void FieldElement::shrink_basis() {
    std::size_t used = 0;
    for (std::size_t mask = 0; mask < coeff_.size(); ++mask)
        if (coeff_[mask] != 0) used |= mask;
    if (used == coeff_.size() - 1 && basis_.size() > 0) return; // all primes used
    std::vector<std::int64_t> kept;
    std::vector<std::size_t> kept_bits;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (used & (std::size_t(1) << i)) {
            kept.push_back(basis_.primes()[i]);
            kept_bits.push_back(i);
        }
    }
    std::vector<Rational> nc(std::size_t(1) << kept.size(), Rational(0));
    for (std::size_t mask = 0; mask < coeff_.size(); ++mask) {
        if (coeff_[mask] == 0) continue;
        std::size_t nm = 0;
        for (std::size_t j = 0; j < kept_bits.size(); ++j)
            if (mask & (std::size_t(1) << kept_bits[j])) nm |= std::size_t(1) << j;
        nc[nm] = coeff_[mask];
    }
    PrimeRadicalBasis nb;
    nb = PrimeRadicalBasis(std::move(kept));
    basis_ = std::move(nb);
    coeff_ = std::move(nc);
}

FieldElement FieldElement::lifted_to(const PrimeRadicalBasis& target) const {
    FieldElement out;
    out.basis_ = target;
    out.coeff_.assign(std::size_t(1) << target.size(), Rational(0));
    for (std::size_t mask = 0; mask < coeff_.size(); ++mask) {
        if (coeff_[mask] == 0) continue;
        std::size_t nm = 0;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (mask & (std::size_t(1) << i))
                nm |= std::size_t(1) << target.index_of(basis_.primes()[i]);
        out.coeff_[nm] = coeff_[mask];
    }
    return out;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    FieldElement r = *this;
    r += o;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (basis_ == o.basis_) {
        for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
        shrink_basis();
        return *this;
    }
    PrimeRadicalBasis u = PrimeRadicalBasis::merged(basis_, o.basis_);
    FieldElement a = lifted_to(u), b = o.lifted_to(u);
    for (std::size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] += b.coeff_[i];
    a.shrink_basis();
    *this = std::move(a);
    return *this;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    *this += -o;
    return *this;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (is_zero() || o.is_zero()) return FieldElement();
    const PrimeRadicalBasis u = PrimeRadicalBasis::merged(basis_, o.basis_);
    FieldElement a = lifted_to(u), b = o.lifted_to(u);
    FieldElement out;
    out.basis_ = u;
    out.coeff_.assign(std::size_t(1) << u.size(), Rational(0));
    for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeff_.size(); ++j) {
            if (b.coeff_[j] == 0) continue;
            // sqrt(S) * sqrt(T) = prod_{p in S&T} p * sqrt(S^T)
            std::size_t common = i & j;
            Integer scale = 1;
            for (std::size_t k = 0; k < u.size(); ++k)
                if (common & (std::size_t(1) << k)) scale *= u.primes()[k];
            out.coeff_[i ^ j] += a.coeff_[i] * b.coeff_[j] * Rational(scale);
        }
    }
    out.shrink_basis();
    return out;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    *this = *this * o;
    return *this;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
    return basis_ == o.basis_ && coeff_ == o.coeff_;
}

namespace {

// sign of sum_{mask} coeff[mask] * sqrt(prod primes), over the first k primes.
int sign_rec(const std::vector<Rational>& coeff, const std::vector<std::int64_t>& primes,
             std::size_t k) {
    if (k == 0) return coeff[0].sign();
    const std::size_t half = std::size_t(1) << (k - 1);
    std::vector<Rational> low(coeff.begin(), coeff.begin() + half);   // u
    std::vector<Rational> high(coeff.begin() + half, coeff.end());    // v, times sqrt(p_{k-1})
    const bool low_zero = std::all_of(low.begin(), low.end(), [](const Rational& c) { return c == 0; });
    const bool high_zero = std::all_of(high.begin(), high.end(), [](const Rational& c) { return c == 0; });
    if (high_zero) return sign_rec(low, primes, k - 1);
    if (low_zero) return sign_rec(high, primes, k - 1);
    const int su = sign_rec(low, primes, k - 1);
    const int sv = sign_rec(high, primes, k - 1);
    if (su == sv) return su;
    if (su == 0) return sv;
    if (sv == 0) return su;
    // opposite signs: compare u^2 against p * v^2 in the subfield
    // u^2 - p v^2 has the sign of the dominant part
    // multiply in the subfield of the first k-1 primes
    const std::size_t n = half;
    std::vector<Rational> diff(n, Rational(0));
    auto subset_scale = [&](std::size_t common) {
        Integer s = 1;
        for (std::size_t b = 0; b < k - 1; ++b)
            if (common & (std::size_t(1) << b)) s *= primes[b];
        return Rational(s);
    };
    const Rational p(primes[k - 1]);
    for (std::size_t i = 0; i < n; ++i) {
        if (low[i] == 0 && high[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (low[j] == 0 && high[j] == 0) continue;
            const Rational s = subset_scale(i & j);
            diff[i ^ j] += (low[i] * low[j] - p * high[i] * high[j]) * s;
        }
    }
    const int sd = sign_rec(diff, primes, k - 1); // sign of u^2 - p v^2
    // |u| > |v| sqrt(p)  <=>  u^2 > p v^2; then total sign follows u, else v.
    return sd >= 0 ? (sd == 0 ? 0 : su) : sv;
}

} // namespace

int FieldElement::sign() const {
    return sign_rec(coeff_, basis_.primes(), basis_.size());
}

int compare(const FieldElement& a, const FieldElement& b) { return (a - b).sign(); }

namespace {

// inverse of the element with coefficients coeff over the first k primes
std::vector<Rational> inverse_rec(const std::vector<Rational>& coeff,
                                  const std::vector<std::int64_t>& primes, std::size_t k) {
    if (k == 0) {
        if (coeff[0] == 0) throw DivisionByZero("fe_inv: division by zero");
        return {Rational(1) / coeff[0]};
    }
    const std::size_t half = std::size_t(1) << (k - 1);
    std::vector<Rational> u(coeff.begin(), coeff.begin() + half);
    std::vector<Rational> v(coeff.begin() + half, coeff.end());
    auto mul_sub = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        // product in the subfield of the first k-1 primes
        std::vector<Rational> out(half, Rational(0));
        for (std::size_t i = 0; i < half; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < half; ++j) {
                if (b[j] == 0) continue;
                Integer s = 1;
                for (std::size_t bit = 0; bit < k - 1; ++bit)
                    if ((i & j) & (std::size_t(1) << bit)) s *= primes[bit];
                out[i ^ j] += a[i] * b[j] * Rational(s);
            }
        }
        return out;
    };
    // d = u^2 - p v^2 lies in the subfield and is nonzero whenever x != 0
    // (sqrt(p_k) is not contained in the subfield).
    std::vector<Rational> d = mul_sub(u, u);
    std::vector<Rational> vv = mul_sub(v, v);
    const Rational p(primes[k - 1]);
    for (std::size_t i = 0; i < half; ++i) d[i] -= p * vv[i];
    const bool dz = std::all_of(d.begin(), d.end(), [](const Rational& c) { return c == 0; });
    if (dz) {
        const bool xz = std::all_of(coeff.begin(), coeff.end(), [](const Rational& c) { return c == 0; });
        if (xz) throw DivisionByZero("fe_inv: division by zero");
        throw Error("fe_inv: conjugate norm vanished on nonzero element"); // unreachable for prime radicals
    }
    std::vector<Rational> dinv = inverse_rec(d, primes, k - 1);
    // (u - v sqrt(p)) * d^{-1}
    std::vector<Rational> nu = mul_sub(u, dinv);
    std::vector<Rational> nv = mul_sub(v, dinv);
    std::vector<Rational> out(std::size_t(1) << k, Rational(0));
    for (std::size_t i = 0; i < half; ++i) {
        out[i] = nu[i];
        out[half + i] = -nv[i];
    }
    return out;
}

} // namespace

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("fe_inv: division by zero");
    FieldElement out;
    out.basis_ = basis_;
    out.coeff_ = inverse_rec(coeff_, basis_.primes(), basis_.size());
    out.shrink_basis();
    return out;
}

double FieldElement::to_double() const {
    double acc = 0.0;
    for (std::size_t mask = 0; mask < coeff_.size(); ++mask) {
        if (coeff_[mask] == 0) continue;
        double radical = 1.0;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (mask & (std::size_t(1) << i)) radical *= std::sqrt(double(basis_.primes()[i]));
        acc += coeff_[mask].convert_to<double>() * radical;
    }
    return acc;
}

std::vector<FieldElement::Term> FieldElement::terms() const {
    std::vector<Term> out;
    for (std::size_t mask = 0; mask < coeff_.size(); ++mask) {
        if (coeff_[mask] == 0) continue;
        Term t;
        t.coefficient = coeff_[mask];
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (mask & (std::size_t(1) << i)) t.subset.push_back(basis_.primes()[i]);
        out.push_back(std::move(t));
    }
    return out;
}

std::string FieldElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms()) {
        if (!first) os << (t.coefficient.sign() >= 0 ? " + " : " - ");
        const Rational mag = first ? t.coefficient : Rational(boost::multiprecision::abs(numerator(t.coefficient)), denominator(t.coefficient));
        os << to_string(mag);
        for (auto p : t.subset) os << "*sqrt(" << p << ")";
        first = false;
    }
    return os.str();
}

} // namespace raagrep
