#include "raagrep/symspace.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace raagrep {

GroupForm GroupForm::special_linear(int n) {
    return GroupForm(FormKind::special_linear, ExactMatrix::identity(n));
}

GroupForm GroupForm::orthogonal(int p, int q) {
    ExactMatrix j(p + q);
    for (int i = 0; i < p; ++i) j.at(i, i) = FieldElement(1L);
    for (int i = p; i < p + q; ++i) j.at(i, i) = FieldElement(-1L);
    return GroupForm(FormKind::orthogonal, std::move(j));
}

bool is_isometry(const ExactMatrix& m, const GroupForm& form) {
    if (m.dim() != form.dim()) throw DimensionMismatch("is_isometry: dimension mismatch");
    if (!(m.det() == FieldElement(1L))) return false;
    if (form.kind() == FormKind::orthogonal)
        return m.transpose() * form.form_matrix() * m == form.form_matrix();
    return true;
}

Transvection::Transvection(ExactMatrix m, GroupForm form)
    : m_(std::move(m)), form_(std::move(form)) {
    if (!is_isometry(m_, form_)) throw Error("Transvection: matrix is not a form isometry");
}

bool Transvection::is_symmetric_positive_definite() const {
    if (m_ != m_.transpose()) return false;
    // Sylvester: all leading principal minors positive.
    for (int k = 1; k <= m_.dim(); ++k) {
        ExactMatrix sub(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = m_.at(i, j);
        if (sub.det().sign() <= 0) return false;
    }
    return true;
}

bool adjacent(const Transvection& a, const Transvection& b) {
    if (a.form() != b.form()) throw DimensionMismatch("adjacent: mismatched group forms");
    return commutes(a.matrix(), b.matrix());
}

// ---------------------------------------------------------------------------
// Exact eigen machinery

namespace {

using Poly = std::vector<Rational>; // leading coefficient first, monic

Poly poly_derivative(const Poly& p) {
    const std::size_t n = p.size() - 1; // degree
    if (n == 0) return {Rational(0)};
    Poly d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = p[i] * Rational(Integer(n - i));
    return d;
}

Poly poly_normalize(Poly p) {
    std::size_t lead = 0;
    while (lead + 1 < p.size() && p[lead] == 0) ++lead;
    p.erase(p.begin(), p.begin() + lead);
    if (p[0] != 0 && p[0] != 1) {
        const Rational inv = Rational(1) / p[0];
        for (auto& c : p) c *= inv;
    }
    return p;
}

// Division with remainder; q and r via synthetic long division.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    Poly rem = a;
    const std::size_t db = b.size() - 1;
    if (rem.size() - 1 < db) return {{Rational(0)}, rem};
    Poly quot(rem.size() - db, Rational(0));
    for (std::size_t i = 0; i + db < rem.size(); ++i) {
        const Rational f = rem[i] / b[0];
        quot[i] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= f * b[j];
    }
    rem.erase(rem.begin(), rem.end() - db);
    return {quot, rem};
}

bool poly_is_zero(const Poly& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (const auto& c : p) acc = acc * x + c;
    return acc;
}

std::vector<Integer> divisors_of(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) throw Error("divisors_of: zero");
    std::vector<Integer> divs{1};
    Integer p = 2;
    const Integer bound = 1000000;
    while (n > 1) {
        if (p > bound) {
            if (!is_prime(n)) throw NonFactorable("divisors_of: cofactor beyond trial bound");
            p = n;
        }
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            const std::size_t old = divs.size();
            Integer pk = 1;
            for (int k = 1; k <= e; ++k) {
                pk *= p;
                for (std::size_t i = 0; i < old; ++i) divs.push_back(divs[i] * pk);
            }
        }
        p += (p == 2) ? 1 : 2;
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// All rational roots of a monic rational polynomial, with multiplicity,
// deflating as they are found. Returns the remaining rational factor.
Poly extract_rational_roots(Poly p, std::vector<std::pair<Rational, int>>& roots) {
    bool progress = true;
    while (p.size() > 1 && progress) {
        progress = false;
        // strip zero roots
        while (p.size() > 1 && p.back() == 0) {
            p.pop_back();
            bool found = false;
            for (auto& [r, m] : roots)
                if (r == 0) {
                    ++m;
                    found = true;
                }
            if (!found) roots.push_back({Rational(0), 1});
            progress = true;
        }
        if (p.size() == 1) break;
        // clear denominators: candidates num/den with num | a0, den | an
        Integer lcm_den = 1;
        for (const auto& c : p)
            lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
        std::vector<Integer> ints;
        ints.reserve(p.size());
        for (const auto& c : p) ints.push_back(numerator(c) * (lcm_den / denominator(c)));
        const std::vector<Integer> nums = divisors_of(ints.back());
        const std::vector<Integer> dens = divisors_of(ints.front());
        bool found_root = false;
        for (const Integer& den : dens) {
            for (const Integer& num : nums) {
                for (int s : {1, -1}) {
                    const Rational cand(s * num, den);
                    if (poly_eval(p, cand) != 0) continue;
                    // deflate by (x - cand)
                    Poly q(p.size() - 1);
                    Rational carry(0);
                    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                        carry = p[i] + carry * cand;
                        q[i] = carry;
                    }
                    p = std::move(q);
                    bool merged = false;
                    for (auto& [r, m] : roots)
                        if (r == cand) {
                            ++m;
                            merged = true;
                        }
                    if (!merged) roots.push_back({cand, 1});
                    found_root = true;
                    progress = true;
                    break;
                }
                if (found_root) break;
            }
            if (found_root) break;
        }
    }
    return p;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!poly_is_zero(b)) {
        Poly r = poly_divmod(a, b).second;
        std::size_t lead = 0;
        while (lead + 1 < r.size() && r[lead] == 0) ++lead;
        r.erase(r.begin(), r.begin() + lead);
        a = std::move(b);
        b = poly_is_zero(r) ? Poly{Rational(0)} : poly_normalize(std::move(r));
    }
    return poly_normalize(std::move(a));
}

// roots of a monic rational quadratic, landing in a prime-radical extension
std::pair<FieldElement, FieldElement> quadratic_roots(const Poly& q) {
    const Rational b = q[1], c = q[2];
    const Rational disc = b * b - 4 * c;
    if (disc.sign() <= 0) throw UnsupportedExtension("eigenvalues: complex quadratic factor");
    FieldElement root;
    try {
        root = FieldElement::sqrt_rational(disc);
    } catch (const NonFactorable&) {
        throw UnsupportedExtension("eigenvalues: discriminant not factorable into prime radicals");
    }
    const FieldElement half(Rational(1, 2));
    return {(FieldElement(-b) + root) * half, (FieldElement(-b) - root) * half};
}

} // namespace

std::vector<std::pair<FieldElement, int>> eigenvalues(const ExactMatrix& m) {
    if (m.dim() == 1) return {{m.at(0, 0), 1}};
    const std::vector<FieldElement> cp = char_poly(m);
    Poly p;
    p.reserve(cp.size());
    for (const auto& c : cp) {
        if (!c.is_rational())
            throw UnsupportedExtension("eigenvalues: irrational characteristic polynomial");
        p.push_back(c.rational_part());
    }
    std::vector<std::pair<Rational, int>> rational_roots;
    std::vector<std::pair<FieldElement, int>> out;
    Poly rest = extract_rational_roots(std::move(p), rational_roots);
    for (const auto& [r, mult] : rational_roots) out.push_back({FieldElement(r), mult});
    if (rest.size() > 1) {
        // the remaining factor must be a power of one irreducible quadratic
        Poly quad = rest;
        if (rest.size() != 3) {
            const Poly g = poly_gcd(rest, poly_normalize(poly_derivative(rest)));
            if (g.size() <= 1)
                throw UnsupportedExtension("eigenvalues: irreducible factor of degree > 2");
            quad = poly_normalize(poly_divmod(rest, g).first);
            if (quad.size() != 3)
                throw UnsupportedExtension("eigenvalues: irreducible factor of degree > 2");
        }
        int mult = 0;
        Poly work = std::move(rest);
        while (work.size() >= 3) {
            auto [q, r] = poly_divmod(work, quad);
            if (!poly_is_zero(r)) break;
            ++mult;
            work = poly_normalize(std::move(q));
        }
        if (mult == 0 || work.size() > 1)
            throw UnsupportedExtension("eigenvalues: could not split the remaining factor");
        const auto [r1, r2] = quadratic_roots(quad);
        out.push_back({r1, mult});
        out.push_back({r2, mult});
    }
    return out;
}

namespace {

// Basis of ker(M) as columns.
std::vector<std::vector<FieldElement>> kernel_basis(const ExactMatrix& m) {
    const int n = m.dim();
    ExactMatrix a = m;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int i = row; i < n; ++i)
            if (!a.at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < n; ++j) std::swap(a.at(row, j), a.at(pr, j));
        const FieldElement inv = a.at(row, col).inverse();
        for (int j = 0; j < n; ++j) a.at(row, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            const FieldElement f = a.at(i, col);
            for (int j = 0; j < n; ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(n);
        v[free] = FieldElement(1L);
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -a.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve V X = W for X where V is n x m with independent columns and W is
// n x m', both given as column lists.
std::vector<std::vector<FieldElement>> solve_in_column_span(
    const std::vector<std::vector<FieldElement>>& v,
    const std::vector<std::vector<FieldElement>>& w) {
    const int n = static_cast<int>(v[0].size());
    const int mv = static_cast<int>(v.size());
    const int mw = static_cast<int>(w.size());
    // augmented [V | W], row-reduce
    std::vector<std::vector<FieldElement>> a(n, std::vector<FieldElement>(mv + mw));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < mv; ++j) a[i][j] = v[j][i];
        for (int j = 0; j < mw; ++j) a[i][mv + j] = w[j][i];
    }
    int row = 0;
    std::vector<int> pivot_row_of_col(mv, -1);
    for (int col = 0; col < mv && row < n; ++col) {
        int pr = -1;
        for (int i = row; i < n; ++i)
            if (!a[i][col].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) throw Error("solve_in_column_span: dependent columns");
        std::swap(a[row], a[pr]);
        const FieldElement inv = a[row][col].inverse();
        for (int j = 0; j < mv + mw; ++j) a[row][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const FieldElement f = a[i][col];
            for (int j = 0; j < mv + mw; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    // consistency: rows beyond rank must be zero on the W side
    for (int i = row; i < n; ++i)
        for (int j = 0; j < mw; ++j)
            if (!a[i][mv + j].is_zero())
                throw Error("solve_in_column_span: target not in span");
    std::vector<std::vector<FieldElement>> x(mw, std::vector<FieldElement>(mv));
    for (int j = 0; j < mw; ++j)
        for (int c = 0; c < mv; ++c) x[j][c] = a[pivot_row_of_col[c]][mv + j];
    return x;
}

} // namespace

ExactMatrix common_eigenbasis(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("common_eigenbasis: dimension mismatch");
    if (!commutes(a, b)) throw NotCommuting("common_eigenbasis: matrices do not commute");
    const int n = a.dim();
    std::vector<std::vector<FieldElement>> columns;
    for (const auto& [mu, mult] : eigenvalues(a)) {
        ExactMatrix shifted = a;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= mu;
        const auto v = kernel_basis(shifted);
        if (v.empty()) throw Error("common_eigenbasis: eigenvalue without eigenvector");
        // restrict b to the eigenspace: solve V X = B V
        std::vector<std::vector<FieldElement>> bv(v.size(), std::vector<FieldElement>(n));
        for (std::size_t j = 0; j < v.size(); ++j)
            for (int i = 0; i < n; ++i) {
                FieldElement acc;
                for (int k = 0; k < n; ++k) {
                    if (b.at(i, k).is_zero()) continue;
                    acc += b.at(i, k) * v[j][k];
                }
                bv[j][i] = std::move(acc);
            }
        const auto x_cols = solve_in_column_span(v, bv);
        const int m = static_cast<int>(v.size());
        ExactMatrix x(m);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < m; ++i) x.at(i, j) = x_cols[j][i];
        for (const auto& [nu, nu_mult] : eigenvalues(x)) {
            ExactMatrix xs = x;
            for (int i = 0; i < m; ++i) xs.at(i, i) -= nu;
            for (const auto& wcol : kernel_basis(xs)) {
                std::vector<FieldElement> col(n);
                for (int i = 0; i < n; ++i) {
                    FieldElement acc;
                    for (int j = 0; j < m; ++j) {
                        if (wcol[j].is_zero()) continue;
                        acc += v[j][i] * wcol[j];
                    }
                    col[i] = std::move(acc);
                }
                columns.push_back(std::move(col));
            }
        }
    }
    if (static_cast<int>(columns.size()) != n)
        throw Error("common_eigenbasis: matrices are not simultaneously diagonalizable");
    ExactMatrix p(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) p.at(i, j) = columns[j][i];
    if (p.det().is_zero()) throw Error("common_eigenbasis: basis is singular");
    return p;
}

namespace {

// Express x exactly as lambda^k with |k| <= 128; nullopt when impossible.
std::optional<long> power_of(const FieldElement& x, const FieldElement& lambda) {
    const FieldElement one(1L);
    if (x == one) return 0;
    FieldElement up = lambda;
    FieldElement down = lambda.inverse();
    FieldElement acc = one;
    for (long k = 1; k <= 128; ++k) {
        acc = acc * up;
        if (acc == x) return k;
    }
    acc = one;
    for (long k = 1; k <= 128; ++k) {
        acc = acc * down;
        if (acc == x) return -k;
    }
    return std::nullopt;
}

} // namespace

FlatSpan flat_span_of_pair(const ExactMatrix& a, const ExactMatrix& b) {
    const ExactMatrix p = common_eigenbasis(a, b);
    const ExactMatrix pinv = p.inverse();
    const ExactMatrix da = pinv * a * p;
    const ExactMatrix db = pinv * b * p;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && (!da.at(i, j).is_zero() || !db.at(i, j).is_zero()))
                throw Error("flat_span_of_pair: conjugation did not diagonalize");

    const FieldElement one(1L);
    std::vector<FieldElement> candidates;
    auto consider = [&](const FieldElement& x) {
        if (x == one) return;
        if (x.sign() <= 0)
            throw UnsupportedExtension("flat_span_of_pair: non-positive eigenvalue");
        FieldElement y = compare(x, one) > 0 ? x : x.inverse();
        for (const auto& c : candidates)
            if (c == y) return;
        candidates.push_back(y);
    };
    for (int i = 0; i < n; ++i) {
        consider(da.at(i, i));
        consider(db.at(i, i));
    }
    if (candidates.empty())
        throw Error("flat_span_of_pair: both matrices are the identity");
    // close under ratios (Euclid on the exponents) so powered pairs such as
    // (lambda^2, lambda^3) still find the fundamental unit lambda
    for (std::size_t round = 0; round < 8 && candidates.size() < 64; ++round) {
        const std::size_t before = candidates.size();
        for (std::size_t i = 0; i < before; ++i)
            for (std::size_t j = 0; j < before; ++j) {
                if (i == j) continue;
                if (compare(candidates[i], candidates[j]) <= 0) continue;
                consider(candidates[i] * candidates[j].inverse());
                if (candidates.size() >= 64) break;
            }
        if (candidates.size() == before) break;
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const FieldElement& x, const FieldElement& y) { return compare(x, y) < 0; });

    for (const auto& lambda : candidates) {
        FlatSpan span;
        span.forms.reserve(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            const auto e = power_of(da.at(i, i), lambda);
            const auto f = power_of(db.at(i, i), lambda);
            if (!e || !f) {
                ok = false;
                break;
            }
            span.forms.push_back({Rational(*e), Rational(*f)});
        }
        if (!ok) continue;
        Rational se(0), sf(0);
        for (const auto& [e, f] : span.forms) {
            se += e;
            sf += f;
        }
        if (se != 0 || sf != 0)
            throw Error("flat_span_of_pair: eigen-pattern forms do not sum to zero");
        return span;
    }
    throw UnsupportedExtension("flat_span_of_pair: no common fundamental unit for the eigenvalues");
}

namespace {

Direction normalized_direction(Integer a, Integer b) {
    Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(a),
                                           boost::multiprecision::abs(b));
    if (g != 0) {
        a /= g;
        b /= g;
    }
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    return Direction{a, b};
}

} // namespace

SingularDirections singular_directions(const FlatSpan& span) {
    SingularDirections out;
    std::vector<Direction> lines;
    const std::size_t n = span.forms.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational de = span.forms[i].first - span.forms[j].first;
            const Rational df = span.forms[i].second - span.forms[j].second;
            if (de == 0 && df == 0) {
                out.infinite = true;
                out.lines.clear();
                return out;
            }
            // solutions of de*a + df*b = 0
            const Integer na = numerator(df) * denominator(de);
            const Integer nb = numerator(de) * denominator(df);
            lines.push_back(normalized_direction(na, -nb));
        }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    out.lines = std::move(lines);
    return out;
}

bool flat_uniqueness(const FlatSpan& span) {
    const std::size_t n = span.forms.size();
    std::vector<Rational> degenerate;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational de = span.forms[i].first - span.forms[j].first;
            const Rational df = span.forms[i].second - span.forms[j].second;
            if (de == 0 && df == 0) return false; // identical forms
            if (df != 0) degenerate.push_back(-de / df);
        }
    Rational t(1);
    while (std::find(degenerate.begin(), degenerate.end(), t) != degenerate.end()) t += 1;
    std::vector<Rational> values;
    values.reserve(n);
    for (const auto& [e, f] : span.forms) values.push_back(e + f * t);
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
}

std::vector<FieldElement> char_poly(const ExactMatrix& m) {
    // Faddeev-LeVerrier: exact over a field of characteristic zero.
    const int n = m.dim();
    std::vector<FieldElement> coeffs(n + 1);
    coeffs[0] = FieldElement(1L);
    ExactMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        FieldElement trace;
        for (int i = 0; i < n; ++i) trace += mk.at(i, i);
        const FieldElement ck = -(trace * FieldElement(Rational(1, k)));
        coeffs[k] = ck;
        if (k < n) {
            ExactMatrix shifted = mk;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
            mk = m * shifted;
        }
    }
    return coeffs;
}

double displacement_numeric(const ExactMatrix& m) {
    const int n = m.dim();
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = m.at(i, j).to_double();
    const Eigen::MatrixXd gram = a.transpose() * a;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double s = std::sqrt(std::max(solver.eigenvalues()[i], 0.0));
        const double l = std::log(s);
        sum += l * l;
    }
    return std::sqrt(sum);
}

bool same_geodesic(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim()) return false;
    if (a == b) return true;
    if (!commutes(a, b)) return false;
    FlatSpan span;
    try {
        span = flat_span_of_pair(a, b);
    } catch (const Error&) {
        return false;
    }
    // proportional exponent patterns: all 2x2 minors vanish
    for (std::size_t i = 0; i < span.forms.size(); ++i)
        for (std::size_t j = i + 1; j < span.forms.size(); ++j) {
            const Rational minor = span.forms[i].first * span.forms[j].second -
                                   span.forms[j].first * span.forms[i].second;
            if (minor != 0) return false;
        }
    return true;
}

} // namespace raagrep
