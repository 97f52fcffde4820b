#include "raagrep/builders.hpp"

#include <algorithm>
#include <functional>

namespace raagrep {

RotationParam::RotationParam(Axis ax, FieldElement c, FieldElement s)
    : axis(ax), cos_part(std::move(c)), sin_part(std::move(s)) {
    if (cos_part * cos_part + sin_part * sin_part != FieldElement(1L))
        throw NotUnit("RotationParam: cos^2 + sin^2 != 1");
}

RotationParam RotationParam::identity(Axis ax) {
    return RotationParam(ax, FieldElement(1L), FieldElement(0L));
}

bool RotationParam::is_identity() const {
    return cos_part == FieldElement(1L) && sin_part == FieldElement(0L);
}

ExactMatrix rotation_about_axis(const RotationParam& p) {
    int fixed = p.axis == Axis::x ? 0 : (p.axis == Axis::y ? 1 : 2);
    int r0 = fixed == 0 ? 1 : 0;
    int r1 = fixed == 2 ? 1 : 2;
    ExactMatrix m = ExactMatrix::identity(3);
    m.at(r0, r0) = p.cos_part;
    m.at(r0, r1) = p.sin_part;
    m.at(r1, r0) = -p.sin_part;
    m.at(r1, r1) = p.cos_part;
    return m;
}

ExactMatrix tau_embed(int i, const FieldElement& c, const FieldElement& s) {
    if (i != 0 && i != 1) throw Error("tau_embed: i must be 0 or 1");
    if (c * c + s * s != FieldElement(1L)) throw NotUnit("tau_embed: cos^2 + sin^2 != 1");
    const int r0 = i == 0 ? 1 : 0;
    const int r1 = 2;
    ExactMatrix m = ExactMatrix::identity(5);
    m.at(r0, r0) = c;
    m.at(r0, r1) = s;
    m.at(r1, r0) = -s;
    m.at(r1, r1) = c;
    return m;
}

ExactMatrix tau_embed(int i, const RotationParam& p) { return tau_embed(i, p.cos_part, p.sin_part); }

namespace {

struct Vec3 {
    FieldElement x, y, z;
};

Vec3 apply(const ExactMatrix& m, const Vec3& v) {
    return {m.at(0, 0) * v.x + m.at(0, 1) * v.y + m.at(0, 2) * v.z,
            m.at(1, 0) * v.x + m.at(1, 1) * v.y + m.at(1, 2) * v.z,
            m.at(2, 0) * v.x + m.at(2, 1) * v.y + m.at(2, 2) * v.z};
}

// (c, s) with c*u + s*v = 0 and c >= 0. Returns the identity rotation when
// u = v = 0 (the documented degenerate tie-break). The squared norm u^2+v^2
// must be rational or the radical leaves the supported field.
std::pair<FieldElement, FieldElement> zeroing_rotation(const FieldElement& u,
                                                       const FieldElement& v) {
    const FieldElement norm2 = u * u + v * v;
    if (norm2.is_zero()) return {FieldElement(1L), FieldElement(0L)};
    if (!norm2.is_rational())
        throw UnsupportedExtension("closure solver: irrational squared norm " + norm2.str());
    const FieldElement r = FieldElement::sqrt_rational(norm2.as_rational());
    FieldElement c = v / r;
    FieldElement s = -(u / r);
    if (c.sign() < 0) {
        c = -c;
        s = -s;
    }
    return {c, s};
}

void require_axis(const RotationParam& p, Axis ax, const char* name) {
    if (p.axis != ax) throw Error(std::string("closure solver: ") + name + " has the wrong axis");
}

} // namespace

std::pair<RotationParam, RotationParam> solve_sl3_closure(const RotationParam& r1,
                                                          const RotationParam& r2) {
    require_axis(r1, Axis::x, "R1");
    require_axis(r2, Axis::y, "R2");
    const ExactMatrix m1 = rotation_about_axis(r1);
    const ExactMatrix m2 = rotation_about_axis(r2);
    const Vec3 w{FieldElement(0L), FieldElement(1L), FieldElement(0L)};
    const Vec3 v = apply(m2, apply(m1, w));

    auto [c3, s3] = zeroing_rotation(v.x, v.y);
    const RotationParam r3(Axis::z, c3, s3);
    const Vec3 vp = apply(rotation_about_axis(r3), v);
    if (!vp.x.is_zero()) throw ClosureFailed("solve_sl3_closure: R3 failed to zero the first coordinate");

    // unique x-rotation with R4 (0, p, q) = (0, 1, 0): (cos, sin) = (p, q)
    const RotationParam r4(Axis::x, vp.y, vp.z);

    const ExactMatrix product = rotation_about_axis(r4) * rotation_about_axis(r3) * m2 * m1;
    const Vec3 closed = apply(product, w);
    if (!(closed.x.is_zero() && closed.y == FieldElement(1L) && closed.z.is_zero()))
        throw ClosureFailed("solve_sl3_closure: product does not fix the y-axis vector");
    if (!commutes(product, sl3_t(2)))
        throw ClosureFailed("solve_sl3_closure: closing product does not commute with T2");
    return {r3, r4};
}

std::pair<RotationParam, RotationParam> solve_so32_closure(const RotationParam& r1,
                                                           const RotationParam& r2,
                                                           const RotationParam& r3) {
    require_axis(r1, Axis::y, "R1");
    require_axis(r2, Axis::x, "R2");
    require_axis(r3, Axis::y, "R3");
    const Vec3 ex{FieldElement(1L), FieldElement(0L), FieldElement(0L)};
    const Vec3 v = apply(rotation_about_axis(r3),
                         apply(rotation_about_axis(r2), apply(rotation_about_axis(r1), ex)));

    auto [c4, s4] = zeroing_rotation(v.y, v.z);
    const RotationParam r4(Axis::x, c4, s4);
    const Vec3 vp = apply(rotation_about_axis(r4), v);
    if (!vp.y.is_zero()) throw ClosureFailed("solve_so32_closure: R4 failed to zero the y-coordinate");

    // y-rotation with R5 (p, 0, q) = (1, 0, 0): (cos, sin) = (p, q)
    const RotationParam r5(Axis::y, vp.x, vp.z);

    const ExactMatrix product = rotation_about_axis(r5) * rotation_about_axis(r4) *
                                rotation_about_axis(r3) * rotation_about_axis(r2) *
                                rotation_about_axis(r1);
    const Vec3 closed = apply(product, ex);
    if (!(closed.x == FieldElement(1L) && closed.y.is_zero() && closed.z.is_zero()))
        throw ClosureFailed("solve_so32_closure: product does not fix the x-axis");
    return {r4, r5};
}

// ---------------------------------------------------------------------------
// Configurations

Configuration::Configuration(SimpleGraph graph, GroupForm form,
                             std::vector<ExactMatrix> generators, std::vector<EdgeData> edges,
                             Provenance provenance)
    : graph_(std::move(graph)), form_(std::move(form)), generators_(std::move(generators)),
      edges_(std::move(edges)), provenance_(std::move(provenance)) {
    // Structural validation only: semantic defects (non-commuting edge
    // generators, broken singular sets, non-isometries) are certify's job,
    // recorded as failure data so batch sweeps always complete.
    if (static_cast<int>(generators_.size()) != graph_.vertex_count())
        throw Error("Configuration: one generator per vertex required");
    for (const auto& g : generators_)
        if (g.dim() != form_.dim()) throw DimensionMismatch("Configuration: generator dimension");
    const auto graph_edges = graph_.edges();
    if (edges_.size() != graph_edges.size())
        throw Error("Configuration: one edge datum per graph edge required");
    std::sort(edges_.begin(), edges_.end(), [](const EdgeData& a, const EdgeData& b) {
        return std::make_pair(a.v, a.w) < std::make_pair(b.v, b.w);
    });
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const EdgeData& e = edges_[i];
        if (e.v >= e.w) throw Error("Configuration: edge pair must be ordered");
        if (std::make_pair(e.v, e.w) != graph_edges[i])
            throw Error("Configuration: edge data does not match the graph");
    }
}

const EdgeData& Configuration::edge_data(int v, int w) const {
    const int a = std::min(v, w), b = std::max(v, w);
    for (const auto& e : edges_)
        if (e.v == a && e.w == b) return e;
    throw Error("Configuration: no such edge");
}

RotationParam sl3_default_r1() {
    return RotationParam(Axis::x, FieldElement(Rational(1, 2)),
                         FieldElement::term(Rational(1, 2), {3}));
}

RotationParam sl3_default_r2() {
    return RotationParam(Axis::y, FieldElement::term(Rational(1, 2), {2}),
                         FieldElement::term(Rational(1, 2), {2}));
}

RotationParam so32_default_r1() {
    return RotationParam(Axis::y, FieldElement(Rational(3, 5)), FieldElement(Rational(4, 5)));
}

RotationParam so32_default_r2() {
    return RotationParam(Axis::x, FieldElement(Rational(4, 5)), FieldElement(Rational(3, 5)));
}

RotationParam so32_default_r3() {
    return RotationParam(Axis::y, FieldElement(Rational(-31, 481)),
                         FieldElement(Rational(-480, 481)));
}

ExactMatrix sl3_t(int i) {
    if (i < 1 || i > 3) throw Error("sl3_t: index in 1..3");
    ExactMatrix m = ExactMatrix::identity(3);
    const FieldElement two(2L), quarter(Rational(1, 4));
    for (int j = 0; j < 3; ++j) m.at(j, j) = (j == i - 1) ? quarter : two;
    return m;
}

ExactMatrix so32_t(int i) {
    if (i != 0 && i != 1) throw Error("so32_t: index is 0 or 1");
    const int a = i == 0 ? 0 : 1;
    const int b = i == 0 ? 3 : 4;
    ExactMatrix m = ExactMatrix::identity(5);
    m.at(a, a) = FieldElement(2L);
    m.at(b, b) = FieldElement(2L);
    m.at(a, b) = FieldElement::radical(3);
    m.at(b, a) = FieldElement::radical(3);
    return m;
}

ExactMatrix sl5z_generator(int i, long n) {
    if (n < 2) throw TooSmall("sl5z_generator: need n >= 2");
    if (i < 1 || i > 5) throw Error("sl5z_generator: index in 1..5");
    ExactMatrix m = ExactMatrix::identity(5);
    auto block = [&](int r, int c, long tl, long tr, long bl, long br) {
        m.at(r, r) = FieldElement(tl);
        m.at(r, c) = FieldElement(tr);
        m.at(c, r) = FieldElement(bl);
        m.at(c, c) = FieldElement(br);
    };
    switch (i) {
    case 1: block(0, 1, n, n - 1, n + 1, n); break;
    case 2: block(2, 3, n, n - 1, n + 1, n); break;
    case 3: block(0, 4, n, n + 1, n - 1, n); break;
    case 4: block(1, 2, n, n - 1, n + 1, n); break;
    case 5: block(3, 4, n, n - 1, n + 1, n); break;
    }
    return m;
}

namespace {

// Singular set of the edge 2-plane from its span: the generators plus one
// product generator per non-axis singular direction.
std::vector<SingularMember> singular_set_from_span(const ExactMatrix& gv, const ExactMatrix& gw,
                                                   const FlatSpan& span) {
    const SingularDirections dirs = singular_directions(span);
    if (dirs.infinite)
        throw Error("singular_set_from_span: infinitely many singular directions");
    std::vector<SingularMember> out;
    out.push_back({gv, 1, 0});
    out.push_back({gw, 0, 1});
    for (const auto& d : dirs.lines) {
        if ((d.a == 1 && d.b == 0) || (d.a == 0 && d.b == 1)) continue;
        const long ea = d.a.convert_to<long>();
        const long eb = d.b.convert_to<long>();
        out.push_back({gv.pow(ea) * gw.pow(eb), d.a, d.b});
    }
    return out;
}

std::vector<EdgeData> edge_data_for(const SimpleGraph& g, const std::vector<ExactMatrix>& gens,
                                    const std::function<std::vector<SingularMember>(
                                        int, int, const FlatSpan&)>& make_set) {
    std::vector<EdgeData> out;
    for (const auto& [v, w] : g.edges()) {
        EdgeData e;
        e.v = v;
        e.w = w;
        e.span = flat_span_of_pair(gens[std::size_t(v)], gens[std::size_t(w)]);
        e.singular_set = make_set(v, w, e.span);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

Configuration build_sl3(const RotationParam& r1, const RotationParam& r2) {
    auto [r3, r4] = solve_sl3_closure(r1, r2);
    const ExactMatrix m1 = rotation_about_axis(r1);
    const ExactMatrix m2 = rotation_about_axis(r2);
    const ExactMatrix m3 = rotation_about_axis(r3);
    const ExactMatrix m4 = rotation_about_axis(r4);

    // prefix products Q_k conjugate the base flat to the k-th flat
    std::vector<ExactMatrix> q{ExactMatrix::identity(3), m4, m4 * m3, m4 * m3 * m2,
                               m4 * m3 * m2 * m1};
    auto conj = [](const ExactMatrix& g, const ExactMatrix& t) { return g * t * g.inverse(); };

    std::vector<ExactMatrix> gamma{sl3_t(2), sl3_t(1), conj(q[1], sl3_t(3)), conj(q[2], sl3_t(2)),
                                   conj(q[3], sl3_t(1))};
    std::vector<ExactMatrix> eta{sl3_t(3), conj(q[1], sl3_t(2)), conj(q[2], sl3_t(1)),
                                 conj(q[3], sl3_t(3)), conj(q[4], sl3_t(3))};

    const SimpleGraph g = cycle_graph(5);
    std::vector<EdgeData> edges;
    for (int i = 0; i < 5; ++i) {
        const int a = i, b = (i + 1) % 5;
        EdgeData e;
        e.v = std::min(a, b);
        e.w = std::max(a, b);
        e.span = flat_span_of_pair(gamma[std::size_t(e.v)], gamma[std::size_t(e.w)]);
        // gamma_i, gamma_{i+1}, then eta_i; eta_i is the inverse of the
        // product sigma_v sigma_w, hence direction (1,1).
        e.singular_set.push_back({gamma[std::size_t(e.v)], 1, 0});
        e.singular_set.push_back({gamma[std::size_t(e.w)], 0, 1});
        e.singular_set.push_back({eta[std::size_t(i)], 1, 1});
        edges.push_back(std::move(e));
    }
    Provenance prov{"sl3",
                    {{"r1", r1.cos_part.str() + ", " + r1.sin_part.str()},
                     {"r2", r2.cos_part.str() + ", " + r2.sin_part.str()},
                     {"r3", r3.cos_part.str() + ", " + r3.sin_part.str()},
                     {"r4", r4.cos_part.str() + ", " + r4.sin_part.str()}}};
    return Configuration(g, GroupForm::special_linear(3), std::move(gamma), std::move(edges),
                         std::move(prov));
}

Configuration build_so32(const RotationParam& r1, const RotationParam& r2,
                         const RotationParam& r3) {
    auto [r4, r5] = solve_so32_closure(r1, r2, r3);
    const ExactMatrix e1 = tau_embed(1, r1);
    const ExactMatrix e2 = tau_embed(0, r2);
    const ExactMatrix e3 = tau_embed(1, r3);
    const ExactMatrix e4 = tau_embed(0, r4);
    const ExactMatrix e5 = tau_embed(1, r5);

    std::vector<ExactMatrix> p{ExactMatrix::identity(5), e5, e5 * e4, e5 * e4 * e3,
                               e5 * e4 * e3 * e2, e5 * e4 * e3 * e2 * e1};
    const ExactMatrix t0 = so32_t(0);
    const ExactMatrix t1 = so32_t(1);
    if (!commutes(p[5], t0))
        throw ClosureFailed("build_so32: closing product does not commute with T0");

    auto conj = [](const ExactMatrix& g, const ExactMatrix& t) { return g * t * g.inverse(); };
    std::vector<ExactMatrix> gamma{t0,
                                   t1,
                                   conj(p[1], t0),
                                   conj(p[2], t1),
                                   conj(p[3], t0),
                                   conj(p[4], t1)};

    const SimpleGraph g = cycle_graph(6);
    const ExactMatrix t01 = t0 * t1;
    const ExactMatrix t01inv = t0 * t1.inverse();
    std::vector<EdgeData> edges;
    for (int k = 0; k < 6; ++k) {
        const int a = k, b = (k + 1) % 6;
        EdgeData e;
        e.v = std::min(a, b);
        e.w = std::max(a, b);
        e.span = flat_span_of_pair(gamma[std::size_t(e.v)], gamma[std::size_t(e.w)]);
        e.singular_set.push_back({gamma[std::size_t(e.v)], 1, 0});
        e.singular_set.push_back({gamma[std::size_t(e.w)], 0, 1});
        e.singular_set.push_back({conj(p[std::size_t(k)], t01), 1, 1});
        e.singular_set.push_back({conj(p[std::size_t(k)], t01inv), 1, -1});
        edges.push_back(std::move(e));
    }
    Provenance prov{"so32",
                    {{"r1", r1.cos_part.str() + ", " + r1.sin_part.str()},
                     {"r2", r2.cos_part.str() + ", " + r2.sin_part.str()},
                     {"r3", r3.cos_part.str() + ", " + r3.sin_part.str()},
                     {"r4", r4.cos_part.str() + ", " + r4.sin_part.str()},
                     {"r5", r5.cos_part.str() + ", " + r5.sin_part.str()}}};
    return Configuration(g, GroupForm::orthogonal(3, 2), std::move(gamma), std::move(edges),
                         std::move(prov));
}

Configuration build_sl5z(long n) {
    if (n < 2) throw TooSmall("build_sl5z: need n >= 2");
    std::vector<ExactMatrix> gens;
    gens.reserve(5);
    for (int i = 1; i <= 5; ++i) gens.push_back(sl5z_generator(i, n));
    const SimpleGraph g = cycle_graph(5);
    auto edges = edge_data_for(g, gens, [&](int v, int w, const FlatSpan& span) {
        return singular_set_from_span(gens[std::size_t(v)], gens[std::size_t(w)], span);
    });
    Provenance prov{"sl5z", {{"n", std::to_string(n)}}};
    return Configuration(g, GroupForm::special_linear(5), std::move(gens), std::move(edges),
                         std::move(prov));
}

Configuration power_scale(const Configuration& c, const std::vector<long>& exps) {
    if (static_cast<int>(exps.size()) != c.graph().vertex_count())
        throw Error("power_scale: one exponent per vertex required");
    for (long e : exps)
        if (e < 1) throw TooSmall("power_scale: exponents must be >= 1");
    std::vector<ExactMatrix> gens;
    gens.reserve(c.generators().size());
    for (std::size_t v = 0; v < c.generators().size(); ++v)
        gens.push_back(c.generators()[v].pow(exps[v]));
    // commutation pattern must be unchanged, re-checked rather than assumed
    const int nv = c.graph().vertex_count();
    for (int v = 0; v < nv; ++v)
        for (int w = v + 1; w < nv; ++w)
            if (commutes(gens[std::size_t(v)], gens[std::size_t(w)]) !=
                commutes(c.generator(v), c.generator(w)))
                throw Error("power_scale: commutation pattern changed under powering");
    auto edges = edge_data_for(c.graph(), gens, [&](int v, int w, const FlatSpan& span) {
        return singular_set_from_span(gens[std::size_t(v)], gens[std::size_t(w)], span);
    });
    Provenance prov = c.provenance();
    std::string joined;
    for (std::size_t i = 0; i < exps.size(); ++i)
        joined += (i ? "," : "") + std::to_string(exps[i]);
    prov.params.push_back({"exps", joined});
    return Configuration(c.graph(), c.form(), std::move(gens), std::move(edges), std::move(prov));
}

Integer congruence_order(const ExactMatrix& a, std::int64_t p) {
    if (!is_prime(Integer(p))) throw Error("congruence_order: modulus must be prime");
    const auto m0 = matrix_mod_p(a, p); // validates integrality
    const int n = a.dim();
    // over a prime field, invertible iff det != 0
    {
        const Integer det = numerator(a.det().as_rational());
        if (det % p == 0) throw NotInvertibleModP("congruence_order: matrix is singular mod p");
    }
    auto is_id = [&](const std::vector<std::vector<std::int64_t>>& m) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m[i][j] != (i == j ? 1 : 0)) return false;
        return true;
    };
    auto mul = [&](const std::vector<std::vector<std::int64_t>>& x,
                   const std::vector<std::vector<std::int64_t>>& y) {
        std::vector<std::vector<std::int64_t>> r(n, std::vector<std::int64_t>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (x[i][k] == 0) continue;
                for (int j = 0; j < n; ++j) {
                    const __int128 acc = r[i][j] + static_cast<__int128>(x[i][k]) * y[k][j];
                    r[i][j] = static_cast<std::int64_t>(acc % p);
                }
            }
        return r;
    };
    const Integer bound = boost::multiprecision::pow(Integer(p), unsigned(n * n));
    auto acc = m0;
    Integer e = 1;
    while (!is_id(acc)) {
        acc = mul(acc, m0);
        ++e;
        if (e > bound) throw Error("congruence_order: exceeded the order bound"); // unreachable
    }
    return e;
}

} // namespace raagrep
