#include "raagrep/certify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace raagrep {

std::string reason_name(PairReason r) {
    switch (r) {
    case PairReason::non_edge_vertices: return "non_edge_vertices";
    case PairReason::disjoint_edges: return "disjoint_edges";
    case PairReason::shared_endpoint: return "shared_endpoint";
    case PairReason::eta_pairs: return "eta_pairs";
    }
    return "?";
}

std::string GeodesicRef::label() const {
    std::ostringstream os;
    if (kind == Kind::generator)
        os << 'g' << vertex;
    else
        os << 'e' << edge_v << '-' << edge_w << '#' << member;
    return os.str();
}

const ExactMatrix& resolve(const Configuration& c, const GeodesicRef& ref) {
    if (ref.kind == GeodesicRef::Kind::generator) return c.generator(ref.vertex);
    return c.edge_data(ref.edge_v, ref.edge_w).singular_set.at(std::size_t(ref.member)).isometry;
}

namespace {

// Registry of the distinct geodesics of a configuration: generators first,
// then singular-set extras, identified by exact matrix equality.
struct GeodesicTable {
    std::vector<ExactMatrix> matrices;
    std::vector<GeodesicRef> refs;
    std::vector<bool> is_generator;

    int id_of(const ExactMatrix& m) const {
        for (std::size_t i = 0; i < matrices.size(); ++i)
            if (matrices[i] == m) return static_cast<int>(i);
        return -1;
    }
};

GeodesicTable build_table(const Configuration& c) {
    GeodesicTable t;
    for (int v = 0; v < c.graph().vertex_count(); ++v) {
        GeodesicRef r;
        r.kind = GeodesicRef::Kind::generator;
        r.vertex = v;
        t.matrices.push_back(c.generator(v));
        t.refs.push_back(r);
        t.is_generator.push_back(true);
    }
    for (const auto& e : c.edges()) {
        for (std::size_t k = 0; k < e.singular_set.size(); ++k) {
            const ExactMatrix& m = e.singular_set[k].isometry;
            if (t.id_of(m) >= 0) continue;
            GeodesicRef r;
            r.kind = GeodesicRef::Kind::singular_member;
            r.edge_v = e.v;
            r.edge_w = e.w;
            r.member = static_cast<int>(k);
            t.matrices.push_back(m);
            t.refs.push_back(r);
            t.is_generator.push_back(false);
        }
    }
    return t;
}

struct PairCollector {
    const GeodesicTable& table;
    std::map<std::pair<int, int>, PairRequirement> pairs;

    void add(int a, int b, PairReason reason) {
        if (a == b) return;
        const auto key = std::minmax(a, b);
        if (pairs.count(key)) return;
        PairRequirement req;
        req.left = table.refs[std::size_t(key.first)];
        req.right = table.refs[std::size_t(key.second)];
        req.reason = reason;
        pairs.emplace(key, std::move(req));
    }
};

} // namespace

std::vector<PairRequirement> required_pairs(const Configuration& c) {
    const GeodesicTable table = build_table(c);
    PairCollector out{table, {}};
    const SimpleGraph& g = c.graph();

    // non-edge vertex pairs
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w = v + 1; w < g.vertex_count(); ++w)
            if (!g.adjacent(v, w))
                out.add(v, w, PairReason::non_edge_vertices);

    const auto& edges = c.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const EdgeData& e = edges[i];
            const EdgeData& f = edges[j];
            int shared = -1;
            for (int a : {e.v, e.w})
                for (int b : {f.v, f.w})
                    if (a == b) shared = a;
            auto member_id = [&](const SingularMember& s) { return table.id_of(s.isometry); };
            if (shared >= 0) {
                const int shared_id = table.id_of(c.generator(shared));
                for (const auto& s : e.singular_set) {
                    const int sid = member_id(s);
                    if (sid == shared_id) continue;
                    for (const auto& t : f.singular_set) {
                        const int tid = member_id(t);
                        if (tid == shared_id) continue;
                        const bool both_extras =
                            !table.is_generator[std::size_t(sid)] && !table.is_generator[std::size_t(tid)];
                        out.add(sid, tid,
                                both_extras ? PairReason::eta_pairs : PairReason::shared_endpoint);
                    }
                }
            } else {
                for (const auto& s : e.singular_set) {
                    const int sid = member_id(s);
                    for (const auto& t : f.singular_set) {
                        const int tid = member_id(t);
                        const bool s_gen = table.is_generator[std::size_t(sid)];
                        const bool t_gen = table.is_generator[std::size_t(tid)];
                        if (s_gen && t_gen &&
                            g.adjacent(table.refs[std::size_t(sid)].vertex,
                                       table.refs[std::size_t(tid)].vertex))
                            continue; // allowed adjacency between generator axes
                        out.add(sid, tid,
                                (!s_gen && !t_gen) ? PairReason::eta_pairs
                                                   : PairReason::disjoint_edges);
                    }
                }
            }
        }
    }

    std::vector<PairRequirement> result;
    result.reserve(out.pairs.size());
    for (auto& [key, req] : out.pairs) result.push_back(std::move(req));
    return result;
}

PairAccounting pair_accounting(const Configuration& c) {
    PairAccounting acc;
    acc.distinct_pairs = required_pairs(c).size();

    const SimpleGraph& g = c.graph();
    std::size_t instances = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w = v + 1; w < g.vertex_count(); ++w)
            if (!g.adjacent(v, w)) ++instances;

    const auto& edges = c.edges();
    std::size_t consecutive_extra_pairs = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const EdgeData& e = edges[i];
            const EdgeData& f = edges[j];
            int shared = -1;
            for (int a : {e.v, e.w})
                for (int b : {f.v, f.w})
                    if (a == b) shared = a;
            if (shared >= 0) {
                instances += (e.singular_set.size() - 1) * (f.singular_set.size() - 1);
                consecutive_extra_pairs +=
                    (e.singular_set.size() - 2) * (f.singular_set.size() - 2);
            } else {
                std::size_t exceptions = 0;
                for (int a : {e.v, e.w})
                    for (int b : {f.v, f.w})
                        if (g.adjacent(a, b)) ++exceptions;
                instances += e.singular_set.size() * f.singular_set.size() - exceptions;
            }
        }
    acc.rule_instances = instances;
    acc.explicit_checks = acc.distinct_pairs - consecutive_extra_pairs;
    return acc;
}

Certificate certify_configuration(const Configuration& c) {
    Certificate cert;
    cert.construction = c.provenance().construction;
    const SimpleGraph& g = c.graph();

    if (!g.is_triangle_free())
        cert.failures.push_back("graph contains a triangle");

    for (int v = 0; v < g.vertex_count(); ++v)
        if (!is_isometry(c.generator(v), c.form()))
            cert.failures.push_back("generator " + std::to_string(v) +
                                    " is not an isometry of the form");

    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w = v + 1; w < g.vertex_count(); ++w) {
            const bool commuting = commutes(c.generator(v), c.generator(w));
            if (commuting != g.adjacent(v, w)) {
                cert.adjacency_ok = false;
                std::ostringstream os;
                os << "adjacency mismatch at (" << v << "," << w << "): generators "
                   << (commuting ? "commute off an edge" : "fail to commute on an edge");
                cert.failures.push_back(os.str());
            }
        }

    for (const auto& e : c.edges()) {
        EdgeCheck check;
        check.v = e.v;
        check.w = e.w;
        bool has_v = false, has_w = false;
        for (const auto& s : e.singular_set) {
            if (s.isometry == c.generator(e.v)) has_v = true;
            if (s.isometry == c.generator(e.w)) has_w = true;
        }
        if (!has_v || !has_w)
            cert.failures.push_back("edge (" + std::to_string(e.v) + "," + std::to_string(e.w) +
                                    "): singular set is missing an endpoint generator");
        try {
            const FlatSpan span = flat_span_of_pair(c.generator(e.v), c.generator(e.w));
            check.unique_flat = flat_uniqueness(span);
            const SingularDirections dirs = singular_directions(span);
            check.infinite_singular = dirs.infinite;
            check.singular_count = static_cast<int>(dirs.lines.size());
            check.set_matches =
                !dirs.infinite && e.singular_set.size() == dirs.lines.size();
        } catch (const Error& err) {
            cert.failures.push_back("edge (" + std::to_string(e.v) + "," + std::to_string(e.w) +
                                    "): " + err.what());
            check.unique_flat = false;
        }
        if (!check.unique_flat)
            cert.failures.push_back("edge (" + std::to_string(e.v) + "," + std::to_string(e.w) +
                                    "): no regular direction, flat not unique");
        if (check.infinite_singular)
            cert.failures.push_back("edge (" + std::to_string(e.v) + "," + std::to_string(e.w) +
                                    "): infinitely many singular directions");
        if (!check.set_matches)
            cert.failures.push_back("edge (" + std::to_string(e.v) + "," + std::to_string(e.w) +
                                    "): singular set size does not match the direction count");
        for (const auto& s : e.singular_set)
            if (!commutes(s.isometry, c.generator(e.v)) || !commutes(s.isometry, c.generator(e.w)))
                cert.failures.push_back("edge (" + std::to_string(e.v) + "," +
                                        std::to_string(e.w) +
                                        "): singular member does not lie in the flat");
        cert.edge_checks.push_back(check);
    }

    for (const auto& req : required_pairs(c)) {
        CheckedPair cp;
        cp.requirement = req;
        const ExactMatrix comm = additive_commutator(resolve(c, req.left), resolve(c, req.right));
        for (int i = 0; i < comm.dim() && !cp.witness; ++i)
            for (int j = 0; j < comm.dim(); ++j)
                if (!comm.at(i, j).is_zero()) {
                    cp.witness = Witness{i, j, comm.at(i, j)};
                    break;
                }
        if (!cp.witness)
            cert.failures.push_back("required pair " + req.left.label() + " / " +
                                    req.right.label() + " commutes");
        cert.pairs.push_back(std::move(cp));
    }

    cert.accounting = pair_accounting(c);
    cert.pass = cert.failures.empty();
    return cert;
}

// ---------------------------------------------------------------------------
// Faithfulness smoke test

namespace {

using ModMatrix = std::vector<std::int64_t>; // row-major dim*dim

struct ModularContext {
    std::int64_t q = 0;
    int dim = 0;

    std::int64_t mulmod(std::int64_t a, std::int64_t b) const {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % q);
    }
    std::int64_t powmod(std::int64_t base, std::int64_t e) const {
        std::int64_t r = 1;
        base %= q;
        while (e > 0) {
            if (e & 1) r = mulmod(r, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return r;
    }
    std::int64_t invmod(std::int64_t a) const { return powmod(((a % q) + q) % q, q - 2); }

    bool is_qr(std::int64_t a) const { return powmod(a % q, (q - 1) / 2) == 1; }

    // Tonelli-Shanks
    std::int64_t sqrtmod(std::int64_t a) const {
        a %= q;
        if (a == 0) return 0;
        if (q % 4 == 3) return powmod(a, (q + 1) / 4);
        std::int64_t s = q - 1;
        int r = 0;
        while ((s & 1) == 0) {
            s >>= 1;
            ++r;
        }
        std::int64_t z = 2;
        while (is_qr(z)) ++z;
        std::int64_t m = r, cc = powmod(z, s), t = powmod(a, s), res = powmod(a, (s + 1) / 2);
        while (t != 1) {
            std::int64_t t2 = t;
            int i = 0;
            while (t2 != 1) {
                t2 = mulmod(t2, t2);
                ++i;
            }
            std::int64_t b = cc;
            for (int k = 0; k < m - i - 1; ++k) b = mulmod(b, b);
            m = i;
            cc = mulmod(b, b);
            t = mulmod(t, cc);
            res = mulmod(res, b);
        }
        return res;
    }
};

std::int64_t map_rational(const ModularContext& ctx, const Rational& x) {
    const Integer num = numerator(x) % ctx.q;
    const Integer den = denominator(x) % ctx.q;
    if (den == 0) throw Error("modular filter: denominator divisible by the modulus");
    std::int64_t n = num.convert_to<std::int64_t>();
    if (n < 0) n += ctx.q;
    return ctx.mulmod(n, ctx.invmod(den.convert_to<std::int64_t>()));
}

struct FieldHom {
    ModularContext ctx;
    std::map<std::int64_t, std::int64_t> sqrt_of_prime;

    std::int64_t map(const FieldElement& x) const {
        std::int64_t acc = 0;
        for (const auto& t : x.terms()) {
            std::int64_t v = map_rational(ctx, t.coefficient);
            for (auto p : t.subset) v = ctx.mulmod(v, sqrt_of_prime.at(p));
            acc = (acc + v) % ctx.q;
        }
        return acc;
    }

    ModMatrix map_matrix(const ExactMatrix& m) const {
        ModMatrix out(std::size_t(m.dim()) * m.dim());
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j) out[std::size_t(i) * m.dim() + j] = map(m.at(i, j));
        return out;
    }
};

FieldHom make_hom(const std::vector<ExactMatrix>& matrices) {
    std::vector<std::int64_t> primes;
    for (const auto& m : matrices)
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j)
                for (auto p : m.at(i, j).basis().primes())
                    if (std::find(primes.begin(), primes.end(), p) == primes.end())
                        primes.push_back(p);
    Integer candidate = Integer(1) << 30;
    for (;;) {
        candidate = candidate + 1;
        if (!is_prime(candidate)) continue;
        ModularContext ctx;
        ctx.q = candidate.convert_to<std::int64_t>();
        bool ok = true;
        for (auto p : primes)
            if (!ctx.is_qr(p)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        FieldHom hom;
        hom.ctx = ctx;
        for (auto p : primes) {
            const std::int64_t r = ctx.sqrtmod(p % ctx.q);
            hom.sqrt_of_prime[p] = r;
            if (ctx.mulmod(r, r) != p % ctx.q) throw Error("modular filter: bad square root");
        }
        return hom;
    }
}

ModMatrix mod_mul(const ModularContext& ctx, int n, const ModMatrix& a, const ModMatrix& b) {
    ModMatrix r(std::size_t(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const std::int64_t aik = a[std::size_t(i) * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                auto& dst = r[std::size_t(i) * n + j];
                const __int128 acc = dst + static_cast<__int128>(aik) * b[std::size_t(k) * n + j];
                dst = static_cast<std::int64_t>(acc % ctx.q);
            }
        }
    return r;
}

bool mod_is_identity(int n, const ModMatrix& m) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[std::size_t(i) * n + j] != (i == j ? 1 : 0)) return false;
    return true;
}

} // namespace

SmokeReport faithfulness_smoke(const Configuration& c, int max_syllables, long exponent_bound) {
    SmokeReport report;
    const SimpleGraph& g = c.graph();
    const int dim = c.form().dim();
    const int nv = g.vertex_count();

    // exact generator powers for each usable exponent
    const auto nv_size = static_cast<std::size_t>(nv);
    std::vector<std::vector<ExactMatrix>> exact_pow(nv_size); // [v][e + bound]
    for (int v = 0; v < nv; ++v) {
        exact_pow[std::size_t(v)].reserve(std::size_t(2 * exponent_bound + 1));
        for (long e = -exponent_bound; e <= exponent_bound; ++e)
            exact_pow[std::size_t(v)].push_back(c.generator(v).pow(e));
    }
    std::vector<ExactMatrix> all;
    for (const auto& row : exact_pow)
        for (const auto& m : row) all.push_back(m);
    const FieldHom hom = make_hom(all);

    std::vector<std::vector<ModMatrix>> mod_pow(nv_size);
    for (int v = 0; v < nv; ++v)
        for (const auto& m : exact_pow[std::size_t(v)])
            mod_pow[std::size_t(v)].push_back(hom.map_matrix(m));

    std::vector<Syllable> stack;
    std::vector<ModMatrix> products; // products[k] = image of stack prefix of length k+1
    bool stop = false;

    auto exact_is_identity = [&](const std::vector<Syllable>& word) {
        ExactMatrix acc = ExactMatrix::identity(dim);
        for (const auto& s : word)
            acc = acc * exact_pow[std::size_t(s.vertex)][std::size_t(s.exponent + exponent_bound)];
        return acc.is_identity();
    };

    std::function<void(int)> dfs = [&](int remaining) {
        if (remaining == 0 || stop) return;
        for (int v = 0; v < nv && !stop; ++v) {
            if (!word_extends_canonically(stack, v, g)) continue;
            for (long e = -exponent_bound; e <= exponent_bound && !stop; ++e) {
                if (e == 0) continue;
                const ModMatrix& gm = mod_pow[std::size_t(v)][std::size_t(e + exponent_bound)];
                ModMatrix prod = products.empty()
                                     ? gm
                                     : mod_mul(hom.ctx, dim, products.back(), gm);
                stack.push_back({v, e});
                ++report.words_checked;
                if (mod_is_identity(dim, prod) && exact_is_identity(stack)) {
                    report.all_nonidentity = false;
                    report.counterexample = Word(stack);
                    stop = true;
                }
                if (!stop) {
                    products.push_back(std::move(prod));
                    dfs(remaining - 1);
                    products.pop_back();
                }
                stack.pop_back();
            }
        }
    };
    dfs(max_syllables);
    return report;
}

std::vector<std::vector<FieldElement>> conjugacy_fingerprint(const Configuration& c) {
    std::vector<std::vector<FieldElement>> out;
    out.reserve(c.generators().size());
    for (const auto& g : c.generators()) out.push_back(char_poly(g));
    return out;
}

} // namespace raagrep
