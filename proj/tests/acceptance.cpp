// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include "raagrep/certify.hpp"

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace raagrep;

namespace {

int failures_total = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("%s criterion %d: %s (%s, %.2fs)\n", pass ? "PASS" : "FAIL", criterion,
                name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++failures_total;
}

template <typename F>
void run(int criterion, const std::string& name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        detail = body(pass);
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(criterion, name, pass, detail, seconds);
}

// --- criterion 6 oracle: breadth-first search over free cancellations and
// commutation swaps on letter sequences, independent of the shuffle reducer.

bool oracle_trivial(const std::string& start, const SimpleGraph& g) {
    std::set<std::string> seen{start};
    std::deque<std::string> queue{start};
    while (!queue.empty()) {
        const std::string w = queue.front();
        queue.pop_front();
        if (w.empty()) return true;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            const char x = w[i], y = w[i + 1];
            const bool cancel = (x >= 'a' && y == char('A' + (x - 'a'))) ||
                                (y >= 'a' && x == char('A' + (y - 'a')));
            if (cancel) {
                std::string next = w.substr(0, i) + w.substr(i + 2);
                if (seen.insert(next).second) queue.push_back(next);
            }
            const int vx = (x >= 'a') ? x - 'a' : x - 'A';
            const int vy = (y >= 'a') ? y - 'a' : y - 'A';
            if (g.adjacent(vx, vy)) {
                std::string next = w;
                std::swap(next[i], next[i + 1]);
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
    }
    return false;
}

Word letters_to_word(const std::string& w) {
    std::vector<Syllable> syl;
    for (const char ch : w)
        syl.push_back(ch >= 'a' ? Syllable{ch - 'a', 1} : Syllable{ch - 'A', -1});
    return Word(std::move(syl));
}

ExactMatrix random_unimodular(int dim, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, dim - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    ExactMatrix m = ExactMatrix::identity(dim);
    for (int step = 0; step < 15; ++step) {
        const int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        const FieldElement c{long(coef(rng))};
        for (int k = 0; k < dim; ++k) m.at(i, k) += c * m.at(j, k);
    }
    return m;
}

} // namespace

int main() {
    const Configuration sl3 = build_sl3(sl3_default_r1(), sl3_default_r2());
    const Configuration so32 = build_so32(so32_default_r1(), so32_default_r2(), so32_default_r3());
    const Configuration sl5 = build_sl5z(2);

    run(1, "SL(3) closure solver pinned entrywise", [&](bool& pass) {
        auto [r3, r4] = solve_sl3_closure(sl3_default_r1(), sl3_default_r2());
        const bool r3_ok = r3.cos_part == FieldElement::sqrt_rational(Rational(2, 5)) &&
                           r3.sin_part == FieldElement::sqrt_rational(Rational(3, 5));
        const bool r4_ok = r4.cos_part == FieldElement::sqrt_rational(Rational(5, 8)) &&
                           r4.sin_part == -FieldElement::sqrt_rational(Rational(3, 8));
        const ExactMatrix product = rotation_about_axis(r4) * rotation_about_axis(r3) *
                                    rotation_about_axis(sl3_default_r2()) *
                                    rotation_about_axis(sl3_default_r1());
        const bool closes = commutes(product, sl3_t(2));
        pass = r3_ok && r4_ok && closes;
        std::ostringstream os;
        os << "R3 entries sqrt(2/5), sqrt(3/5): " << (r3_ok ? "exact" : "MISMATCH")
           << "; R4 entries sqrt(5/8), sqrt(3/8): " << (r4_ok ? "exact" : "MISMATCH")
           << "; closure commutes with T2: " << (closes ? "yes" : "NO");
        return os.str();
    });

    run(2, "certification counts 30 / 93 / 125 and full witnesses", [&](bool& pass) {
        const Certificate c3 = certify_configuration(sl3);
        const Certificate c32 = certify_configuration(so32);
        const Certificate c5 = certify_configuration(sl5);
        // One pinned counter per construction: distinct pairs for SL(3),
        // checks left after the consecutive-flat extras follow formally for
        // SO(3,2), and rule instances over edge pairs for SL(5,Z).
        const bool counts = c3.accounting.distinct_pairs == 30 &&
                            c32.accounting.explicit_checks == 93 &&
                            c5.accounting.rule_instances == 125;
        auto witnessed = [](const Certificate& cert) {
            for (const auto& p : cert.pairs)
                if (!p.witness || p.witness->value.is_zero()) return false;
            return true;
        };
        const bool verdicts = c3.pass && c32.pass && c5.pass;
        const bool all_witnessed = witnessed(c3) && witnessed(c32) && witnessed(c5);
        pass = counts && verdicts && all_witnessed;
        std::ostringstream os;
        os << "SL(3) distinct=" << c3.accounting.distinct_pairs << ", SO(3,2) explicit="
           << c32.accounting.explicit_checks << " (distinct " << c32.accounting.distinct_pairs
           << "), SL(5,Z) instances=" << c5.accounting.rule_instances << " (distinct "
           << c5.accounting.distinct_pairs << "); verdicts "
           << c3.verdict() << "/" << c32.verdict() << "/" << c5.verdict()
           << "; witnesses per distinct pair: " << (all_witnessed ? "all nonzero" : "MISSING");
        return os.str();
    });

    run(3, "four singular directions per lattice edge span", [&](bool& pass) {
        pass = true;
        const std::vector<Direction> expected{{0, 1}, {1, -1}, {1, 0}, {1, 1}};
        for (long n = 2; n <= 4; ++n) {
            const Configuration c = build_sl5z(n);
            for (const auto& e : c.edges()) {
                const SingularDirections dirs = singular_directions(e.span);
                if (dirs.infinite || dirs.lines != expected || !flat_uniqueness(e.span))
                    pass = false;
            }
        }
        return std::string("n in {2,3,4}, all edges report {a=0, b=0, a=b, a=-b} with a regular direction");
    });

    run(4, "exact form preservation and unit determinants", [&](bool& pass) {
        pass = true;
        std::size_t checked = 0;
        const GroupForm so_form = GroupForm::orthogonal(3, 2);
        auto scan = [&](const Configuration& c, const GroupForm& form) {
            std::vector<ExactMatrix> all = c.generators();
            for (const auto& e : c.edges())
                for (const auto& s : e.singular_set) all.push_back(s.isometry);
            for (const auto& m : all) {
                if (!is_isometry(m, form)) pass = false;
                ++checked;
            }
        };
        scan(so32, so_form);
        scan(sl3, GroupForm::special_linear(3));
        scan(sl5, GroupForm::special_linear(5));
        std::ostringstream os;
        os << checked << " matrices: SO(3,2) satisfies M^T J M = J and det 1; SL cases det 1";
        return os.str();
    });

    run(5, "commuting pattern law for n = 2..6", [&](bool& pass) {
        pass = true;
        for (long n = 2; n <= 6; ++n) {
            const Configuration c = build_sl5z(n);
            for (int v = 0; v < 5; ++v)
                for (int w = v + 1; w < 5; ++w)
                    if (commutes(c.generator(v), c.generator(w)) != c.graph().adjacent(v, w))
                        pass = false;
        }
        return std::string("A_i, A_j commute iff i - j = +-1 (mod 5), exactly");
    });

    run(6, "word-problem oracle agreement", [&](bool& pass) {
        const SimpleGraph c5 = cycle_graph(5);
        std::uint64_t checked = 0;
        pass = true;
        // exhaustive over all words of length <= 5
        std::vector<std::string> frontier{""};
        for (int len = 1; len <= 5 && pass; ++len) {
            std::vector<std::string> next;
            next.reserve(frontier.size() * 10);
            for (const auto& w : frontier)
                for (int v = 0; v < 5; ++v) {
                    next.push_back(w + char('a' + v));
                    next.push_back(w + char('A' + v));
                }
            for (const auto& w : next) {
                if (word_is_trivial(letters_to_word(w), c5) != oracle_trivial(w, c5)) {
                    pass = false;
                    break;
                }
                ++checked;
            }
            frontier = std::move(next);
        }
        // deterministic sample of longer words, lengths 6 to 8
        std::mt19937 rng(1789);
        std::uniform_int_distribution<int> letter(0, 9);
        std::uniform_int_distribution<int> lengths(6, 8);
        for (int i = 0; i < 5000 && pass; ++i) {
            std::string w;
            const int len = lengths(rng);
            for (int k = 0; k < len; ++k) {
                const int l = letter(rng);
                w += char((l < 5 ? 'a' : 'A') + (l % 5));
            }
            if (word_is_trivial(letters_to_word(w), c5) != oracle_trivial(w, c5)) pass = false;
            ++checked;
        }
        std::ostringstream os;
        os << checked << " words: exhaustive length <= 5 plus 5000 sampled of length 6..8";
        return os.str();
    });

    run(7, "faithfulness smoke, 6 syllables, exponents {±1, ±2}", [&](bool& pass) {
        const SmokeReport a = faithfulness_smoke(sl3, 6, 2);
        const SmokeReport b = faithfulness_smoke(so32, 6, 2);
        const SmokeReport c = faithfulness_smoke(sl5, 6, 2);
        pass = a.all_nonidentity && b.all_nonidentity && c.all_nonidentity;
        std::ostringstream os;
        os << "reduced words checked: SL(3) " << a.words_checked << ", SO(3,2) "
           << b.words_checked << ", SL(5,Z) " << c.words_checked << "; all map off the identity";
        if (!pass) {
            for (const SmokeReport* r : {&a, &b, &c})
                if (r->counterexample) os << "; counterexample " << r->counterexample->str();
        }
        return os.str();
    });

    run(8, "congruence orders and reduction to the identity", [&](bool& pass) {
        pass = true;
        auto is_identity_mod = [](const ExactMatrix& m, std::int64_t p) {
            const auto r = matrix_mod_p(m, p);
            for (std::size_t i = 0; i < r.size(); ++i)
                for (std::size_t j = 0; j < r.size(); ++j)
                    if (r[i][j] != (i == j ? 1 : 0)) return false;
            return true;
        };
        std::ostringstream os;
        for (const std::int64_t p : {2, 3, 5}) {
            Integer lcm_order = 1;
            for (int i = 1; i <= 5; ++i) {
                const ExactMatrix a = sl5z_generator(i, 2);
                const Integer e = congruence_order(a, p);
                const long el = e.convert_to<long>();
                // oracle: direct exponentiation
                if (!is_identity_mod(a.pow(el), p)) pass = false;
                for (long k = 1; k < el; ++k)
                    if (is_identity_mod(a.pow(k), p)) pass = false;
                lcm_order = boost::multiprecision::lcm(lcm_order, e);
            }
            const long L = lcm_order.convert_to<long>();
            const Configuration powered = power_scale(sl5, std::vector<long>(5, L));
            for (int v = 0; v < 5; ++v)
                if (!is_identity_mod(powered.generator(v), p)) pass = false;
            os << "p=" << p << " lcm=" << L << " ";
        }
        os << "- orders verified by direct exponentiation; powered generators reduce to I";
        return os.str();
    });

    run(9, "conjugacy fingerprints separate representations", [&](bool& pass) {
        const auto f2 = conjugacy_fingerprint(sl5);
        const auto f2p = conjugacy_fingerprint(power_scale(sl5, {2, 2, 2, 2, 2}));
        const auto f3 = conjugacy_fingerprint(build_sl5z(3));
        const bool distinct = f2 != f2p && f2 != f3 && f2p != f3;
        std::mt19937 rng(41);
        bool invariant = true;
        const ExactMatrix p = random_unimodular(5, rng);
        const ExactMatrix pinv = p.inverse();
        for (const auto& g : sl5.generators())
            if (char_poly(p * g * pinv) != char_poly(g)) invariant = false;
        pass = distinct && invariant;
        std::ostringstream os;
        os << "base vs squared vs n=3 pairwise distinct: " << (distinct ? "yes" : "NO")
           << "; invariant under a random unimodular conjugation: " << (invariant ? "yes" : "NO");
        return os.str();
    });

    if (failures_total == 0) {
        std::printf("all 9 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures_total);
    return 1;
}
