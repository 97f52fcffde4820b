#include "raagrep/word.hpp"

#include "raagrep/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace raagrep {

namespace {

// Merge consecutive syllables on the same vertex, dropping zero exponents.
std::vector<Syllable> merge_adjacent(std::vector<Syllable> syl) {
    std::vector<Syllable> out;
    for (const auto& s : syl) {
        if (s.exponent == 0) continue;
        if (!out.empty() && out.back().vertex == s.vertex) {
            out.back().exponent += s.exponent;
            if (out.back().exponent == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    return out;
}

} // namespace

Word::Word(std::vector<Syllable> syllables) : syl_(merge_adjacent(std::move(syllables))) {}

long Word::letter_length() const {
    long n = 0;
    for (const auto& s : syl_) n += std::labs(s.exponent);
    return n;
}

Word Word::inverse() const {
    std::vector<Syllable> out;
    out.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
        out.push_back({it->vertex, -it->exponent});
    return Word(std::move(out));
}

Word Word::concat(const Word& o) const {
    std::vector<Syllable> out = syl_;
    out.insert(out.end(), o.syl_.begin(), o.syl_.end());
    return Word(std::move(out));
}

std::string Word::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syl_) {
        if (!first) os << ' ';
        os << 's' << s.vertex;
        if (s.exponent != 1) os << '^' << s.exponent;
        first = false;
    }
    return os.str();
}

Word Word::parse(const std::string& text) {
    std::vector<Syllable> syl;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || tok[0] != 's')
            throw ParseError("word token must look like s3 or s3^-2: '" + tok + "'");
        auto caret = tok.find('^');
        long exponent = 1;
        std::string vertex_part = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        try {
            if (caret != std::string::npos) exponent = std::stol(tok.substr(caret + 1));
            int vertex = std::stoi(vertex_part);
            if (vertex < 0) throw ParseError("negative vertex in word: '" + tok + "'");
            if (exponent == 0) throw ParseError("zero exponent in word: '" + tok + "'");
            syl.push_back({vertex, exponent});
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad word token: '" + tok + "'");
        }
    }
    return Word(std::move(syl));
}

Word word_reduce(const Word& w, const SimpleGraph& g) {
    std::vector<Syllable> syl = w.syllables(); // already adjacent-merged
    bool changed = true;
    while (changed) {
        changed = false;
        const int n = static_cast<int>(syl.size());
        for (int i = 0; i < n && !changed; ++i) {
            const int v = syl[i].vertex;
            for (int j = i + 1; j < n; ++j) {
                if (syl[j].vertex == v) {
                    syl[i].exponent += syl[j].exponent;
                    syl.erase(syl.begin() + j);
                    if (syl[i].exponent == 0) syl.erase(syl.begin() + i);
                    syl = merge_adjacent(std::move(syl));
                    changed = true;
                    break;
                }
                if (!g.adjacent(syl[j].vertex, v)) break;
            }
        }
    }
    return Word(std::move(syl));
}

bool word_is_trivial(const Word& w, const SimpleGraph& g) {
    return word_reduce(w, g).empty();
}

bool word_extends_canonically(const std::vector<Syllable>& prefix, int v, const SimpleGraph& g) {
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        if (it->vertex == v) return false; // mergeable through a commuting block
        if (!g.adjacent(it->vertex, v)) return true;
        if (it->vertex > v) return false; // descent: a spelling with v earlier exists
    }
    return true;
}

namespace {

void enumerate_rec(const SimpleGraph& g, int remaining, long bound, std::vector<Syllable>& stack,
                   const std::function<void(const Word&)>& visit) {
    if (remaining == 0) return;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!word_extends_canonically(stack, v, g)) continue;
        for (long e = -bound; e <= bound; ++e) {
            if (e == 0) continue;
            stack.push_back({v, e});
            visit(Word(stack));
            enumerate_rec(g, remaining - 1, bound, stack, visit);
            stack.pop_back();
        }
    }
}

} // namespace

void enumerate_words(const SimpleGraph& g, int max_syllables, long exponent_bound,
                     const std::function<void(const Word&)>& visit) {
    if (max_syllables < 1) throw TooSmall("enumerate_words: need max_syllables >= 1");
    if (exponent_bound < 1) throw TooSmall("enumerate_words: need exponent_bound >= 1");
    std::vector<Syllable> stack;
    enumerate_rec(g, max_syllables, exponent_bound, stack, visit);
}

std::vector<Word> enumerate_words(const SimpleGraph& g, int max_syllables, long exponent_bound) {
    std::vector<Word> out;
    enumerate_words(g, max_syllables, exponent_bound,
                    [&](const Word& w) { out.push_back(w); });
    return out;
}

} // namespace raagrep
