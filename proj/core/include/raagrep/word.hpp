#pragma once

#include "raagrep/graph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace raagrep {

struct Syllable {
    int vertex;
    long exponent; // nonzero

    bool operator==(const Syllable& o) const {
        return vertex == o.vertex && exponent == o.exponent;
    }
};

/// A word in the generators s_v with integer exponents.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Syllable> syllables);

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool empty() const { return syl_.empty(); }
    std::size_t size() const { return syl_.size(); }
    long letter_length() const; // sum of |exponent|

    Word inverse() const;
    Word concat(const Word& o) const;

    bool operator==(const Word& o) const { return syl_ == o.syl_; }

    /// "s0 s1^-2 s4^3" token format.
    std::string str() const;
    static Word parse(const std::string& text);

  private:
    std::vector<Syllable> syl_;
};

/// Shuffle reduction: repeatedly merge a syllable pair on the same vertex
/// whenever every intervening syllable's vertex is adjacent to it, always
/// taking the leftmost mergeable pair. The result has minimal syllable
/// length and is empty iff the word represents the identity.
Word word_reduce(const Word& w, const SimpleGraph& g);

bool word_is_trivial(const Word& w, const SimpleGraph& g);

/// True when appending a syllable on `vertex` keeps a canonical reduced
/// spelling: scanning left through syllables adjacent to it we meet neither
/// the same vertex (mergeable) nor a commuting larger vertex (descent).
bool word_extends_canonically(const std::vector<Syllable>& prefix, int vertex,
                              const SimpleGraph& g);

/// Visit every reduced nonempty word with at most max_syllables syllables and
/// exponents bounded by exponent_bound in absolute value. Words are emitted
/// as canonical reduced spellings (commuting-descent pruned); distinct
/// spellings of one group element may still both appear.
void enumerate_words(const SimpleGraph& g, int max_syllables, long exponent_bound,
                     const std::function<void(const Word&)>& visit);

/// Convenience collector for small enumerations.
std::vector<Word> enumerate_words(const SimpleGraph& g, int max_syllables, long exponent_bound);

} // namespace raagrep
