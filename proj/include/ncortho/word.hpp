#ifndef NCORTHO_WORD_HPP
#define NCORTHO_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ncortho/types.hpp"

namespace ncortho {

// Element of the free semigroup on generators 1..alphabet. The empty word is
// the identity. All order-dependent code in this project uses the graded
// lexicographic order: shorter words first, ties broken letter by letter.
class Word {
public:
  Word() : alphabet_(1) {}
  explicit Word(int alphabet) : alphabet_(alphabet) { validate(); }
  Word(int alphabet, std::vector<int> letters)
      : alphabet_(alphabet), letters_(std::move(letters)) {
    validate();
  }

  int alphabet() const { return alphabet_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const std::vector<int>& letters() const { return letters_; }
  int letter(int i) const { return letters_[static_cast<size_t>(i)]; }

  // Concatenation (juxtaposition in the semigroup).
  Word operator*(const Word& rhs) const;
  // Letters reversed; an anti-homomorphism of the semigroup.
  Word reversed() const;
  // First letter and remaining tail of a nonempty word.
  int head() const;
  Word tail() const;
  Word prepend(int letter) const;

  // True when *this is a prefix of w.
  bool is_prefix_of(const Word& w) const;
  // If w == (*this)*alpha returns alpha, otherwise nothing.
  bool quotient_left(const Word& w, Word* alpha) const;

  bool operator==(const Word& rhs) const {
    return alphabet_ == rhs.alphabet_ && letters_ == rhs.letters_;
  }

  // Graded-lex position within the full enumeration of words over the
  // alphabet: rank(empty) = 0, rank increases along successor steps.
  std::int64_t rank() const;

  std::string str() const;
  static Word parse(int alphabet, const std::string& text);

private:
  void validate() const;
  int alphabet_;
  std::vector<int> letters_;
};

// less / equal / greater in the graded lexicographic order.
std::strong_ordering word_compare(const Word& a, const Word& b);

// Comparator usable with ordered containers.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    return word_compare(a, b) == std::strong_ordering::less;
  }
};

Word successor(const Word& w);
// Throws invalid_input on the empty word, which has no predecessor.
Word predecessor(const Word& w);
Word involution(const Word& w);

// All words of length <= max_len in increasing graded-lex order.
std::vector<Word> enumerate_words(int alphabet, int max_len);
// Index set of the commutation relations: nondecreasing-letter words.
std::vector<Word> index_set_commuting(int alphabet, int max_len);
// Index set of the anticommutation relations: strictly increasing letters.
std::vector<Word> index_set_anticommuting(int alphabet);

// Number of words of length <= max_len over the alphabet.
std::int64_t word_count(int alphabet, int max_len);

}  // namespace ncortho

#endif
