#include <doctest.h>

#include "ncortho/word.hpp"

using namespace ncortho;

namespace {
Word w(int alphabet, std::initializer_list<int> letters) {
  return Word(alphabet, std::vector<int>(letters));
}
}  // namespace

TEST_CASE("graded-lex comparison") {
  CHECK(word_compare(Word(2), Word(2)) == std::strong_ordering::equal);
  CHECK(word_compare(w(2, {2}), w(2, {1, 1})) == std::strong_ordering::less);
  CHECK(word_compare(w(2, {1, 2}), w(2, {2, 1})) == std::strong_ordering::less);
  CHECK_THROWS_AS(word_compare(Word(2), Word(3)), invalid_input);
}

TEST_CASE("successor and predecessor") {
  CHECK(successor(Word(2)) == w(2, {1}));
  CHECK(successor(w(2, {2, 2})) == w(2, {1, 1, 1}));
  CHECK(predecessor(w(2, {2, 1})) == w(2, {1, 2}));
  CHECK_THROWS_AS(predecessor(Word(2)), invalid_input);
}

TEST_CASE("successor/predecessor agree with enumeration order") {
  for (int alphabet = 1; alphabet <= 3; ++alphabet) {
    const std::vector<Word> words = enumerate_words(alphabet, 5);
    for (size_t i = 0; i + 1 < words.size(); ++i) {
      CHECK(successor(words[i]) == words[i + 1]);
      CHECK(predecessor(words[i + 1]) == words[i]);
      CHECK(word_compare(words[i], words[i + 1]) == std::strong_ordering::less);
      CHECK(words[i].rank() == static_cast<std::int64_t>(i));
    }
  }
}

TEST_CASE("involution") {
  CHECK(involution(Word(2)) == Word(2));
  CHECK(involution(w(2, {1, 2})) == w(2, {2, 1}));
  CHECK(involution(w(2, {1, 1, 2})) == w(2, {2, 1, 1}));
}

TEST_CASE("involution is an anti-homomorphism") {
  const std::vector<Word> words = enumerate_words(2, 3);
  for (const Word& a : words)
    for (const Word& b : words) {
      if (a.length() + b.length() > 6) continue;
      CHECK(involution(a * b) == involution(b) * involution(a));
    }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_words(1, 3) ==
        std::vector<Word>{Word(1), w(1, {1}), w(1, {1, 1}), w(1, {1, 1, 1})});
  CHECK(enumerate_words(2, 2) == std::vector<Word>{Word(2), w(2, {1}), w(2, {2}),
                                                   w(2, {1, 1}), w(2, {1, 2}),
                                                   w(2, {2, 1}), w(2, {2, 2})});
  CHECK(enumerate_words(3, 1) ==
        std::vector<Word>{Word(3), w(3, {1}), w(3, {2}), w(3, {3})});
  CHECK(word_count(3, 4) == static_cast<std::int64_t>(enumerate_words(3, 4).size()));
}

TEST_CASE("index sets") {
  CHECK(index_set_commuting(2, 2) == std::vector<Word>{Word(2), w(2, {1}), w(2, {2}),
                                                       w(2, {1, 1}), w(2, {1, 2}),
                                                       w(2, {2, 2})});
  CHECK(index_set_anticommuting(2) ==
        std::vector<Word>{Word(2), w(2, {1}), w(2, {2}), w(2, {1, 2})});
  CHECK(index_set_anticommuting(1) == std::vector<Word>{Word(1), w(1, {1})});
  for (int alphabet = 1; alphabet <= 4; ++alphabet)
    CHECK(index_set_anticommuting(alphabet).size() == (1u << alphabet));
}

TEST_CASE("text round trip") {
  CHECK(Word(2).str() == "e");
  CHECK(w(2, {1, 2}).str() == "12");
  CHECK(Word::parse(2, "12") == w(2, {1, 2}));
  CHECK(Word::parse(2, "e") == Word(2));
  CHECK(w(12, {1, 11}).str() == "1,11");
  CHECK(Word::parse(12, "1,11") == w(12, {1, 11}));
  CHECK_THROWS_AS(Word::parse(2, "13"), invalid_input);
}

TEST_CASE("prefix quotient") {
  Word alpha(2);
  CHECK(w(2, {1}).quotient_left(w(2, {1, 2, 2}), &alpha));
  CHECK(alpha == w(2, {2, 2}));
  CHECK_FALSE(w(2, {2}).quotient_left(w(2, {1, 2}), &alpha));
}
