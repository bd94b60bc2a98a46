#include "ncortho/word.hpp"

#include <algorithm>
#include <sstream>

namespace ncortho {

void Word::validate() const {
  if (alphabet_ < 1) throw invalid_input("Word: alphabet size must be >= 1");
  for (int c : letters_)
    if (c < 1 || c > alphabet_)
      throw invalid_input("Word: letter outside 1.." + std::to_string(alphabet_));
}

Word Word::operator*(const Word& rhs) const {
  if (alphabet_ != rhs.alphabet_) throw invalid_input("Word: alphabet mismatch");
  std::vector<int> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(alphabet_, std::move(out));
}

Word Word::reversed() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  return Word(alphabet_, std::move(out));
}

int Word::head() const {
  if (empty()) throw invalid_input("Word: empty word has no head");
  return letters_.front();
}

Word Word::tail() const {
  if (empty()) throw invalid_input("Word: empty word has no tail");
  return Word(alphabet_, std::vector<int>(letters_.begin() + 1, letters_.end()));
}

Word Word::prepend(int letter) const {
  std::vector<int> out;
  out.reserve(letters_.size() + 1);
  out.push_back(letter);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(alphabet_, std::move(out));
}

bool Word::is_prefix_of(const Word& w) const {
  if (alphabet_ != w.alphabet_ || length() > w.length()) return false;
  return std::equal(letters_.begin(), letters_.end(), w.letters_.begin());
}

bool Word::quotient_left(const Word& w, Word* alpha) const {
  if (!is_prefix_of(w)) return false;
  if (alpha)
    *alpha = Word(alphabet_,
                  std::vector<int>(w.letters_.begin() + length(), w.letters_.end()));
  return true;
}

std::int64_t Word::rank() const {
  // Words of a fixed length L are in bijection with base-N numerals over
  // digits 1..N; all shorter words precede them.
  std::int64_t below = word_count(alphabet_, length() - 1);
  std::int64_t within = 0;
  for (int c : letters_) within = within * alphabet_ + (c - 1);
  return below + within;
}

std::string Word::str() const {
  if (empty()) return "e";
  std::ostringstream os;
  if (alphabet_ <= 9) {
    for (int c : letters_) os << c;
  } else {
    for (size_t i = 0; i < letters_.size(); ++i) {
      if (i) os << ',';
      os << letters_[i];
    }
  }
  return os.str();
}

Word Word::parse(int alphabet, const std::string& text) {
  if (text == "e" || text.empty()) return Word(alphabet);
  std::vector<int> letters;
  if (alphabet <= 9) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw invalid_input("Word::parse: bad digit in '" + text + "'");
      letters.push_back(ch - '0');
    }
  } else {
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) letters.push_back(std::stoi(item));
  }
  return Word(alphabet, std::move(letters));
}

std::strong_ordering word_compare(const Word& a, const Word& b) {
  if (a.alphabet() != b.alphabet())
    throw invalid_input("word_compare: alphabet mismatch");
  if (a.length() != b.length()) return a.length() <=> b.length();
  return a.letters() <=> b.letters();
}

Word successor(const Word& w) {
  std::vector<int> out = w.letters();
  for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
    if (out[static_cast<size_t>(i)] < w.alphabet()) {
      ++out[static_cast<size_t>(i)];
      return Word(w.alphabet(), std::move(out));
    }
    out[static_cast<size_t>(i)] = 1;
  }
  // Rolled over the last word of this length: first word of the next one.
  out.assign(out.size() + 1, 1);
  return Word(w.alphabet(), std::move(out));
}

Word predecessor(const Word& w) {
  if (w.empty()) throw invalid_input("predecessor: the empty word has none");
  std::vector<int> out = w.letters();
  for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
    if (out[static_cast<size_t>(i)] > 1) {
      --out[static_cast<size_t>(i)];
      return Word(w.alphabet(), std::move(out));
    }
    out[static_cast<size_t>(i)] = w.alphabet();
  }
  // Was the all-ones word: predecessor is the last word one level down.
  out.assign(out.size() - 1, w.alphabet());
  return Word(w.alphabet(), std::move(out));
}

Word involution(const Word& w) { return w.reversed(); }

std::int64_t word_count(int alphabet, int max_len) {
  if (max_len < 0) return 0;
  if (alphabet == 1) return max_len + 1;
  std::int64_t total = 0, level = 1;
  for (int l = 0; l <= max_len; ++l) {
    total += level;
    level *= alphabet;
  }
  return total;
}

std::vector<Word> enumerate_words(int alphabet, int max_len) {
  if (alphabet < 1) throw invalid_input("enumerate_words: alphabet size must be >= 1");
  if (max_len < 0) throw invalid_input("enumerate_words: negative length bound");
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(word_count(alphabet, max_len)));
  Word w(alphabet);
  while (w.length() <= max_len) {
    out.push_back(w);
    w = successor(w);
  }
  return out;
}

std::vector<Word> index_set_commuting(int alphabet, int max_len) {
  std::vector<Word> out;
  for (const Word& w : enumerate_words(alphabet, max_len))
    if (std::is_sorted(w.letters().begin(), w.letters().end())) out.push_back(w);
  return out;
}

std::vector<Word> index_set_anticommuting(int alphabet) {
  std::vector<Word> out;
  for (const Word& w : enumerate_words(alphabet, alphabet)) {
    bool strict = true;
    for (int i = 0; i + 1 < w.length(); ++i)
      if (w.letter(i) >= w.letter(i + 1)) {
        strict = false;
        break;
      }
    if (strict) out.push_back(w);
  }
  return out;
}

}  // namespace ncortho
