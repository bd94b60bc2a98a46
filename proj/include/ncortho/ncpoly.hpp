#ifndef NCORTHO_NCPOLY_HPP
#define NCORTHO_NCPOLY_HPP

#include <map>

#include "ncortho/types.hpp"
#include "ncortho/word.hpp"

namespace ncortho {

// Element of the free algebra: finitely many words with complex coefficients.
class NCPoly {
public:
  explicit NCPoly(int alphabet) : alphabet_(alphabet) {}
  NCPoly(int alphabet, const Word& w, cx c) : alphabet_(alphabet) { add(w, c); }

  int alphabet() const { return alphabet_; }
  const std::map<Word, cx, WordOrder>& coeffs() const { return coeffs_; }
  bool zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first.length(); }
  // Largest word of the support in graded-lex order.
  const Word& leading_word() const;
  cx leading_coeff() const;

  cx coeff(const Word& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? cx(0.0, 0.0) : it->second;
  }

  void add(const Word& w, cx c);

  NCPoly& operator+=(const NCPoly& rhs);
  NCPoly& operator-=(const NCPoly& rhs);
  NCPoly& operator*=(cx scale);
  friend NCPoly operator+(NCPoly lhs, const NCPoly& rhs) { return lhs += rhs; }
  friend NCPoly operator-(NCPoly lhs, const NCPoly& rhs) { return lhs -= rhs; }
  friend NCPoly operator*(NCPoly lhs, cx scale) { return lhs *= scale; }
  friend NCPoly operator*(cx scale, NCPoly rhs) { return rhs *= scale; }

  // Distance in the max norm over the union of supports.
  static double distance(const NCPoly& a, const NCPoly& b);

private:
  int alphabet_;
  std::map<Word, cx, WordOrder> coeffs_;
};

// Left multiplication by the generator X_k.
NCPoly mul_generator_left(int k, const NCPoly& p);

}  // namespace ncortho

#endif
