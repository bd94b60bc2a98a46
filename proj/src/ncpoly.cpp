#include "ncortho/ncpoly.hpp"

#include <cmath>

namespace ncortho {

namespace {
constexpr double kDropThreshold = 0.0;  // exact zeros only
}

const Word& NCPoly::leading_word() const {
  if (coeffs_.empty()) throw invalid_input("NCPoly: zero polynomial has no leading word");
  return coeffs_.rbegin()->first;
}

cx NCPoly::leading_coeff() const {
  if (coeffs_.empty()) throw invalid_input("NCPoly: zero polynomial has no leading coeff");
  return coeffs_.rbegin()->second;
}

void NCPoly::add(const Word& w, cx c) {
  if (w.alphabet() != alphabet_) throw invalid_input("NCPoly: alphabet mismatch");
  auto [it, inserted] = coeffs_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (std::abs(it->second) <= kDropThreshold) coeffs_.erase(it);
  } else if (std::abs(c) <= kDropThreshold) {
    coeffs_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.coeffs_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.coeffs_) add(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(cx scale) {
  if (scale == cx(0.0, 0.0)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [w, c] : coeffs_) c *= scale;
  return *this;
}

double NCPoly::distance(const NCPoly& a, const NCPoly& b) {
  double out = 0.0;
  for (const auto& [w, c] : a.coeffs_) out = std::max(out, std::abs(c - b.coeff(w)));
  for (const auto& [w, c] : b.coeffs_) out = std::max(out, std::abs(c - a.coeff(w)));
  return out;
}

NCPoly mul_generator_left(int k, const NCPoly& p) {
  NCPoly out(p.alphabet());
  for (const auto& [w, c] : p.coeffs()) out.add(w.prepend(k), c);
  return out;
}

}  // namespace ncortho
