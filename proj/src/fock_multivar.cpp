#include "ncortho/fock_multivar.hpp"

#include <algorithm>

namespace ncortho {

GammaParamsCT::GammaParamsCT(int alphabet, int max_len, double s_empty)
    : alphabet_(alphabet), max_len_(max_len), s_empty_(s_empty),
      words_(enumerate_words(alphabet, max_len)) {
  if (max_len < 1) throw invalid_input("GammaParamsCT: max_len must be >= 1");
  if (!(s_empty > 0.0)) throw invalid_input("GammaParamsCT: s_empty must be positive");
  gamma_.assign(words_.size(), cx(0.0, 0.0));
}

cx GammaParamsCT::gamma(const Word& sigma) const {
  if (sigma.empty() || sigma.length() > max_len_ || sigma.alphabet() != alphabet_)
    throw invalid_input("GammaParamsCT: word out of range");
  return gamma_[static_cast<size_t>(sigma.rank())];
}

void GammaParamsCT::set_gamma(const Word& sigma, cx value) {
  if (sigma.empty() || sigma.length() > max_len_ || sigma.alphabet() != alphabet_)
    throw invalid_input("GammaParamsCT: word out of range");
  require_strict_contraction(value, "GammaParamsCT");
  gamma_[static_cast<size_t>(sigma.rank())] = value;
}

cx CTKernel::at(const Word& sigma, const Word& tau) const {
  auto it = entries_.find({sigma.rank(), tau.rank()});
  return it == entries_.end() ? cx(0.0, 0.0) : it->second;
}

void CTKernel::set(const Word& sigma, const Word& tau, cx value) {
  entries_[{sigma.rank(), tau.rank()}] = value;
}

Matrix CTKernel::dense() const {
  const std::vector<Word> words = enumerate_words(alphabet_, max_len_);
  const int n = static_cast<int>(words.size());
  Matrix out = Matrix::Zero(n, n);
  for (const auto& [key, value] : entries_)
    out(static_cast<Eigen::Index>(key.first), static_cast<Eigen::Index>(key.second)) =
        value;
  return out;
}

GammaParams1D induced_params(const GammaParamsCT& p) {
  const std::vector<Word>& words = p.words();
  const int horizon = static_cast<int>(words.size()) - 1;
  GammaParams1D out(horizon);
  for (int u = 0; u <= horizon; ++u) {
    out.set_diag(u, p.s_empty());
    Word alpha(p.alphabet());
    for (int v = u + 1; v <= horizon; ++v)
      if (words[static_cast<size_t>(u)].quotient_left(words[static_cast<size_t>(v)], &alpha))
        out.set_gamma(u, v, p.gamma(alpha));
  }
  return out;
}

CTKernel ct_kernel_from_gamma(const GammaParamsCT& p) {
  const MomentKernel1D dense = moments_from_params(induced_params(p));
  const std::vector<Word>& words = p.words();
  CTKernel kernel(p.alphabet(), p.max_len());
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = 0; j < words.size(); ++j) {
      const Word &si = words[i], &sj = words[j];
      if (si.is_prefix_of(sj) || sj.is_prefix_of(si))
        kernel.set(si, sj, dense(static_cast<int>(i), static_cast<int>(j)));
    }
  return kernel;
}

WordPolyFamily ct_ortho_recurrence(const GammaParamsCT& p) {
  WordPolyFamily fam;
  const int alphabet = p.alphabet();
  const Word empty(alphabet);
  const cx norm0(1.0 / std::sqrt(p.s_empty()), 0.0);
  fam.phi.emplace(empty, NCPoly(alphabet, empty, norm0));
  fam.phisharp.emplace(empty, NCPoly(alphabet, empty, norm0));
  for (const Word& w : p.words()) {
    if (w.empty()) continue;
    const int k = w.head();
    const Word sigma = w.tail();
    const Word prev = predecessor(w);
    const cx g = p.gamma(w);
    const double d = p.d(w);
    const NCPoly x_phi = mul_generator_left(k, fam.phi.at(sigma));
    const NCPoly& sharp_prev = fam.phisharp.at(prev);
    fam.phi.emplace(w, (x_phi - g * sharp_prev) * cx(1.0 / d, 0.0));
    fam.phisharp.emplace(w, (std::conj(g) * cx(-1.0, 0.0) * x_phi + sharp_prev) *
                                cx(1.0 / d, 0.0));
  }
  return fam;
}

Matrix kolmogorov_W(const GammaParams1D& p, int k, int size) {
  if (k < 0 || k > p.horizon()) throw invalid_input("kolmogorov_W: bad index");
  if (size < 2) throw invalid_input("kolmogorov_W: truncation too small");
  for (int j = 0; j <= p.horizon(); ++j)
    if (std::abs(p.diag(j) - 1.0) > 1e-12)
      throw invalid_input("kolmogorov_W: kernel diagonal must be 1");
  Matrix w = Matrix::Identity(size, size);
  // Product of embedded Julia steps, leftmost factor applied last.
  for (int m = std::min(p.horizon(), k + size - 1); m >= k + 1; --m) {
    Matrix factor = Matrix::Identity(size, size);
    factor.block(m - k - 1, m - k - 1, 2, 2) = julia(p.gamma(k, m));
    w = factor * w;
  }
  return w;
}

std::vector<Vector> kolmogorov_V(const GammaParams1D& p, int count) {
  const int size = p.horizon() + 1;
  if (count < 1 || count > size) throw invalid_input("kolmogorov_V: bad count");
  std::vector<Vector> v;
  v.reserve(static_cast<size_t>(count));
  Vector current = Vector::Zero(size);
  current(0) = cx(1.0, 0.0);
  v.push_back(current);
  for (int k = 1; k < count; ++k) {
    // V(k) = W_0 W_1 ... W_{k-1} e_0; extend the product one factor at a
    // time from the right.
    current = Vector::Zero(size);
    current(0) = cx(1.0, 0.0);
    for (int m = k - 1; m >= 0; --m) current = kolmogorov_W(p, m, size) * current;
    v.push_back(current);
  }
  return v;
}

std::vector<Matrix> cuntz_isometries(const GammaParamsCT& p) {
  if (std::abs(p.s_empty() - 1.0) > 1e-12)
    throw invalid_input("cuntz_isometries: kernel must be normalized, s_empty = 1");
  const GammaParams1D chain = induced_params(p);
  const std::vector<Word>& words = p.words();
  const int rows = static_cast<int>(words.size());
  const Matrix w0 = kolmogorov_W(chain, 0, rows);
  const std::vector<Word> columns = enumerate_words(p.alphabet(), p.max_len() - 1);
  std::vector<Matrix> u;
  for (int k = 1; k <= p.alphabet(); ++k) {
    Matrix uk = Matrix::Zero(rows, static_cast<int>(columns.size()));
    for (size_t t = 0; t < columns.size(); ++t) {
      const Word target = columns[t].prepend(k);
      // Column c_sigma(W_0) sits at index rank(sigma) - 1 of W_0.
      uk.col(static_cast<Eigen::Index>(t)) = w0.col(target.rank() - 1);
    }
    u.push_back(std::move(uk));
  }
  return u;
}

double cuntz_condition(const GammaParamsCT& p) {
  double prod = 1.0;
  for (const Word& w : p.words())
    if (!w.empty()) prod *= p.d(w);
  return prod;
}

std::vector<OperatorPoint> matrix_unit_tuples(const Word& sigma, int dim_factor) {
  if (sigma.empty()) throw invalid_input("matrix_unit_tuples: sigma must be nonempty");
  if (dim_factor < 1) throw invalid_input("matrix_unit_tuples: dim_factor must be >= 1");
  const int k = sigma.length();
  const int blocks = 2 * k;
  const int dim = blocks * dim_factor;
  const int n_vars = sigma.alphabet();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // E_{i,j} acts as the matrix unit e_{ij} tensored with the identity on the
  // dim_factor-dimensional block; indices are 1-based as in the display.
  auto add_unit = [&](Matrix& m, int i, int j) {
    for (int t = 0; t < dim_factor; ++t)
      m((i - 1) * dim_factor + t, (j - 1) * dim_factor + t) += cx(inv_sqrt2, 0.0);
  };
  std::vector<OperatorPoint> tuples;
  tuples.reserve(static_cast<size_t>(blocks));
  for (int p = 1; p <= k; ++p) {
    std::vector<Matrix> tuple;
    for (int s = 1; s <= n_vars; ++s) {
      Matrix adj = Matrix::Zero(dim, dim);  // Z^{*p}_s
      for (int l = 1; l <= k; ++l)
        if (sigma.letter(k - l) == s) add_unit(adj, l + p - 1, l + p);
      tuple.push_back(adj.adjoint());
    }
    tuples.emplace_back(std::move(tuple));
  }
  for (int p_prime = 1; p_prime <= k; ++p_prime) {
    std::vector<Matrix> tuple;
    for (int s = 1; s <= n_vars; ++s) {
      Matrix adj = Matrix::Zero(dim, dim);
      for (int l = 1; l <= k; ++l)
        if (sigma.letter(l - 1) == s) add_unit(adj, l + p_prime, l + p_prime - 1);
      tuple.push_back(adj.adjoint());
    }
    tuples.emplace_back(std::move(tuple));
  }
  return tuples;
}

}  // namespace ncortho
