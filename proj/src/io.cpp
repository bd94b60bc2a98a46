#include "ncortho/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ncortho::io {

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_complex(const cx& z) {
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::string out = format_double(re);
  out += im < 0.0 ? "-" : "+";
  out += format_double(std::abs(im));
  out += "i";
  return out;
}

cx parse_complex(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '"') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw invalid_input("parse_complex: empty cell");
  if (s.back() != 'i') {
    // Plain real number.
    size_t pos = 0;
    const double re = std::stod(s, &pos);
    if (pos != s.size()) throw invalid_input("parse_complex: bad number '" + text + "'");
    return cx(re, 0.0);
  }
  s.pop_back();
  // Split at the last '+' or '-' that is not an exponent sign.
  size_t split = std::string::npos;
  for (size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos)
    throw invalid_input("parse_complex: missing real part in '" + text + "'");
  const double re = std::stod(s.substr(0, split));
  const double im = std::stod(s.substr(split));
  return cx(re, im);
}

namespace {

std::string csv_cell(const cx& z) {
  std::string body = format_complex(z);
  if (body.find('+') != std::string::npos) return "\"" + body + "\"";
  return body;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

void write_matrix_csv(std::ostream& os, const Matrix& matrix) {
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (j) os << ',';
      os << csv_cell(matrix(i, j));
    }
    os << '\n';
  }
}

void write_moment_csv(std::ostream& os, const MomentKernel1D& kernel) {
  write_matrix_csv(os, kernel.matrix());
}

MomentKernel1D read_moment_csv(std::istream& is) {
  std::vector<std::vector<cx>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<cx> row;
    for (const std::string& cell : split_csv_line(line)) row.push_back(parse_complex(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw invalid_input("read_moment_csv: no data rows");
  const size_t n = rows.size();
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw invalid_input("read_moment_csv: ragged rows");
    for (size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return MomentKernel1D(std::move(m));
}

json gamma_params_to_json(const GammaParams1D& p) {
  json j;
  j["diag"] = p.diag();
  json gammas = json::array();
  for (int k = 0; k < p.horizon(); ++k)
    for (int m = k + 1; m <= p.horizon(); ++m) {
      const cx g = p.gamma(k, m);
      if (g != cx(0.0, 0.0))
        gammas.push_back({{"k", k}, {"j", m}, {"re", g.real()}, {"im", g.imag()}});
    }
  j["gamma"] = std::move(gammas);
  return j;
}

GammaParams1D gamma_params_from_json(const json& j) {
  const std::vector<double> diag = j.at("diag").get<std::vector<double>>();
  if (diag.empty()) throw invalid_input("gamma_params_from_json: empty diagonal");
  GammaParams1D p(static_cast<int>(diag.size()) - 1);
  for (size_t k = 0; k < diag.size(); ++k) p.set_diag(static_cast<int>(k), diag[k]);
  for (const json& entry : j.at("gamma"))
    p.set_gamma(entry.at("k").get<int>(), entry.at("j").get<int>(),
                cx(entry.at("re").get<double>(), entry.at("im").get<double>()));
  return p;
}

json gamma_ct_to_json(const GammaParamsCT& p) {
  json j;
  j["N"] = p.alphabet();
  j["max_len"] = p.max_len();
  j["s_empty"] = p.s_empty();
  json gammas = json::array();
  for (const Word& w : p.words()) {
    if (w.empty()) continue;
    const cx g = p.gamma(w);
    if (g != cx(0.0, 0.0))
      gammas.push_back({{"sigma", w.str()}, {"re", g.real()}, {"im", g.imag()}});
  }
  j["gamma"] = std::move(gammas);
  return j;
}

GammaParamsCT gamma_ct_from_json(const json& j) {
  GammaParamsCT p(j.at("N").get<int>(), j.at("max_len").get<int>(),
                  j.value("s_empty", 1.0));
  for (const json& entry : j.at("gamma"))
    p.set_gamma(Word::parse(p.alphabet(), entry.at("sigma").get<std::string>()),
                cx(entry.at("re").get<double>(), entry.at("im").get<double>()));
  return p;
}

json ct_kernel_to_json(const CTKernel& kernel) {
  json out = json::array();
  for (const Word& sigma : enumerate_words(kernel.alphabet(), kernel.max_len()))
    for (const Word& tau : enumerate_words(kernel.alphabet(), kernel.max_len())) {
      const cx v = kernel.at(sigma, tau);
      if (v != cx(0.0, 0.0))
        out.push_back({{"sigma", sigma.str()},
                       {"tau", tau.str()},
                       {"re", v.real()},
                       {"im", v.imag()}});
    }
  return out;
}

json poly_family_to_json(const PolyFamily1D& fam) {
  json out = json::array();
  for (int n = 0; n <= fam.n_max(); ++n)
    for (int l = 0; n + l <= fam.total(); ++l) {
      if (!fam.has_phi(n, l)) continue;
      json coeffs = json::array();
      const Vector& v = fam.phi(n, l);
      for (int i = 0; i < v.size(); ++i) coeffs.push_back(format_complex(v(i)));
      out.push_back({{"n", n}, {"l", l}, {"coeffs", std::move(coeffs)}});
    }
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(format_complex(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  const size_t rows = j.size();
  if (rows == 0) throw invalid_input("matrix_from_json: empty matrix");
  const size_t cols = j.at(0).size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw invalid_input("matrix_from_json: ragged rows");
    for (size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          parse_complex(j.at(i).at(c).get<std::string>());
  }
  return m;
}

json operator_point_to_json(const OperatorPoint& z) {
  json out = json::array();
  for (int k = 0; k < z.variables(); ++k) out.push_back(matrix_to_json(z.component(k)));
  return out;
}

OperatorPoint operator_point_from_json(const json& j) {
  std::vector<Matrix> z;
  for (const json& m : j) z.push_back(matrix_from_json(m));
  return OperatorPoint(std::move(z));
}

json jacobi_to_json(const JacobiFamily& fam) {
  json levels = json::array();
  for (int n = 0; n < fam.depth(); ++n) {
    json a = json::array(), b = json::array();
    for (int k = 1; k <= fam.alphabet(); ++k) {
      a.push_back(matrix_to_json(fam.A(n, k)));
      b.push_back(matrix_to_json(fam.B(n, k)));
    }
    levels.push_back({{"A", std::move(a)}, {"B", std::move(b)}});
  }
  return json{{"N", fam.alphabet()}, {"levels", std::move(levels)}};
}

JacobiFamily jacobi_from_json(const json& j) {
  const int alphabet = j.at("N").get<int>();
  const json& levels = j.at("levels");
  JacobiFamily fam(alphabet, static_cast<int>(levels.size()));
  for (size_t n = 0; n < levels.size(); ++n)
    for (int k = 1; k <= alphabet; ++k) {
      fam.set_A(static_cast<int>(n), k,
                matrix_from_json(levels.at(n).at("A").at(static_cast<size_t>(k - 1))));
      fam.set_B(static_cast<int>(n), k,
                matrix_from_json(levels.at(n).at("B").at(static_cast<size_t>(k - 1))));
    }
  return fam;
}

json moments_to_json(const HermitianMoments& m) {
  json out = json::array();
  for (const Word& w : enumerate_words(m.alphabet(), 2 * m.max_len()))
    out.push_back({{"word", w.str()}, {"value", format_complex(m.at(w))}});
  return out;
}

json load_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw invalid_input("cannot open '" + path + "'");
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw invalid_input("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

void save_json(const std::string& path, const json& j) {
  std::ofstream os(path);
  if (!os) throw invalid_input("cannot write '" + path + "'");
  os << j.dump(2) << '\n';
}

std::string load_text(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw invalid_input("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw invalid_input("cannot write '" + path + "'");
  os << text;
}

}  // namespace ncortho::io
