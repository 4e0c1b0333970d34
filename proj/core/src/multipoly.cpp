#include "polyb/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace polyb {

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Pascal rows 0..max_row, built once per shift call.
std::vector<std::vector<Integer>> pascal_rows(unsigned max_row) {
  std::vector<std::vector<Integer>> rows(max_row + 1);
  for (unsigned n = 0; n <= max_row; ++n) {
    rows[n].resize(n + 1);
    rows[n][0] = rows[n][n] = 1;
    for (unsigned k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

}  // namespace

MultiPoly MultiPoly::constant(const Integer& c) { return monomial(c, {}); }

MultiPoly MultiPoly::monomial(const Integer& c, Exponent e) {
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::x() { return monomial(1, {1, 0, 0}); }
MultiPoly MultiPoly::y() { return monomial(1, {0, 1, 0}); }
MultiPoly MultiPoly::z() { return monomial(1, {0, 0, 1}); }

Integer MultiPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MultiPoly::add_term(Exponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total());
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      r.add_term({ea.x + eb.x, ea.y + eb.y, ea.z + eb.z}, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return mp_mul(a, b); }

MultiPoly mp_shift_z(const MultiPoly& a) {
  unsigned max_z = 0;
  for (const auto& [e, c] : a.terms()) max_z = std::max(max_z, e.z);
  const auto rows = pascal_rows(max_z);
  MultiPoly r;
  for (const auto& [e, c] : a.terms()) {
    // z^n -> sum_k C(n, k) z^k
    for (unsigned k = 0; k <= e.z; ++k) r.add_term({e.x, e.y, k}, c * rows[e.z][k]);
  }
  return r;
}

Integer mp_eval(const MultiPoly& a, const Integer& x, const Integer& y, const Integer& z) {
  Integer total = 0;
  Integer px, py, pz;
  for (const auto& [e, c] : a.terms()) {
    mpz_pow_ui(px.get_mpz_t(), x.get_mpz_t(), e.x);
    mpz_pow_ui(py.get_mpz_t(), y.get_mpz_t(), e.y);
    mpz_pow_ui(pz.get_mpz_t(), z.get_mpz_t(), e.z);
    total += c * px * py * pz;
  }
  return total;
}

MultiPoly mp_permute(const MultiPoly& a, const std::array<int, 3>& perm) {
  MultiPoly r;
  for (const auto& [e, c] : a.terms()) {
    const std::array<unsigned, 3> in{e.x, e.y, e.z};
    std::array<unsigned, 3> out{};
    for (int i = 0; i < 3; ++i) out[perm[i]] = in[i];
    r.add_term({out[0], out[1], out[2]}, c);
  }
  return r;
}

bool mp_divisible_by_monomial(const MultiPoly& a, Exponent d) {
  return std::all_of(a.terms().begin(), a.terms().end(), [&](const auto& term) {
    const Exponent& e = term.first;
    return e.x >= d.x && e.y >= d.y && e.z >= d.z;
  });
}

MultiPoly mp_divide_monomial(const MultiPoly& a, Exponent d) {
  if (!mp_divisible_by_monomial(a, d)) throw DomainError("polynomial is not divisible by monomial");
  MultiPoly r;
  for (const auto& [e, c] : a.terms()) r.add_term({e.x - d.x, e.y - d.y, e.z - d.z}, c);
  return r;
}

std::string to_term_lines(const MultiPoly& a) {
  std::ostringstream out;
  for (const auto& [e, c] : a.terms()) {
    out << c.get_str() << ' ' << e.x << ' ' << e.y << ' ' << e.z << '\n';
  }
  return out.str();
}

MultiPoly parse_term_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  MultiPoly r;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string coeff;
    Exponent e;
    std::string extra;
    if (!(fields >> coeff >> e.x >> e.y >> e.z) || (fields >> extra)) {
      throw DomainError("malformed term line " + std::to_string(line_no) + ": " + line);
    }
    Integer c;
    if (c.set_str(coeff, 10) != 0) {
      throw DomainError("malformed coefficient on line " + std::to_string(line_no));
    }
    r.add_term(e, c);
  }
  return r;
}

namespace {

void append_power(std::string& s, char var, unsigned power) {
  if (power == 0) return;
  if (!s.empty() && s.back() != '-') s += '*';
  s += var;
  if (power > 1) s += '^' + std::to_string(power);
}

}  // namespace

std::string to_display_string(const MultiPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  // Highest degree first reads more naturally.
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string term;
    if (mag != 1 || e.total() == 0) term = mag.get_str();
    append_power(term, 'x', e.x);
    append_power(term, 'y', e.y);
    append_power(term, 'z', e.z);
    out += term;
  }
  return out;
}

UniPoly::UniPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer UniPoly::eval(const Integer& z) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

UniPoly UniPoly::shifted() const {
  std::vector<Integer> out(coeffs_.size());
  for (unsigned n = 0; n < coeffs_.size(); ++n) {
    for (unsigned k = 0; k <= n; ++k) out[k] += coeffs_[n] * binomial(n, k);
  }
  return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly specialize_xy_one(const MultiPoly& a) {
  std::vector<Integer> out;
  for (const auto& [e, c] : a.terms()) {
    if (out.size() <= e.z) out.resize(e.z + 1);
    out[e.z] += c;
  }
  return UniPoly(std::move(out));
}

std::string to_display_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string term;
    if (mag != 1 || i == 0) term = mag.get_str();
    append_power(term, 'z', static_cast<unsigned>(i));
    out += term;
  }
  return out;
}

}  // namespace polyb
