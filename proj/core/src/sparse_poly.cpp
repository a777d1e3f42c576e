#include "mnrule/sparse_poly.hpp"

#include "mnrule/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace mnrule {

Monomial trim(Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool GradedLexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da > db;
  return a > b;
}

SparsePoly::SparsePoly(Integer constant) { terms_.add({}, constant); }

SparsePoly SparsePoly::monomial(Monomial exponents, Integer coeff) {
  for (int e : exponents) {
    if (e < 0) throw InvalidArgument("negative exponent");
  }
  SparsePoly p;
  p.terms_.add(trim(std::move(exponents)), coeff);
  return p;
}

SparsePoly SparsePoly::variable(int i) {
  if (i < 1) throw InvalidArgument("variables are indexed from 1");
  Monomial m(static_cast<std::size_t>(i), 0);
  m.back() = 1;
  return monomial(std::move(m));
}

void SparsePoly::add_term(const Monomial& m, const Integer& coeff) { terms_.add(trim(m), coeff); }

Integer SparsePoly::coefficient(const Monomial& m) const { return terms_.coefficient(trim(m)); }

int SparsePoly::num_variables() const {
  int n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, static_cast<int>(m.size()));
  return n;
}

int SparsePoly::total_degree() const { return terms_.empty() ? -1 : degree(terms_.begin()->first); }

bool SparsePoly::is_homogeneous() const {
  return terms_.empty() || degree(terms_.begin()->first) == degree(std::prev(terms_.end())->first);
}

std::map<int, SparsePoly> SparsePoly::homogeneous_components() const {
  std::map<int, SparsePoly> out;
  for (const auto& [m, c] : terms_) out[degree(m)].terms_.add(m, c);
  return out;
}

Monomial SparsePoly::max_exponents() const {
  Monomial out;
  for (const auto& [m, c] : terms_) {
    if (m.size() > out.size()) out.resize(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = std::max(out[i], m[i]);
  }
  return out;
}

SparsePoly SparsePoly::swap_variables(int i) const {
  SparsePoly out;
  const auto a = static_cast<std::size_t>(i - 1);
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    if (s.size() < a + 2) s.resize(a + 2, 0);
    std::swap(s[a], s[a + 1]);
    out.terms_.add(trim(std::move(s)), c);
  }
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  terms_ += o.terms_;
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  terms_ -= o.terms_;
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Integer& s) {
  terms_ *= s;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  Monomial prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod.assign(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) prod[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) prod[i] += mb[i];
      out.terms_.add(prod, ca * cb);
    }
  }
  return out;
}

SparsePoly pow(const SparsePoly& base, int exponent) {
  if (exponent < 0) throw InvalidArgument("negative power");
  SparsePoly out(1);
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

SparsePoly divided_difference(const SparsePoly& f, int i) {
  if (i < 1) throw InvalidArgument("divided difference index must be positive");
  const auto a_idx = static_cast<std::size_t>(i - 1);
  SparsePoly out;
  for (const auto& [m, c] : f.terms()) {
    const int a = a_idx < m.size() ? m[a_idx] : 0;
    const int b = a_idx + 1 < m.size() ? m[a_idx + 1] : 0;
    if (a == b) continue;
    Monomial t = m;
    if (t.size() < a_idx + 2) t.resize(a_idx + 2, 0);
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const Integer sign = a > b ? c : Integer(-c);
    // (x^a y^b - x^b y^a)/(x - y) = x^lo y^lo (x^(d) - y^(d))/(x - y), d = hi - lo.
    for (int j = 0; j < hi - lo; ++j) {
      t[a_idx] = lo + (hi - lo - 1 - j);
      t[a_idx + 1] = lo + j;
      out.add_term(t, sign);
    }
  }
  return out;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.empty()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (wrote) os << '*';
      os << 'x' << (v + 1);
      if (m[v] > 1) os << '^' << m[v];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  SparsePoly parse() {
    SparsePoly out;
    skip_ws();
    if (done()) fail("empty polynomial");
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = term();
      out.add_term(m, c * sign);
      skip_ws();
    }
    return out;
  }

 private:
  std::pair<Monomial, Integer> term() {
    Integer coeff = 1;
    Monomial m;
    bool any = false;
    for (;;) {
      skip_ws();
      if (done()) break;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= number();
      } else if (peek() == 'x') {
        ++pos_;
        const int var = static_cast<int>(number());
        if (var < 1) fail("variables are indexed from 1");
        int exp = 1;
        skip_ws();
        if (!done() && peek() == '^') {
          ++pos_;
          skip_ws();
          exp = static_cast<int>(number());
        }
        if (m.size() < static_cast<std::size_t>(var)) m.resize(static_cast<std::size_t>(var), 0);
        m[static_cast<std::size_t>(var - 1)] += exp;
      } else {
        fail("unexpected character");
      }
      any = true;
      skip_ws();
      if (!done() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("missing term");
    return {m, coeff};
  }

  Integer number() {
    skip_ws();
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const char* what) const {
    throw InvalidArgument(std::string("polynomial parse error at offset ") + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly SparsePoly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace mnrule
