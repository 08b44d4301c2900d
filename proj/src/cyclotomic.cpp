#include "ufo7/cyclotomic.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ufo7 {

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  for (size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  for (size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc r;
  for (size_t i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  // convolve to degree 6, then reduce with z^4 = z^2 - 1, z^5 = z^3 - z,
  // z^6 = -1
  std::array<Rat, 7> t{};
  for (size_t i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < 4; ++j) {
      if (o.c_[j] == 0) continue;
      t[i + j] += c_[i] * o.c_[j];
    }
  }
  c_[0] = t[0] - t[4] - t[6];
  c_[1] = t[1] - t[5];
  c_[2] = t[2] + t[4];
  c_[3] = t[3] + t[5];
  return *this;
}

const Cyc& Cyc::zeta(int k) {
  static const std::array<Cyc, 12> powers = [] {
    std::array<Cyc, 12> p;
    p[0] = Cyc(1);
    Cyc z(Rat(0), Rat(1), Rat(0), Rat(0));
    for (int i = 1; i < 12; ++i) p[static_cast<size_t>(i)] = p[static_cast<size_t>(i - 1)] * z;
    return p;
  }();
  int m = k % 12;
  if (m < 0) m += 12;
  return powers[static_cast<size_t>(m)];
}

Cyc Cyc::inv() const {
  if (is_zero()) throw std::domain_error("Cyc::inv: division by zero");
  // Solve (mult-by-a) x = e0 by Gaussian elimination on the 4x4 matrix whose
  // columns are a*z^k in the power basis.
  std::array<std::array<Rat, 5>, 4> m;
  Cyc col = *this;
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coord(i);
    col *= zeta(1);
  }
  for (int i = 0; i < 4; ++i) m[static_cast<size_t>(i)][4] = (i == 0) ? 1 : 0;

  for (size_t col_i = 0; col_i < 4; ++col_i) {
    size_t piv = col_i;
    while (piv < 4 && m[piv][col_i] == 0) ++piv;
    // a != 0 in a field, so the matrix is invertible
    std::swap(m[col_i], m[piv]);
    Rat pv = m[col_i][col_i];
    for (auto& x : m[col_i]) x /= pv;
    for (size_t r = 0; r < 4; ++r) {
      if (r == col_i || m[r][col_i] == 0) continue;
      Rat f = m[r][col_i];
      for (size_t j = 0; j < 5; ++j) m[r][j] -= f * m[col_i][j];
    }
  }
  return Cyc(m[0][4], m[1][4], m[2][4], m[3][4]);
}

Cyc Cyc::pow(long n) const {
  Cyc base = *this;
  if (n < 0) {
    base = base.inv();
    n = -n;
  }
  Cyc r(1);
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

std::optional<int> Cyc::root_of_unity_order() const {
  for (int k = 0; k < 12; ++k) {
    if (*this == zeta(k)) return 12 / std::gcd(k, 12);
  }
  return std::nullopt;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const Rat& c = c_[static_cast<size_t>(k)];
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) return "0";
  return os.str();
}

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw CycParseError(msg, pos); }

  mpz_class parse_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digit");
    return mpz_class(std::string(s.substr(start, pos - start)), 10);
  }

  // zpart := "z" ("^" uint)?
  int parse_zpower() {
    ++pos; // 'z'
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      if (pos < s.size() && s[pos] == '^') fail("unexpected '^'");
      mpz_class e = parse_uint();
      return static_cast<int>(mpz_fdiv_ui(e.get_mpz_t(), 12));
    }
    return 1;
  }

  // term := rat ("*"? zpart)? | zpart  (sign already consumed by caller)
  Cyc parse_term() {
    skip_ws();
    if (pos < s.size() && s[pos] == 'z') {
      return Cyc::zeta(parse_zpower());
    }
    mpz_class num = parse_uint();
    mpz_class den = 1;
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      den = parse_uint();
      if (den == 0) fail("zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    skip_ws();
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'z')) {
      if (s[pos] == '*') ++pos;
      skip_ws();
      if (pos >= s.size() || s[pos] != 'z') fail("expected 'z'");
      return Cyc(r) * Cyc::zeta(parse_zpower());
    }
    return Cyc(r);
  }

  Cyc parse_expr() {
    Cyc acc;
    bool neg = false;
    skip_ws();
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = (s[pos] == '-');
      ++pos;
    }
    for (;;) {
      Cyc t = parse_term();
      acc += neg ? -t : t;
      skip_ws();
      if (pos >= s.size()) break;
      if (s[pos] == '+') neg = false;
      else if (s[pos] == '-') neg = true;
      else fail("expected '+' or '-'");
      ++pos;
    }
    return acc;
  }
};

} // namespace

Cyc Cyc::parse(std::string_view s) {
  Parser p{s};
  if (p.eof()) throw CycParseError("empty input", 0);
  return p.parse_expr();
}

std::ostream& operator<<(std::ostream& os, const Cyc& a) { return os << a.str(); }

} // namespace ufo7
