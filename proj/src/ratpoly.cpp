#include "dilog/ratpoly.hpp"

#include "dilog/errors.hpp"

#include <cctype>
#include <sstream>

namespace dilog {

namespace {

std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(text[i]))) out.push_back(text[i]);
  }
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_decimal(const std::string& s) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) negative = s[pos++] == '-';
  const std::size_t exp_pos = s.find_first_of("eE", pos);
  const std::string mantissa = s.substr(pos, exp_pos == std::string::npos ? std::string::npos : exp_pos - pos);
  long exponent = 0;
  if (exp_pos != std::string::npos) {
    std::string e = s.substr(exp_pos + 1);
    bool e_negative = false;
    if (!e.empty() && (e[0] == '-' || e[0] == '+')) {
      e_negative = e[0] == '-';
      e = e.substr(1);
    }
    if (!all_digits(e) || e.size() > 6) throw Error(ErrorCode::Parse, "bad exponent in number '" + s + "'");
    exponent = std::stol(e) * (e_negative ? -1 : 1);
  }
  const std::size_t dot = mantissa.find('.');
  std::string int_part = mantissa.substr(0, dot);
  std::string frac_part = dot == std::string::npos ? "" : mantissa.substr(dot + 1);
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw Error(ErrorCode::Parse, "not a rational number: '" + s + "'");
  }
  const Integer numerator(int_part + frac_part, 10);
  exponent -= static_cast<long>(frac_part.size());
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational out = exponent < 0 ? Rational(numerator, ten_pow) : Rational(numerator * ten_pow);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = normalize_minus(text);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty rational");
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    negative = num[0] == '-';
    num = num.substr(1);
  }
  if (!all_digits(num) || !all_digits(den)) throw Error(ErrorCode::Parse, "not a rational number: '" + s + "'");
  const Integer d(den, 10);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
  Rational out(Integer(num, 10), d);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

RatPoly::RatPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return RatPoly(std::move(coeffs));
}

RatPoly RatPoly::parse(std::string_view csv) {
  std::vector<Rational> coeffs;
  std::string item;
  std::istringstream in{std::string(csv)};
  while (std::getline(in, item, ',')) coeffs.push_back(parse_rational(item));
  if (coeffs.empty()) throw Error(ErrorCode::Parse, "empty coefficient list");
  return RatPoly(std::move(coeffs));
}

Rational RatPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigReal RatPoly::operator()(const BigReal& x) const {
  BigReal acc(x.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    mpfr_add_q(acc.raw(), acc.raw(), it->get_mpq_t(), MPFR_RNDN);
  }
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RatPoly(std::move(out));
}

int RatPoly::sign_variations() const {
  int count = 0;
  int last = 0;
  for (const auto& c : coeffs_) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::string RatPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += mag.get_str();
    if (k >= 1) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::string RatPoly::to_csv() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ",";
    out += coeffs_[k].get_str();
  }
  return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RatPoly operator-(const RatPoly& a) {
  RatPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& div = b.coefficients();
  const int db = b.degree();
  const bool monic = b.leading() == 1;
  const Rational inv_lead = 1 / b.leading();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    Rational& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    const Rational factor = monic ? top : Rational(top * inv_lead);
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= factor * div[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Rational(1 / a.leading());
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() < 1) return p;
  const RatPoly g = gcd(p, p.derivative());
  if (g.degree() < 1) return p;
  return divmod(p, g).first;
}

RatPoly taylor_shift(const RatPoly& p, const Rational& shift) {
  std::vector<Rational> c = p.coefficients();
  const int d = p.degree();
  if (shift == 0 || d < 1) return p;
  for (int i = 0; i < d; ++i) {
    for (int j = d - 1; j >= i; --j) c[static_cast<std::size_t>(j)] += shift * c[static_cast<std::size_t>(j) + 1];
  }
  return RatPoly(std::move(c));
}

}  // namespace dilog
