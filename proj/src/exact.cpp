#include "trifree/exact.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace trifree::exact {

namespace {

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

constexpr std::string_view kRootSign = "√";
constexpr std::string_view kUnicodeMinus = "−";

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
    s.replace(pos, from.size(), to);
  return s;
}

class SurdParser {
public:
  explicit SurdParser(std::string text) : s_(std::move(text)) {}

  QuadSurd parse() {
    QuadSurd value;
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      value = sum();
      expect(')');
    } else {
      value = sum();
    }
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      const BigInt den = integer();
      if (den == 0) fail("zero denominator");
      value = value / Rational(den);
    }
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return value;
  }

private:
  QuadSurd sum() {
    skip_ws();
    int sign = 1;
    if (peek() == '-' || peek() == '+') sign = s_[pos_++] == '-' ? -1 : 1;
    QuadSurd total = term() * QuadSurd(sign);
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') return total;
      sign = s_[pos_++] == '-' ? -1 : 1;
      total = total + term() * QuadSurd(sign);
    }
  }

  QuadSurd term() {
    skip_ws();
    BigInt coefficient = 1;
    bool has_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = integer();
      has_coefficient = true;
    }
    if (!root_sign()) {
      if (!has_coefficient) fail("expected a number");
      return QuadSurd(Rational(coefficient));
    }
    bool paren = false;
    if (peek() == '(') {
      ++pos_;
      paren = true;
    }
    const BigInt radicand = integer();
    if (paren) expect(')');
    return QuadSurd(Rational(0), Rational(coefficient), radicand);
  }

  bool root_sign() {
    if (s_.compare(pos_, kRootSign.size(), kRootSign) == 0) {
      pos_ += kRootSign.size();
      return true;
    }
    if (s_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      return true;
    }
    return false;
  }

  BigInt integer() {
    skip_ws();
    const auto start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    // cpp_int reads a leading 0 as an octal prefix
    const auto first = s_.find_first_not_of('0', start);
    if (first >= pos_) return 0;
    return BigInt(s_.substr(first, pos_ - first));
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse \"" + s_ + "\" as a quadratic surd: " + why);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_perfect_square(const BigInt& value, BigInt* root) {
  if (value < 0) return false;
  BigInt r = boost::multiprecision::sqrt(value);
  if (r * r != value) return false;
  if (root) *root = r;
  return true;
}

SquareFreeSplit split_square(const BigInt& value) {
  if (value < 0) throw std::domain_error("square-free split of a negative number");
  SquareFreeSplit out{1, value};
  if (value == 0) return out;
  BigInt rest = value;
  BigInt radicand = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) out.cofactor *= p;
    if (e % 2) radicand *= p;
  }
  out.radicand = radicand * rest;
  return out;
}

QuadSurd::QuadSurd(Rational rational, Rational surd, BigInt radicand)
    : rational_(std::move(rational)), surd_(std::move(surd)), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw std::domain_error("negative radicand");
  normalize();
}

void QuadSurd::normalize() {
  if (surd_ == 0 || radicand_ == 0) {
    surd_ = 0;
    radicand_ = 1;
    return;
  }
  auto split = split_square(radicand_);
  surd_ *= Rational(split.cofactor);
  radicand_ = split.radicand;
  if (radicand_ == 1) {
    rational_ += surd_;
    surd_ = 0;
  }
}

QuadSurd QuadSurd::sqrt(const BigInt& value) { return QuadSurd(Rational(0), Rational(1), value); }

const Rational& QuadSurd::as_rational() const {
  if (!is_rational()) throw std::domain_error("irrational value " + to_string() + " used as a rational");
  return rational_;
}

int QuadSurd::sign() const {
  const int rs = sign_of(rational_), ss = sign_of(surd_);
  if (ss == 0) return rs;
  if (rs == 0 || rs == ss) return ss;
  const Rational lhs = rational_ * rational_;
  const Rational rhs = surd_ * surd_ * Rational(radicand_);
  if (lhs > rhs) return rs;
  if (lhs < rhs) return ss;
  return 0;
}

double QuadSurd::to_double() const {
  return static_cast<double>(rational_) + static_cast<double>(surd_) * std::sqrt(static_cast<double>(radicand_));
}

BigInt QuadSurd::floor() const {
  BigInt candidate = static_cast<BigInt>(std::floor(to_double()));
  while (QuadSurd(Rational(candidate)) > *this) --candidate;
  while (QuadSurd(Rational(candidate + 1)) <= *this) ++candidate;
  return candidate;
}

QuadSurd QuadSurd::operator-() const {
  QuadSurd out = *this;
  out.rational_ = -out.rational_;
  out.surd_ = -out.surd_;
  return out;
}

namespace {

const BigInt& common_radicand(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw std::domain_error("quadratic surds over different radicands do not combine");
}

}  // namespace

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  const BigInt& d = common_radicand(x, y);
  return QuadSurd(x.rational_ + y.rational_, x.surd_ + y.surd_, d);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  const BigInt& d = common_radicand(x, y);
  return QuadSurd(x.rational_ * y.rational_ + x.surd_ * y.surd_ * Rational(d),
                  x.rational_ * y.surd_ + x.surd_ * y.rational_, d);
}

QuadSurd operator/(const QuadSurd& x, const Rational& y) {
  if (y == 0) throw std::domain_error("division by zero");
  return QuadSurd(x.rational_ / y, x.surd_ / y, x.radicand_);
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string QuadSurd::to_string() const {
  if (is_rational()) return exact::to_string(rational_);
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const BigInt den = boost::multiprecision::lcm(denominator(rational_), denominator(surd_));
  const BigInt p = numerator(rational_ * Rational(den));
  const BigInt q = numerator(surd_ * Rational(den));

  std::string surd_term;
  if (q == -1) surd_term = "-";
  else if (q != 1) surd_term = q.str();
  surd_term += std::string(kRootSign) + radicand_.str();

  std::string body;
  if (p == 0) body = surd_term;
  else if (p > 0) body = p.str() + (q > 0 ? "+" : "") + surd_term;
  else body = surd_term + p.str();

  if (den == 1) return body;
  if (p == 0) return body + "/" + den.str();
  return "(" + body + ")/" + den.str();
}

QuadSurd QuadSurd::parse(std::string_view text) {
  return SurdParser(replace_all(std::string(text), kUnicodeMinus, "-")).parse();
}

}  // namespace trifree::exact
