#include "linftrees/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "linftrees/errors.hpp"

namespace linftrees {

Rational::Rational(long long n) {
  mpz_class z;
  // mpz_class has no long long constructor on LP64 this is redundant, but keep
  // the conversion explicit so 32-bit longs would still round-trip.
  z = static_cast<signed long>(n);
  q_ = mpq_class(z);
}

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.sign() < 0) r = -r;
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational literal");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(s.begin());
  }
  if (s.empty()) throw ParseError("rational literal '" + text + "' has no digits");

  Rational result;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational literal '" + text + "'");
    }
    mpq_class q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) throw ParseError("rational literal '" + text + "' divides by zero");
    q.canonicalize();
    result.q_ = q;
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("malformed rational literal '" + text + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
      throw ParseError("malformed rational literal '" + text + "'");
    }
    mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(ip);
    mpz_class den(1);
    mpz_class frac(0);
    if (!fp.empty()) {
      frac = mpz_class(fp);
      for (std::size_t k = 0; k < fp.size(); ++k) den *= 10;
    }
    mpq_class q(whole * den + frac, den);
    q.canonicalize();
    result.q_ = q;
  } else {
    if (!all_digits(s)) throw ParseError("malformed rational literal '" + text + "'");
    result.q_ = mpq_class(mpz_class(s));
  }
  if (negative) result = -result;
  return result;
}

std::string Rational::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace linftrees
