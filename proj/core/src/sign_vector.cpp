#include "linftrees/sign_vector.hpp"

#include <ostream>

#include "linftrees/errors.hpp"

namespace linftrees {

Sign sign_of(const Rational& r) {
  const int s = r.sign();
  return s < 0 ? Sign::Minus : (s > 0 ? Sign::Plus : Sign::Zero);
}

SignVector SignVector::from_string(const std::string& s) {
  std::vector<Sign> e;
  e.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '+': e.push_back(Sign::Plus); break;
      case '-': e.push_back(Sign::Minus); break;
      case '0': e.push_back(Sign::Zero); break;
      default: throw ParseError(std::string("bad sign character '") + c + "'");
    }
  }
  return SignVector(std::move(e));
}

std::vector<std::size_t> SignVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != Sign::Zero) out.push_back(i);
  }
  return out;
}

bool SignVector::is_zero() const {
  for (Sign s : entries_) {
    if (s != Sign::Zero) return false;
  }
  return true;
}

bool SignVector::below_or_equal(const SignVector& tau) const {
  if (size() != tau.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] != Sign::Zero && entries_[i] != tau[i]) return false;
  }
  return true;
}

SignVector SignVector::negated() const {
  SignVector out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.set(i, static_cast<Sign>(-static_cast<signed char>(entries_[i])));
  }
  return out;
}

std::string SignVector::str() const {
  std::string s;
  s.reserve(size());
  for (Sign e : entries_) {
    s.push_back(e == Sign::Plus ? '+' : (e == Sign::Minus ? '-' : '0'));
  }
  return s;
}

bool SignVector::operator<(const SignVector& o) const { return str() < o.str(); }

RatVector u_vector(const SignVector& sigma) {
  RatVector out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    out[i] = Rational(static_cast<int>(sigma[i]));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SignVector& s) { return os << s.str(); }

}  // namespace linftrees
