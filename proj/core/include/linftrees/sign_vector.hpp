#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "linftrees/rational.hpp"

namespace linftrees {

enum class Sign : signed char { Minus = -1, Zero = 0, Plus = 1 };

Sign sign_of(const Rational& r);

/// Element of {+,-,0}^m, printed as a string like "+-0".
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t m) : entries_(m, Sign::Zero) {}
  explicit SignVector(std::vector<Sign> entries) : entries_(std::move(entries)) {}

  static SignVector from_string(const std::string& s);  // ParseError on bad chars

  std::size_t size() const { return entries_.size(); }
  Sign operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, Sign s) { entries_[i] = s; }

  std::vector<std::size_t> support() const;
  std::size_t nonzero_count() const { return support().size(); }
  bool is_zero() const;

  /// Componentwise partial order with 0 below both + and -.
  bool below_or_equal(const SignVector& tau) const;

  SignVector negated() const;
  std::string str() const;

  bool operator==(const SignVector& o) const { return entries_ == o.entries_; }
  bool operator<(const SignVector& o) const;  // fixed total order for sets

 private:
  std::vector<Sign> entries_;
};

/// u(sigma): +1 where +, -1 where -, 0 where 0.
RatVector u_vector(const SignVector& sigma);

std::ostream& operator<<(std::ostream& os, const SignVector& s);

}  // namespace linftrees
