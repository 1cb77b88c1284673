#ifndef PPTLAB_RATIONAL_HPP
#define PPTLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

namespace pptlab {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision parts, always reduced with a
// positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num, BigInt den = 1);  // throws on den == 0
  Rational(long long num) : Rational(BigInt(num)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const;

  double to_double() const;
  // "n/d", or "n" when d == 1
  std::string str() const;

 private:
  BigInt num_;
  BigInt den_;
};

BigInt big_pow(unsigned base, unsigned exp);

}  // namespace pptlab

#endif
