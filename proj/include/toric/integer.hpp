#pragma once

// Arbitrary-precision integer with an inline 64-bit fast path.
//
// Values that fit in a signed 64-bit word never touch the heap; arithmetic
// that overflows promotes to a boost::multiprecision::cpp_int and demotes
// again as soon as the result fits.

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <climits>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace toric {

class Integer {
 public:
  using Big = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;

  Integer() noexcept = default;
  Integer(int v) noexcept : small_(v) {}
  Integer(long v) noexcept : small_(v) {}
  Integer(long long v) noexcept : small_(v) {}
  explicit Integer(const Big& b) { assign(b); }

  Integer(const Integer& o)
      : small_(o.small_), big_(o.big_ ? std::make_unique<Big>(*o.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  /// Parses an optionally signed decimal literal; nullopt on malformed input.
  static std::optional<Integer> parse(std::string_view text);

  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
  [[nodiscard]] int sign() const noexcept {
    if (!big_) return (small_ > 0) - (small_ < 0);
    return big_->sign();
  }
  [[nodiscard]] std::optional<long long> to_int64() const noexcept {
    if (!big_) return small_;
    return std::nullopt;
  }
  [[nodiscard]] Big to_big() const { return big_ ? *big_ : Big(small_); }
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const;

  Integer& operator+=(const Integer& o) {
    long long r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    assign(to_big() + o.to_big());
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    long long r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    assign(to_big() - o.to_big());
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    long long r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    assign(to_big() * o.to_big());
    return *this;
  }
  // Truncating division and remainder, matching the builtin integer types.
  Integer& operator/=(const Integer& o);
  Integer& operator%=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }
  friend Integer operator-(Integer a) {
    if (!a.big_ && a.small_ != LLONG_MIN) {
      a.small_ = -a.small_;
      return a;
    }
    a.assign(-a.to_big());
    return a;
  }
  friend Integer operator+(Integer a) { return a; }

  friend bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a big value never fits in 64 bits
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    return a.to_big().compare(b.to_big()) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a);

  [[nodiscard]] std::size_t hash() const;

 private:
  void assign(const Big& b);

  long long small_ = 0;
  std::unique_ptr<Big> big_;
};

inline Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }
inline bool is_zero(const Integer& a) { return a.is_zero(); }
inline bool is_zero(long long a) { return a == 0; }

/// Floor division (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);
inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
/// Remainder in [0, |b|).
Integer mod_floor(const Integer& a, const Integer& b);
inline long long mod_floor(long long a, long long b) {
  long long r = a % b;
  if (r < 0) r += (b < 0 ? -b : b);
  return r;
}
Integer gcd(const Integer& a, const Integer& b);
inline Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Exact rational number with normalized sign and reduced terms.
class Rational {
 public:
  Rational() = default;
  Rational(Integer n) : num_(std::move(n)), den_(1) {}
  Rational(Integer n, Integer d);

  [[nodiscard]] const Integer& num() const { return num_; }
  [[nodiscard]] const Integer& den() const { return den_; }
  [[nodiscard]] Integer floor() const { return floor_div(num_, den_); }
  [[nodiscard]] Rational frac() const { return *this - Rational(floor()); }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

}  // namespace toric

template <>
struct std::hash<toric::Integer> {
  std::size_t operator()(const toric::Integer& v) const { return v.hash(); }
};

namespace Eigen {
template <>
struct NumTraits<toric::Integer> : GenericNumTraits<toric::Integer> {
  using Real = toric::Integer;
  using NonInteger = toric::Integer;
  using Nested = toric::Integer;
  using Literal = toric::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};
}  // namespace Eigen
