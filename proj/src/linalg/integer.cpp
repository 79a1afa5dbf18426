#include "toric/integer.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <ostream>
#include <stdexcept>

namespace toric {

namespace {
const Integer::Big kMin = std::numeric_limits<long long>::min();
const Integer::Big kMax = std::numeric_limits<long long>::max();
}  // namespace

void Integer::assign(const Big& b) {
  if (b >= kMin && b <= kMax) {
    small_ = static_cast<long long>(b);
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<Big>(b);
  }
}

std::optional<Integer> Integer::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  Big value(std::string(text.substr(start)));
  if (text[0] == '-') value = -value;
  return Integer(value);
}

std::string Integer::to_string() const {
  if (!big_) return std::to_string(small_);
  return big_->str();
}

double Integer::to_double() const {
  if (!big_) return static_cast<double>(small_);
  return big_->convert_to<double>();
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("Integer: division by zero");
  if (!big_ && !o.big_ && !(small_ == LLONG_MIN && o.small_ == -1)) {
    small_ /= o.small_;
    return *this;
  }
  assign(to_big() / o.to_big());
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("Integer: division by zero");
  if (!big_ && !o.big_) {
    small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
    return *this;
  }
  assign(to_big() % o.to_big());
  return *this;
}

std::size_t Integer::hash() const {
  if (!big_) return std::hash<long long>{}(small_);
  return std::hash<std::string>{}(big_->str());
}

std::ostream& operator<<(std::ostream& os, const Integer& a) {
  if (a.big_) return os << *a.big_;
  return os << a.small_;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    long long x = *a.to_int64(), y = *b.to_int64();
    if (!(x == LLONG_MIN && y == -1)) return floor_div(x, y);
  }
  Integer q = a / b;
  if (!(a % b).is_zero() && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r.sign() < 0) r += abs(b);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    long long x = *a.to_int64(), y = *b.to_int64();
    if (x != LLONG_MIN && y != LLONG_MIN) {
      return boost::integer::gcd(x < 0 ? -x : x, y < 0 ? -y : y);
    }
  }
  return Integer(boost::multiprecision::gcd(a.to_big(), b.to_big()));
}

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (!g.is_zero() && !(g == 1)) {
    num_ /= g;
    den_ /= g;
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (!(r.den() == 1)) os << '/' << r.den();
  return os;
}

}  // namespace toric
