#ifndef EQUICAT_EXTINT_HPP
#define EQUICAT_EXTINT_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>

#include "equicat/errors.hpp"

namespace equicat {

// Connectivity values live in Z ∪ {-inf, +inf}.  +inf encodes
// "equivalence / no constraint", -inf "no information".  Sums of a finite
// value with an infinity saturate; +inf + (-inf) is an arithmetic error,
// never a value.
class ExtInt {
public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtInt() : kind_(Kind::Finite), v_(0) {}
  constexpr ExtInt(long long v) : kind_(Kind::Finite), v_(v) {}  // NOLINT(implicit)

  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  long long value() const {
    require(is_finite(), "InfinityClash", "value() on non-finite ExtInt " + str());
    return v_;
  }

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.v_ == b.v_;
  }
  friend bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
  friend bool operator<(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ == b.kind_) return a.kind_ == Kind::Finite && a.v_ < b.v_;
    if (a.kind_ == Kind::NegInf) return true;
    if (a.kind_ == Kind::PosInf) return false;
    return b.kind_ == Kind::PosInf;
  }
  friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a < b || a == b; }
  friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
  friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }

  friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
    if (a.is_finite() && b.is_finite()) return ExtInt(a.v_ + b.v_);
    if (a.is_pos_inf())
      return b.is_neg_inf() ? clash(a, b, "+") : pos_inf();
    if (a.is_neg_inf())
      return b.is_pos_inf() ? clash(a, b, "+") : neg_inf();
    return b;  // a finite, b infinite
  }
  friend ExtInt operator-(const ExtInt& a, long long b) { return a + ExtInt(-b); }
  friend ExtInt operator+(const ExtInt& a, long long b) { return a + ExtInt(b); }
  friend ExtInt operator*(long long c, const ExtInt& a) {
    if (a.is_finite()) return ExtInt(c * a.v_);
    require(c != 0, "InfinityClash", "0 * " + a.str());
    return c > 0 ? a : (a.is_pos_inf() ? neg_inf() : pos_inf());
  }

  std::string str() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "+inf";
      default: return std::to_string(v_);
    }
  }

  // Accepts "-inf", "+inf", "inf" and plain integers.
  static ExtInt parse(const std::string& s) {
    if (s == "-inf") return neg_inf();
    if (s == "+inf" || s == "inf") return pos_inf();
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    require(pos == s.size(), "InfinityClash", "cannot parse ExtInt from '" + s + "'");
    return ExtInt(v);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtInt& e) { return os << e.str(); }

private:
  explicit constexpr ExtInt(Kind k) : kind_(k), v_(0) {}
  static ExtInt clash(const ExtInt& a, const ExtInt& b, const char* op) {
    fail("InfinityClash", a.str() + " " + op + " " + b.str());
  }

  Kind kind_;
  long long v_;
};

inline ExtInt ext_min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }
inline ExtInt ext_max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

}  // namespace equicat

#endif
