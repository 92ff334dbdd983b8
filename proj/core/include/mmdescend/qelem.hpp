#pragma once

#include <string>
#include <string_view>

#include "mmdescend/numbers.hpp"

namespace mmdescend {

// Descriptor of the quadratic extension Q[sqrt(d)].
// d must be squarefree and neither 0 nor 1; d = -1 is Q[i].
struct FieldDesc {
  long long d;

  explicit FieldDesc(long long d_);
  bool operator==(const FieldDesc&) const = default;

  bool is_gaussian() const { return d == -1; }
  // "s" in the entry grammar; printed as "i" when d = -1.
  const char* surd_symbol() const { return d == -1 ? "i" : "s"; }
};

// An element a + b*sqrt(d) of Q[sqrt(d)]. Immutable after construction.
// The field descriptor travels with the value; mixing fields throws.
class QElem {
 public:
  QElem(Rat a, Rat b, FieldDesc field)
      : a_(std::move(a)), b_(std::move(b)), field_(field) {}
  static QElem rational(Rat a, FieldDesc field) {
    return QElem(std::move(a), Rat(0), field);
  }
  static QElem zero(FieldDesc field) { return rational(Rat(0), field); }
  static QElem one(FieldDesc field) { return rational(Rat(1), field); }
  static QElem surd(FieldDesc field) { return QElem(Rat(0), Rat(1), field); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  FieldDesc field() const { return field_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }

  bool operator==(const QElem& o) const {
    require_same_field(o);
    return a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const QElem& o) const { return !(*this == o); }

  QElem operator+(const QElem& o) const;
  QElem operator-(const QElem& o) const;
  QElem operator*(const QElem& o) const;
  QElem operator-() const { return QElem(-a_, -b_, field_); }

 private:
  void require_same_field(const QElem& o) const;
  Rat a_, b_;
  FieldDesc field_;
};

QElem qconj(const QElem& x);            // a + b*sqrt(d) -> a - b*sqrt(d)
Rat qnorm(const QElem& x);              // a^2 - d*b^2 = x * conj(x)
QElem qinv(const QElem& x);             // conj(x) / qnorm(x); throws on x = 0
inline QElem qdiv(const QElem& x, const QElem& y) { return x * qinv(y); }

// Entry grammar:
//   entry := qpart | rat
//   qpart := rat (('+'|'-') rat '*' 's')? | ('-')? rat? '*'? 's'
//   rat   := ('-')? digits ('/' digits)?
// 's' denotes sqrt(d); 'i' is accepted as an alias when d = -1.
QElem parse_entry(std::string_view s, FieldDesc field);

// Canonical form: "a" when b = 0; "b*s" when a = 0 ("s"/"-s" for b = +-1);
// "a+b*s" / "a-|b|*s" otherwise. The symbol is "i" when d = -1.
std::string entry_to_string(const QElem& x);

}  // namespace mmdescend
