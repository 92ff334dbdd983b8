#include "mmdescend/qelem.hpp"

#include <cctype>

namespace mmdescend {

namespace {

bool squarefree(long long n) {
  if (n < 0) n = -n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

FieldDesc::FieldDesc(long long d_) : d(d_) {
  if (d == 0 || d == 1)
    throw unsupported_field_error("field descriptor d must not be 0 or 1");
  if (!squarefree(d))
    throw unsupported_field_error("field descriptor d must be squarefree, got " +
                                std::to_string(d));
}

void QElem::require_same_field(const QElem& o) const {
  if (field_ != o.field_)
    throw field_mismatch_error("operands live in Q[sqrt(" +
                               std::to_string(field_.d) + ")] and Q[sqrt(" +
                               std::to_string(o.field_.d) + ")]");
}

QElem QElem::operator+(const QElem& o) const {
  require_same_field(o);
  return QElem(a_ + o.a_, b_ + o.b_, field_);
}

QElem QElem::operator-(const QElem& o) const {
  require_same_field(o);
  return QElem(a_ - o.a_, b_ - o.b_, field_);
}

QElem QElem::operator*(const QElem& o) const {
  require_same_field(o);
  // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + d b1 b2) + (a1 b2 + a2 b1) s
  Rat d(static_cast<long>(field_.d));
  return QElem(a_ * o.a_ + d * b_ * o.b_, a_ * o.b_ + o.a_ * b_, field_);
}

QElem qconj(const QElem& x) { return QElem(x.a(), -x.b(), x.field()); }

Rat qnorm(const QElem& x) {
  return x.a() * x.a() - Rat(static_cast<long>(x.field().d)) * x.b() * x.b();
}

QElem qinv(const QElem& x) {
  if (x.is_zero()) throw division_by_zero_error("inverse of zero");
  Rat n = qnorm(x);
  // d squarefree (in particular not a perfect square) rules out zero norm.
  if (n == 0) throw std::logic_error("zero norm for nonzero element");
  return QElem(x.a() / n, -x.b() / n, x.field());
}

namespace {

// rat token: ('-')? digits ('/' digits)?
size_t scan_rat(std::string_view s, size_t pos) {
  size_t p = pos;
  if (p < s.size() && s[p] == '-') ++p;
  size_t dig0 = p;
  while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
  if (p == dig0) return pos;  // no digits: not a rat
  if (p < s.size() && s[p] == '/') {
    size_t q = p + 1;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q == p + 1) return pos;
    p = q;
  }
  return p;
}

bool is_surd_tok(char c, FieldDesc f) {
  return c == 's' || (f.d == -1 && c == 'i');
}

}  // namespace

QElem parse_entry(std::string_view raw, FieldDesc field) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw parse_error("empty entry");
  if (s.find('i') != std::string::npos && field.d != -1)
    throw parse_error("'i' is only valid when d = -1, in entry '" + s + "'");

  auto parse_surd_coeff = [&](std::string_view term) -> Rat {
    // term := ('-')? rat? '*'? 's'
    if (term.empty() || !is_surd_tok(term.back(), field))
      throw parse_error("expected sqrt term in '" + s + "'");
    std::string_view body = term.substr(0, term.size() - 1);
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);
    if (body.empty()) return Rat(1);
    if (body == "-") return Rat(-1);
    return parse_rat(body);
  };

  // qpart alternative 2 / bare surd with optional coefficient.
  if (is_surd_tok(s.back(), field)) {
    size_t end = scan_rat(s, 0);
    // Does the string split as rat (+|-) coeff*s ?
    if (end > 0 && end < s.size() && (s[end] == '+' || s[end] == '-')) {
      Rat a = parse_rat(std::string_view(s).substr(0, end));
      std::string_view rest = std::string_view(s).substr(end + 1);
      Rat b = parse_surd_coeff(rest);
      if (s[end] == '-') b = -b;
      return QElem(a, b, field);
    }
    return QElem(Rat(0), parse_surd_coeff(s), field);
  }

  // plain rational
  size_t end = scan_rat(s, 0);
  if (end != s.size())
    throw parse_error("malformed entry '" + s + "'");
  return QElem::rational(parse_rat(s), field);
}

std::string entry_to_string(const QElem& x) {
  const char* sym = x.field().surd_symbol();
  if (x.b() == 0) return rat_to_string(x.a());
  auto surd_of = [&](const Rat& coeff) {
    if (coeff == 1) return std::string(sym);
    return rat_to_string(coeff) + "*" + sym;
  };
  if (x.a() == 0) {
    if (x.b() < 0) return "-" + surd_of(-x.b());
    return surd_of(x.b());
  }
  if (x.b() > 0) return rat_to_string(x.a()) + "+" + surd_of(x.b());
  return rat_to_string(x.a()) + "-" + surd_of(-x.b());
}

}  // namespace mmdescend
