#include "mmdescend/numbers.hpp"

#include <cctype>

namespace mmdescend {

Rat parse_rat(std::string_view s) {
  if (s.empty()) throw parse_error("empty rational literal");
  std::string str(s);
  bool neg = false;
  size_t pos = 0;
  if (str[0] == '-') {
    neg = true;
    pos = 1;
  }
  auto digits = [&](size_t from, size_t to) {
    if (from >= to) throw parse_error("expected digits in '" + str + "'");
    for (size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(str[i])))
        throw parse_error("bad character in rational '" + str + "'");
    return str.substr(from, to - from);
  };
  size_t slash = str.find('/', pos);
  Int num, den;
  if (slash == std::string::npos) {
    num = Int(digits(pos, str.size()));
    den = 1;
  } else {
    num = Int(digits(pos, slash));
    den = Int(digits(slash + 1, str.size()));
    if (den == 0) throw parse_error("zero denominator in '" + str + "'");
  }
  if (neg) num = -num;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::optional<Rat> rat_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn, rd);
}

Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::optional<std::vector<std::pair<Int, int>>> factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize expects n >= 1");
  std::vector<std::pair<Int, int>> out;
  Int p = 2;
  const long bound = 1000000;
  while (p <= bound && p * p <= n) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (n <= bound * static_cast<long>(bound) ||
        mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
      out.emplace_back(n, 1);
    } else {
      return std::nullopt;  // composite cofactor beyond trial bound
    }
  }
  return out;
}

}  // namespace mmdescend
