#include "hall/rational.hpp"

#include "hall/error.hpp"

namespace hall {

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) {
      throw InvalidInput("malformed rational '" + s + "'");
    }
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) {
      throw InvalidInput("malformed rational '" + s + "'");
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw InvalidInput("malformed rational '" + s + "'");
      }
    }
    return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
  };
  mpz_class num = parse_int(slash == std::string::npos ? s : s.substr(0, slash));
  mpz_class den = slash == std::string::npos ? mpz_class(1) : parse_int(s.substr(slash + 1));
  if (den == 0) {
    throw InvalidInput("zero denominator in '" + s + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_power(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) {
      throw InvalidInput("negative power of zero");
    }
    return rational_power(Rational(1) / base, -exp);
  }
  Rational result(1);
  for (long i = 0; i < exp; ++i) {
    result *= base;
  }
  return result;
}

}  // namespace hall
