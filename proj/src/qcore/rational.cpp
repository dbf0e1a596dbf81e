#include "qseries/rational.hpp"

#include <cctype>

#include "qseries/error.hpp"

namespace qseries {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
      s.remove_prefix(1);
    }
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 1, 1);
  }
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  Integer nz(n);
  Integer dz{std::string(den)};
  if (dz == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1, 1);
  Rational r(nz, dz);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw DomainError("integer " + z.get_str() + " out of range");
  return z.get_si();
}

long to_long(const Rational& r) {
  if (!is_integer(r)) throw DomainError("expected an integer, got " + r.get_str());
  return to_long(r.get_num());
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace qseries
