#include "nil8/rat.hpp"

#include <cctype>
#include <ostream>

namespace nil8 {

static bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rat Rat::parse(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(s)) throw std::invalid_argument("Rat::parse: bad integer '" + s + "'");
    return Rat(mpq_class(mpz_class(s)));
  }
  const std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  if (!valid_integer_token(p) || !valid_integer_token(q))
    throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
  mpz_class den(q);
  if (den == 0) throw std::invalid_argument("Rat::parse: zero denominator in '" + s + "'");
  mpq_class r(mpz_class(p), den);
  r.canonicalize();
  return Rat(std::move(r));
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace nil8
