#include "octaboson/rational.hpp"

#include <cstdlib>
#include <string>

#include "octaboson/errors.hpp"

namespace octaboson {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw DomainError("empty rational literal");
  std::size_t slashes = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '/') {
      ++slashes;
      continue;
    }
    const bool sign = (c == '-' || c == '+') && (i == 0 || text[i - 1] == '/');
    if (!sign && (c < '0' || c > '9')) {
      throw DomainError("not an exact rational literal: '" + std::string(text) + "'");
    }
  }
  if (slashes > 1) throw DomainError("not an exact rational literal: '" + std::string(text) + "'");

  std::string literal(text);
  if (literal.front() == '+') literal.erase(0, 1);
  if (auto pos = literal.find("/+"); pos != std::string::npos) literal.erase(pos + 1, 1);

  Rational value;
  if (value.set_str(literal, 10) != 0) {
    throw DomainError("not an exact rational literal: '" + std::string(text) + "'");
  }
  if (value.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw GenericityError("zero raised to a negative power");
    Rational inverse = 1 / base;
    return pow(inverse, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::size_t resource_budget() {
  if (const char* env = std::getenv("OCTABOSON_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 24;
}

}  // namespace octaboson
