#include "hns/rational.hpp"

#include "hns/errors.hpp"

#include <stdexcept>

namespace hns {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q{mpz_class{std::to_string(num)}, mpz_class{std::to_string(den)}};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  // no leading zeros except the literal "0"
  return s.size() == 1 || s.front() != '0';
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw ParseError("malformed rational \"" + original + "\"");
  if (negative && num == "0") throw ParseError("negative zero \"" + original + "\"");
  if (slash != std::string_view::npos && den == "1")
    throw ParseError("rational \"" + original + "\" has an explicit unit denominator");
  if (den == "0") throw ParseError("rational \"" + original + "\" has a zero denominator");

  Rational q{mpz_class{std::string(num)}, mpz_class{std::string(den)}};
  if (negative) q = -q;
  Rational canonical = q;
  canonical.canonicalize();
  if (canonical.get_num() != q.get_num() || canonical.get_den() != q.get_den())
    throw ParseError("rational \"" + original + "\" is not in lowest terms");
  return canonical;
}

}  // namespace hns
