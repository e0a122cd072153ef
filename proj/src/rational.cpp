#include "oddsing/rational.hpp"

#include <cctype>

#include "oddsing/error.hpp"

namespace oddsing {

Rat::Rat(long num, long den) {
  if (den == 0) fail(ErrorCode::Usage, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
    fail(ErrorCode::Usage, "malformed rational '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) fail(ErrorCode::Usage, "rational with zero denominator '" + std::string(text) + "'");
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  return Rat(std::move(q));
}

std::optional<Rat> Rat::checked_div(const Rat& b) const {
  if (b.is_zero()) return std::nullopt;
  return Rat(mpq_class(v_ / b.v_));
}

Rat& Rat::operator/=(const Rat& b) {
  if (b.is_zero()) fail(ErrorCode::Precondition, "division by zero");
  v_ /= b.v_;
  return *this;
}

}  // namespace oddsing
