#include "kleinian/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace kleinian {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  text = trim(text);
  if (text.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed fraction: '" + std::string(original) + "'");
  const Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in fraction: '" + std::string(original) + "'");
  Rational value(Integer(std::string(num), 10), d);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto part : split_commas(text)) out.push_back(parse_rational(part));
  return out;
}

std::vector<long> parse_integer_list(std::string_view text) {
  std::vector<long> out;
  for (auto part : split_commas(text)) {
    const Rational r = parse_rational(part);
    if (r.get_den() != 1) throw std::invalid_argument("expected an integer, got '" + std::string(part) + "'");
    if (!r.get_num().fits_slong_p()) throw std::invalid_argument("integer out of range: '" + std::string(part) + "'");
    out.push_back(r.get_num().get_si());
  }
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(); }

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

int mod(long a, int m) {
  const long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

Rational random_rational(std::mt19937_64& rng, int max_den, int max_abs) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  const int den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(-static_cast<long>(max_abs) * den, static_cast<long>(max_abs) * den);
  Rational r(num_dist(rng), den);
  r.canonicalize();
  return r;
}

}  // namespace kleinian
