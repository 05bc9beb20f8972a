#include <chromgf/algebra/rational.hpp>

#include <cctype>

namespace chromgf {

std::string to_string(const Rat& value) { return value.get_str(10); }

Rat parse_rat(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den.front() == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat result(n, d);
  result.canonicalize();
  return result;
}

}  // namespace chromgf
