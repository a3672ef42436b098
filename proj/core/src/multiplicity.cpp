#include "campana/multiplicity.hpp"

#include <charconv>
#include <stdexcept>

namespace campana {

Multiplicity Multiplicity::finite(int m) {
  if (m < 1) throw std::invalid_argument("multiplicity must be a positive integer, got " + std::to_string(m));
  return Multiplicity(m);
}

int Multiplicity::value() const {
  if (is_infinite()) throw std::logic_error("value() of an infinite multiplicity");
  return value_;
}

std::string Multiplicity::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(value_);
}

Multiplicity Multiplicity::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "inf" || text == "infinity" || text == "oo" || text == "∞") return infinite();
  int m = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), m);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed multiplicity: '" + std::string(text) + "'");
  }
  return finite(m);
}

std::vector<Multiplicity> parse_multiplicities(std::string_view comma_separated) {
  std::vector<Multiplicity> out;
  while (true) {
    auto comma = comma_separated.find(',');
    out.push_back(Multiplicity::parse(comma_separated.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    comma_separated.remove_prefix(comma + 1);
  }
  return out;
}

std::string to_string(std::span<const Multiplicity> ms) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i != 0) out += ',';
    out += ms[i].to_string();
  }
  return out;
}

}  // namespace campana
