#include "hurwitz/budget.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

namespace {
std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    // Accept "1e9"-style values for the large caps.
    const double d = std::stod(value, &used);
    if (used != value.size() || d < 0) throw std::invalid_argument("");
    return static_cast<std::uint64_t>(d);
  } catch (const std::exception&) {
    throw std::invalid_argument("budget: bad value for " + key + ": '" + value + "'");
  }
}
}  // namespace

Budget Budget::parse(std::string_view spec) { return parse(spec, Budget{}); }

Budget Budget::parse(std::string_view spec, Budget base) {
  std::string s(spec);
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("budget: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    const auto v = parse_u64(key, value);
    if (key == "monodromy_max_degree") base.monodromy_max_degree = static_cast<int>(v);
    else if (key == "monodromy_max_space") base.monodromy_max_space = v;
    else if (key == "trivalent_max_vertices") base.trivalent_max_vertices = static_cast<int>(v);
    else if (key == "wick_max_sides") base.wick_max_sides = static_cast<int>(v);
    else if (key == "toda_max_degree") base.toda_max_degree = static_cast<int>(v);
    else if (key == "toda_max_lambda") base.toda_max_lambda = static_cast<int>(v);
    else throw std::invalid_argument("budget: unknown key '" + key + "'");
  }
  return base;
}

Budget Budget::from_env() {
  const char* env = std::getenv("HURWITZ_LAB_BUDGET");
  return env ? parse(env) : Budget{};
}

std::string Budget::str() const {
  std::ostringstream os;
  os << "monodromy_max_degree=" << monodromy_max_degree << ",monodromy_max_space=" << monodromy_max_space
     << ",trivalent_max_vertices=" << trivalent_max_vertices << ",wick_max_sides=" << wick_max_sides
     << ",toda_max_degree=" << toda_max_degree << ",toda_max_lambda=" << toda_max_lambda;
  return os.str();
}

}  // namespace hurwitz
