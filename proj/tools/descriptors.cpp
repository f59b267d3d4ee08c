#include "descriptors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pmetrics::cli {

namespace {

double parse_number(const std::string& token, const std::string& what) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw std::invalid_argument(what + ": not a number: '" + token + "'");
  return value;
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

ScalarMetric parse_scalar_metric(const std::string& token) {
  const std::string t = lowercase(token);
  if (t == "abs") return ScalarMetric::absolute();
  if (t == "disc") return ScalarMetric::discrete();
  if (t.rfind("pow:", 0) == 0)
    return ScalarMetric::power(parse_number(t.substr(4), "metric exponent"));
  throw std::invalid_argument(
      "unknown metric descriptor '" + token +
      "'; expected abs, disc, or pow:<s> with s in (0, 1]");
}

std::vector<ScalarMetric> parse_metric_list(const std::string& descriptor) {
  std::vector<ScalarMetric> metrics;
  std::stringstream tokens(descriptor);
  std::string token;
  while (std::getline(tokens, token, ','))
    metrics.push_back(parse_scalar_metric(token));
  if (metrics.empty())
    throw std::invalid_argument("empty metric descriptor");
  return metrics;
}

Exponent parse_exponent(const std::string& token) {
  if (lowercase(token) == "inf") return Exponent::infinity();
  return Exponent(parse_number(token, "p-exponent"));
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream tokens(text);
  std::string token;
  while (std::getline(tokens, token, ','))
    values.push_back(parse_number(token, "list entry"));
  if (values.empty()) throw std::invalid_argument("empty number list");
  return values;
}

Vector parse_vector(const std::string& text) {
  const auto values = parse_double_list(text);
  Vector v(static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    v(static_cast<Index>(i)) = values[i];
  return v;
}

}  // namespace pmetrics::cli
