#include "polya/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "polya/error.hpp"

namespace polya::config {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

template <class T>
T parse_number(std::string_view v, int line) {
  T out{};
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) fail(line, "bad number '" + std::string(v) + "'");
  return out;
}

int parse_positive(std::string_view v, int line) {
  const int n = parse_number<int>(v, line);
  if (n < 0) fail(line, "negative value");
  return n;
}

}  // namespace

std::pair<int, int> parse_grid(std::string_view text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string_view::npos) throw Error(ErrorCode::ParseError, "grid must look like NAxNB");
  int na = 0, nb = 0;
  const auto l = trim(text.substr(0, x)), r = trim(text.substr(x + 1));
  const auto [p1, e1] = std::from_chars(l.data(), l.data() + l.size(), na);
  const auto [p2, e2] = std::from_chars(r.data(), r.data() + r.size(), nb);
  if (e1 != std::errc() || e2 != std::errc() || p1 != l.data() + l.size() || p2 != r.data() + r.size() || na < 2 || nb < 2)
    throw Error(ErrorCode::ParseError, "grid must look like NAxNB with NA, NB >= 2");
  return {na, nb};
}

Config parse(std::string_view text) {
  Config c;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (const auto h = s.find('#'); h != std::string_view::npos) s = s.substr(0, h);
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "unterminated section header");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) fail(line, "expected key = value");
    const auto key = trim(s.substr(0, eq));
    auto val = trim(s.substr(eq + 1));
    if (val.size() >= 2 && (val.front() == '"' || val.front() == '\'') && val.back() == val.front()) val = val.substr(1, val.size() - 2);
    if (key.empty() || val.empty()) fail(line, "empty key or value");

    if (key == "grid") {
      try {
        std::tie(c.na, c.nb) = parse_grid(val);
      } catch (const Error& e) {
        fail(line, e.what());
      }
    } else if (key == "na") c.na = parse_positive(val, line);
    else if (key == "nb") c.nb = parse_positive(val, line);
    else if (key == "bmin" || key == "b_min") c.b_min = parse_number<double>(val, line);
    else if (key == "bmax" || key == "b_max") c.b_max = parse_number<double>(val, line);
    else if (key == "level" || key == "max_level") c.level = parse_positive(val, line);
    else if (key == "terms") c.terms = parse_positive(val, line);
    else if (key == "upper_level") c.upper_level = parse_positive(val, line);
    else if (key == "upper_samples") c.upper_samples = parse_positive(val, line);
    else if (key == "thinning_level") c.thinning_level = parse_positive(val, line);
    else if (key == "cert_depth" || key == "depth") c.cert_depth = parse_positive(val, line);
    else if (key == "threads") c.threads = static_cast<unsigned>(parse_positive(val, line));
    else fail(line, "unknown key '" + std::string(key) + "'");
  }
  return c;
}

Config load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

void apply(const Config& c, harness::SweepConfig& s) {
  if (c.na) s.na = *c.na;
  if (c.nb) s.nb = *c.nb;
  if (c.b_min) s.b_min = *c.b_min;
  if (c.b_max) s.b_max = *c.b_max;
  if (c.level) s.max_level = *c.level;
  if (c.threads) s.threads = *c.threads;
}

void apply(const Config& c, harness::ReplayOptions& r) {
  if (c.upper_level) r.upper_level = *c.upper_level;
  if (c.upper_samples) r.upper_samples = *c.upper_samples;
  if (c.thinning_level) r.thinning_level = *c.thinning_level;
  if (c.cert_depth) r.cert_depth = *c.cert_depth;
  if (c.threads) r.threads = *c.threads;
}

}  // namespace polya::config
