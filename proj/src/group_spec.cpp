#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "stickel/error.hpp"
#include "stickel/group.hpp"

namespace stickel {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Splits on sep outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  const std::string t = strip_spaces(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
      }))
    throw Error(ErrorCode::InvalidGroupSpec, "expected an integer for " + what + ", got '" +
                                                 text + "'");
  try {
    return std::stoll(t);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidGroupSpec, "integer out of range for " + what);
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  if (strip_spaces(text).empty()) return out;
  for (const auto& part : split_top(text, ',')) out.push_back(parse_int(part, what));
  return out;
}

GroupTable parse_factor(const std::string& raw, std::size_t cap) {
  const std::string spec = trim(raw);
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::InvalidGroupSpec, "group spec '" + spec + "' lacks a kind prefix");
  std::string kind = strip_spaces(spec.substr(0, colon));
  std::transform(kind.begin(), kind.end(), kind.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const std::string rest = spec.substr(colon + 1);

  if (kind == "abelian") return GroupTable::from_abelian(parse_int_list(rest, "abelian invariant"));
  if (kind == "metacyclic") {
    const auto v = parse_int_list(rest, "metacyclic parameter");
    if (v.size() != 3)
      throw Error(ErrorCode::InvalidGroupSpec, "metacyclic spec needs exactly pa,q,r");
    return GroupTable::from_metacyclic(v[0], v[1], v[2]);
  }
  if (kind == "perm") {
    const auto c2 = rest.find(':');
    const std::string deg_text = c2 == std::string::npos ? rest : rest.substr(0, c2);
    const std::int64_t degree = parse_int(deg_text, "permutation degree");
    if (degree < 1 || degree > 64)
      throw Error(ErrorCode::InvalidGroupSpec, "permutation degree must be in [1, 64]");
    std::vector<std::vector<std::uint32_t>> gens;
    std::string canon = "perm:" + std::to_string(degree) + ":";
    if (c2 != std::string::npos) {
      bool first = true;
      for (const auto& g : split_top(rest.substr(c2 + 1), ',')) {
        if (strip_spaces(g).empty()) continue;
        gens.push_back(parse_permutation(static_cast<std::size_t>(degree), g));
        canon += (first ? "" : ",") + trim(g);
        first = false;
      }
    }
    GroupTable t = GroupTable::from_permutations(static_cast<std::size_t>(degree), gens, cap);
    t.set_descriptor(canon);
    return t;
  }
  throw Error(ErrorCode::InvalidGroupSpec, "unknown group kind '" + kind + "'");
}

}  // namespace

std::vector<std::uint32_t> parse_permutation(std::size_t degree, const std::string& text) {
  std::vector<std::uint32_t> perm(degree);
  std::iota(perm.begin(), perm.end(), 0u);
  const std::string t = trim(text);
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  while (i < t.size()) {
    if (std::isspace(static_cast<unsigned char>(t[i]))) {
      ++i;
      continue;
    }
    if (t[i] != '(')
      throw Error(ErrorCode::InvalidPermutation, "expected '(' in permutation '" + text + "'");
    const auto close = t.find(')', i);
    if (close == std::string::npos)
      throw Error(ErrorCode::InvalidPermutation, "unbalanced parentheses in '" + text + "'");
    std::string body = t.substr(i + 1, close - i - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::vector<std::uint32_t> cycle;
    std::size_t pos = 0;
    while (pos < body.size()) {
      while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
      if (pos >= body.size()) break;
      std::size_t end = pos;
      while (end < body.size() && !std::isspace(static_cast<unsigned char>(body[end]))) ++end;
      const std::string tok = body.substr(pos, end - pos);
      if (!std::all_of(tok.begin(), tok.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw Error(ErrorCode::InvalidPermutation, "bad point '" + tok + "'");
      const long v = std::stol(tok);
      if (v < 1 || static_cast<std::size_t>(v) > degree)
        throw Error(ErrorCode::InvalidPermutation,
                    "point " + tok + " outside 1.." + std::to_string(degree));
      if (std::find(cycle.begin(), cycle.end(), v - 1) != cycle.end())
        throw Error(ErrorCode::InvalidPermutation, "repeated point in cycle '" + text + "'");
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
      pos = end;
    }
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  // Cycles compose right to left, like functions.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    std::vector<std::uint32_t> step(degree);
    std::iota(step.begin(), step.end(), 0u);
    for (std::size_t k = 0; k < c.size(); ++k) step[c[k]] = c[(k + 1) % c.size()];
    std::vector<std::uint32_t> next(degree);
    for (std::size_t x = 0; x < degree; ++x) next[x] = step[perm[x]];
    perm = std::move(next);
  }
  return perm;
}

std::size_t closure_cap_from_env() {
  if (const char* v = std::getenv("STICKEL_CLOSURE_CAP")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && cap > 0) return static_cast<std::size_t>(cap);
  }
  return GroupTable::kDefaultClosureCap;
}

GroupTable parse_group_spec(const std::string& spec, std::size_t cap) {
  if (cap == 0) cap = closure_cap_from_env();
  const auto factors = split_top(spec, 'x');
  if (factors.empty() || trim(spec).empty())
    throw Error(ErrorCode::InvalidGroupSpec, "empty group spec");
  GroupTable g = parse_factor(factors.front(), cap);
  for (std::size_t i = 1; i < factors.size(); ++i)
    g = GroupTable::direct_product(g, parse_factor(factors[i], cap));
  return g;
}

}  // namespace stickel
