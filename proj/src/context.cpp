#include "pptlab/context.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pptlab/errors.hpp"

namespace pptlab {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Splits "x12" into ("x", 12); returns false without a numeric suffix.
bool split_suffix(const std::string& s, std::string& stem, unsigned& index) {
  auto pos = s.find_last_not_of("0123456789");
  if (pos == std::string::npos || pos + 1 == s.size()) return false;
  stem = s.substr(0, pos + 1);
  index = static_cast<unsigned>(std::stoul(s.substr(pos + 1)));
  return true;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const Context> Context::create(unsigned p,
                                               std::vector<std::string> vars,
                                               Limits limits) {
  if (!is_prime(p))
    throw Error(ErrorKind::InvalidArgument,
                "p = " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime)
    throw Error(ErrorKind::InvalidArgument,
                "p = " + std::to_string(p) + " exceeds the supported maximum " +
                    std::to_string(kMaxPrime));
  if (vars.empty() || vars.size() > kMaxVars)
    throw Error(ErrorKind::InvalidArgument,
                "variable count must be between 1 and " +
                    std::to_string(kMaxVars));
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!is_identifier(vars[i]))
      throw Error(ErrorKind::InvalidArgument,
                  "'" + vars[i] + "' is not a valid variable name");
    // 'p' is reserved for the prime in polynomial expressions
    if (vars[i] == "p")
      throw Error(ErrorKind::InvalidArgument,
                  "'p' is reserved for the prime and cannot name a variable");
    for (std::size_t j = 0; j < i; ++j)
      if (vars[i] == vars[j])
        throw Error(ErrorKind::InvalidArgument,
                    "duplicate variable name '" + vars[i] + "'");
  }
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) box *= p;
  if (box > kMaxMultiplierBox)
    throw Error(ErrorKind::InvalidArgument,
                "p^N = " + std::to_string(box) + " exceeds the cap " +
                    std::to_string(kMaxMultiplierBox));
  return std::shared_ptr<const Context>(
      new Context(p, std::move(vars), limits));
}

std::uint64_t Context::multiplier_box() const {
  std::uint64_t box = 1;
  for (unsigned i = 0; i < nvars(); ++i) box *= p_;
  return box;
}

int Context::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

void require_same_context(const Context& a, const Context& b) {
  if (&a == &b || a == b) return;
  throw Error(ErrorKind::ContextMismatch,
              "operands belong to different contexts");
}

std::vector<std::string> parse_var_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(item);
      continue;
    }
    std::string lo = trim(item.substr(0, dots));
    std::string hi = trim(item.substr(dots + 2));
    std::string stem_lo, stem_hi;
    unsigned a = 0, b = 0;
    if (!split_suffix(lo, stem_lo, a) || !split_suffix(hi, stem_hi, b) ||
        stem_lo != stem_hi || a > b || b - a >= 64)
      throw Error(ErrorKind::InvalidArgument,
                  "malformed variable range '" + item + "'");
    for (unsigned i = a; i <= b; ++i)
      out.push_back(stem_lo + std::to_string(i));
  }
  return out;
}

}  // namespace pptlab
