#include "mnrule/format.hpp"

#include "mnrule/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mnrule {

namespace {

std::string bracket(const Partition& p) {
  std::string s = p.to_string();
  s.front() = '[';
  s.back() = ']';
  return s;
}

template <class Terms, class Body>
std::string join_signed(const Terms& terms, const Body& body) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag << ' ';
    os << body(key);
  }
  return os.str();
}

}  // namespace

std::string format(const SchurExpansion& f) {
  return join_signed(f, [](const Partition& p) { return "s" + bracket(p); });
}

std::string format(const SchubertExpansion& f) {
  // Every index is written in the smallest S_n containing all of them.
  int n = 0;
  for (const auto& [w, c] : f) n = std::max(n, w.size());
  const bool digits = n <= 9;
  return join_signed(f, [&](const Permutation& w) {
    if (w.is_identity() && n == 0) return std::string("S[1]");
    std::string s = "S[";
    const auto word = w.word(n);
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i && !digits) s += ',';
      s += std::to_string(word[i]);
    }
    return s + "]";
  });
}

std::string format(const QuantumClass& f) {
  return join_signed(f.terms(), [](const QuantumBasis& b) {
    std::string q;
    if (b.q_power == 1) q = "q ";
    if (b.q_power > 1) q = "q^" + std::to_string(b.q_power) + " ";
    return q + "σ" + bracket(b.partition);
  });
}

Partition parse_partition(std::string_view text) {
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) return Partition();
  std::vector<int> parts;
  std::string item;
  std::stringstream ss{std::string(text)};
  bool any = false;
  while (std::getline(ss, item, ',')) {
    any = true;
    std::string trimmed;
    for (char c : item) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    }
    if (trimmed.empty() || trimmed.size() > 9 ||
        !std::all_of(trimmed.begin(), trimmed.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw InvalidArgument("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(trimmed));
  }
  if (!any) return Partition();
  return Partition(std::move(parts));
}

}  // namespace mnrule
