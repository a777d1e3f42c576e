#include "mnrule/permutation.hpp"

#include "mnrule/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mnrule {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const auto m = one_line_.size();
  std::vector<bool> seen(m + 1, false);
  for (int v : one_line_) {
    if (v < 1 || static_cast<std::size_t>(v) > m || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("not a permutation of 1..m");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  while (!one_line_.empty() && one_line_.back() == static_cast<int>(one_line_.size())) one_line_.pop_back();
}

Permutation Permutation::transposition(int i, int j) {
  if (i < 1 || j < 1 || i == j) throw InvalidArgument("transposition needs two distinct positive points");
  return Permutation().times_transposition(i, j);
}

Permutation Permutation::cycle(const std::vector<int>& points) {
  if (points.empty()) return {};
  const int m = *std::max_element(points.begin(), points.end());
  if (*std::min_element(points.begin(), points.end()) < 1) throw InvalidArgument("cycle points must be positive");
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
  for (std::size_t t = 0; t < points.size(); ++t) {
    if (used[static_cast<std::size_t>(points[t])]) throw InvalidArgument("cycle repeats a point");
    used[static_cast<std::size_t>(points[t])] = true;
    w[static_cast<std::size_t>(points[t] - 1)] = points[(t + 1) % points.size()];
  }
  return Permutation(std::move(w));
}

Permutation Permutation::from_code(const std::vector<int>& code) {
  const int m = static_cast<int>(code.size());
  // Positions past the code have c_i = 0, so values beyond m + max(c) stay fixed.
  int n = m;
  for (int i = 0; i < m; ++i) {
    if (code[static_cast<std::size_t>(i)] < 0) throw InvalidArgument("negative Lehmer code entry");
    n = std::max(n, i + 1 + code[static_cast<std::size_t>(i)]);
  }
  std::vector<int> avail(static_cast<std::size_t>(n));
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> w;
  for (int i = 0; i < n; ++i) {
    const int c = i < m ? code[static_cast<std::size_t>(i)] : 0;
    w.push_back(avail[static_cast<std::size_t>(c)]);
    avail.erase(avail.begin() + c);
  }
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                 item.end());
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw InvalidArgument("malformed permutation '" + std::string(text) + "'");
      }
      values.push_back(std::stoi(item));
    }
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InvalidArgument("malformed permutation '" + std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const InvalidArgument&) {
    throw InvalidArgument("'" + std::string(text) + "' is not a one-line permutation word");
  }
}

std::vector<int> Permutation::word(int n) const {
  std::vector<int> w = one_line_;
  for (int i = size() + 1; i <= n; ++i) w.push_back(i);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    inv[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::times_transposition(int i, int j) const {
  auto w = word(std::max({i, j, size()}));
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(w));
}

std::vector<int> Permutation::code() const {
  std::vector<int> c(one_line_.size(), 0);
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    for (std::size_t j = i + 1; j < one_line_.size(); ++j) {
      if (one_line_[j] < one_line_[i]) ++c[i];
    }
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::string Permutation::to_string() const {
  if (one_line_.empty()) return "1";
  const bool digits = std::all_of(one_line_.begin(), one_line_.end(), [](int v) { return v <= 9; });
  std::ostringstream os;
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (!digits && i) os << ',';
    os << one_line_[i];
  }
  return os.str();
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.size(), v.size());
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(std::move(w));
}

int length(const Permutation& w) {
  const auto& a = w.one_line();
  int inv = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] > a[j]) ++inv;
    }
  }
  return inv;
}

bool ByLengthThenLex::operator()(const Permutation& a, const Permutation& b) const {
  const int la = length(a);
  const int lb = length(b);
  if (la != lb) return la < lb;
  // Compare as words in a common S_n so trailing fixed points do not matter.
  const int n = std::max(a.size(), b.size());
  return a.word(n) < b.word(n);
}

void validate(const LabeledCover& cover, int k) {
  if (!(cover.i >= 1 && cover.i <= k && k < cover.j)) throw std::logic_error("cover: need i <= k < j");
  if (cover.to != cover.from.times_transposition(cover.i, cover.j)) throw std::logic_error("cover: to != from*(i,j)");
  if (length(cover.to) != length(cover.from) + 1) throw std::logic_error("cover: length must rise by one");
  if (cover.label != cover.from(cover.i)) throw std::logic_error("cover: label != from(i)");
}

int default_support_bound(const Permutation& w, int k, int r) { return std::max(w.size(), k) + r; }

std::vector<LabeledCover> k_bruhat_covers(const Permutation& w, int k, int max_support) {
  if (k < 1) throw InvalidArgument("k must be positive");
  std::vector<LabeledCover> out;
  for (int i = 1; i <= std::min(k, max_support); ++i) {
    const int wi = w(i);
    // The smallest value above w(i) seen so far between i and j blocks every
    // later j with a larger value.
    int ceiling = std::numeric_limits<int>::max();
    for (int p = i + 1; p <= k; ++p) {
      if (w(p) > wi) ceiling = std::min(ceiling, w(p));
    }
    for (int j = k + 1; j <= max_support; ++j) {
      const int wj = w(j);
      if (wj > wi && wj < ceiling) {
        out.push_back({w, w.times_transposition(i, j), wi, i, j});
      }
      if (wj > wi) ceiling = std::min(ceiling, wj);
    }
  }
  return out;
}

namespace {

template <class Visit>
void walk_chains(const Permutation& w, int k, int r, int max_support, Chain& path, const Visit& visit) {
  if (static_cast<int>(path.size()) == r) {
    visit(path);
    return;
  }
  const Permutation& current = path.empty() ? w : path.back().to;
  for (auto& cover : k_bruhat_covers(current, k, max_support)) {
    path.push_back(std::move(cover));
    walk_chains(w, k, r, max_support, path, visit);
    path.pop_back();
  }
}

}  // namespace

std::vector<Chain> saturated_chains(const Permutation& w, int k, int r, int max_support, std::size_t cap) {
  if (r < 0) throw InvalidArgument("chain length must be nonnegative");
  std::vector<Chain> out;
  Chain path;
  walk_chains(w, k, r, max_support, path, [&](const Chain& c) {
    if (out.size() == cap) throw ResourceLimit("saturated_chains: more than " + std::to_string(cap) + " chains");
    out.push_back(c);
  });
  return out;
}

std::vector<Chain> chains_between(const Permutation& w, const Permutation& u, int k, int max_support,
                                  std::size_t cap) {
  const int r = length(u) - length(w);
  std::vector<Chain> out;
  if (r < 0) return out;
  Chain path;
  walk_chains(w, k, r, max_support, path, [&](const Chain& c) {
    const Permutation& end = c.empty() ? w : c.back().to;
    if (end != u) return;
    if (out.size() == cap) throw ResourceLimit("chains_between: more than " + std::to_string(cap) + " chains");
    out.push_back(c);
  });
  return out;
}

std::vector<int> labels(const Chain& chain) {
  std::vector<int> out;
  out.reserve(chain.size());
  for (const auto& c : chain) out.push_back(c.label);
  return out;
}

std::optional<int> peakless_shape(const std::vector<int>& labels) {
  if (labels.empty()) return std::nullopt;
  std::size_t a = 1;
  while (a < labels.size() && labels[a] < labels[a - 1]) ++a;
  for (std::size_t t = a; t < labels.size(); ++t) {
    if (labels[t] <= labels[t - 1]) return std::nullopt;
  }
  return static_cast<int>(a);
}

std::vector<std::pair<Permutation, int>> peakless_endpoints(const Permutation& w, int k, int a, int b,
                                                            int max_support) {
  if (a < 1 || b < 1) throw InvalidArgument("peakless chains need a, b >= 1");
  if (a > k) throw InvalidArgument("peakless chains need a <= k");
  const int r = a + b - 1;
  std::map<Permutation, int, ByLengthThenLex> ends;

  std::function<void(const Permutation&, int, int)> descend = [&](const Permutation& current, int step,
                                                                  int previous) {
    if (step == r) {
      ++ends[current];
      return;
    }
    for (const auto& cover : k_bruhat_covers(current, k, max_support)) {
      // Steps 1..a fall strictly, steps a+1..r rise strictly.
      if (step > 0) {
        const bool falling = step < a;
        if (falling ? cover.label >= previous : cover.label <= previous) continue;
      }
      descend(cover.to, step + 1, cover.label);
    }
  };
  descend(w, 0, 0);
  return {ends.begin(), ends.end()};
}

bool cycle_type_check(const Permutation& eta, int c) {
  const auto& a = eta.one_line();
  int moved = 0;
  int start = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != static_cast<int>(i) + 1) {
      ++moved;
      if (!start) start = static_cast<int>(i) + 1;
    }
  }
  if (moved != c || moved < 2) return false;
  int orbit = 1;
  for (int p = eta(start); p != start; p = eta(p)) ++orbit;
  return orbit == c;
}

int het(const Permutation& eta, int k) {
  int count = 0;
  for (int i = 1; i <= std::min(k, eta.size()); ++i) {
    if (eta(i) != i) ++count;
  }
  return count;
}

std::set<int> up_set(const Permutation& zeta) {
  std::set<int> out;
  for (int a = 1; a <= zeta.size(); ++a) {
    if (a < zeta(a)) out.insert(a);
  }
  return out;
}

Permutation grassmannian_permutation(const Partition& lambda, int k) {
  if (lambda.length() > k) throw InvalidArgument("partition has more than k rows");
  const int n = k + lambda[0];
  std::vector<int> w;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= k; ++i) {
    const int v = lambda[k - i] + i;
    w.push_back(v);
    used[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) w.push_back(v);
  }
  return Permutation(std::move(w));
}

std::optional<Partition> grassmannian_shape(const Permutation& w, int k) {
  for (int i = 1; i < std::max(w.size(), k + 1); ++i) {
    if (i != k && w(i) > w(i + 1)) return std::nullopt;
  }
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) parts.push_back(w(i) - i);
  return Partition(std::move(parts));
}

}  // namespace mnrule
