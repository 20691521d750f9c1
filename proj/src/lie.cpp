#include "pptower/lie.hpp"

#include <algorithm>
#include <numeric>

namespace pptower::lie {

bool is_lyndon(std::span<const int> word) {
  const std::size_t n = word.size();
  if (n == 0) return false;
  // strictly smaller than every proper rotation
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      int a = word[i];
      int b = word[(i + r) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal to a proper rotation: periodic
    }
  }
  return true;
}

namespace {

struct CollectingVisitor final : PrefixVisitor {
  std::vector<LyndonWord>* out;
  std::vector<int> prefix;
  bool push(int letter) override {
    prefix.push_back(letter);
    return true;
  }
  void pop() override { prefix.pop_back(); }
  void lyndon(std::span<const int> word) override { out->emplace_back(word.begin(), word.end()); }
};

void duval_rec(std::vector<int>& a, int t, int p, int q, int max_len, PrefixVisitor& visitor) {
  if (t > max_len) return;
  // a[0] = 0 sentinel; positions 1..t-1 hold the current prenecklace.
  for (int c = a[t - p]; c < q; ++c) {
    a[t] = c;
    int np = (c == a[t - p]) ? p : t;
    if (!visitor.push(c)) {
      visitor.pop();
      continue;
    }
    if (np == t) visitor.lyndon(std::span<const int>(a.data() + 1, static_cast<std::size_t>(t)));
    duval_rec(a, t + 1, np, q, max_len, visitor);
    visitor.pop();
  }
}

}  // namespace

void enumerate_lyndon(int q, int max_len, PrefixVisitor& visitor) {
  if (q <= 0 || max_len <= 0) return;
  std::vector<int> a(static_cast<std::size_t>(max_len) + 1, 0);
  duval_rec(a, 1, 1, q, max_len, visitor);
}

std::vector<LyndonWord> lyndon_words(int q, int max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  std::vector<LyndonWord> out;
  CollectingVisitor v;
  v.out = &out;
  enumerate_lyndon(q, max_len, v);
  std::sort(out.begin(), out.end(), [](const LyndonWord& a, const LyndonWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

HallWord::HallWord(LyndonWord word) : word_(std::move(word)) {
  if (!is_lyndon(word_)) throw std::invalid_argument("word is not Lyndon");
  nodes_.reserve(2 * word_.size());
  root_ = build(0, static_cast<int>(word_.size()));
}

int HallWord::build(int begin, int end) {
  if (end - begin == 1) {
    nodes_.push_back(Node{word_[begin], -1, -1});
    return static_cast<int>(nodes_.size()) - 1;
  }
  // Standard factorization: split before the lexicographically least proper
  // suffix.
  int split = begin + 1;
  for (int s = begin + 2; s < end; ++s) {
    if (std::lexicographical_compare(word_.begin() + s, word_.begin() + end,
                                     word_.begin() + split, word_.begin() + end)) {
      split = s;
    }
  }
  int left = build(begin, split);
  int right = build(split, end);
  nodes_.push_back(Node{-1, left, right});
  return static_cast<int>(nodes_.size()) - 1;
}

std::map<int, int> HallWord::letter_multiplicities() const {
  std::map<int, int> out;
  for (int l : word_) ++out[l];
  return out;
}

std::vector<int> HallWord::multidegree(const Alphabet& a) const {
  std::vector<int> out;
  for (int l : word_) {
    const std::vector<int>& d = a.letters.at(static_cast<std::size_t>(l)).multidegree;
    if (out.size() < d.size()) out.resize(d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) out[i] += d[i];
  }
  return out;
}

std::string HallWord::render(const std::function<std::string(int)>& letter_name) const {
  std::function<std::string(int)> rec = [&](int node) -> std::string {
    const Node& n = nodes_[static_cast<std::size_t>(node)];
    if (n.letter >= 0) return letter_name(n.letter);
    return "[" + rec(n.left) + "," + rec(n.right) + "]";
  };
  return rec(root_);
}

HallWord standard_bracketing(LyndonWord word) { return HallWord(std::move(word)); }

namespace {

int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

Int factorial(int n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

Int witt_count(int q, int n) {
  if (q < 1 || n < 1) throw std::invalid_argument("witt_count needs q >= 1, n >= 1");
  Int sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    Int power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(n / d));
    sum += mu * power;
  }
  return sum / n;
}

Int multigraded_witt(std::span<const int> degree) {
  int n = 0, g = 0;
  for (int d : degree) {
    if (d < 0) throw std::invalid_argument("degree entries must be nonnegative");
    n += d;
    g = std::gcd(g, d);
  }
  if (n == 0) throw std::invalid_argument("total degree must be positive");
  Int sum = 0;
  for (int d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    Int term = factorial(n / d);
    for (int di : degree) {
      if (di > 0) term /= factorial(di / d);
    }
    sum += mu * term;
  }
  return sum / n;
}

namespace {

// push() applies before testing feasibility; pop() always follows, so state
// stays balanced whether or not the subtree was explored.
struct CapsVisitor final : PrefixVisitor {
  std::span<const int> caps;
  std::vector<int> counts;
  std::vector<int> stack;
  std::vector<LyndonWord>* out;
  bool push(int letter) override {
    stack.push_back(letter);
    return ++counts[static_cast<std::size_t>(letter)] <= caps[static_cast<std::size_t>(letter)];
  }
  void pop() override {
    --counts[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
  }
  void lyndon(std::span<const int> word) override { out->emplace_back(word.begin(), word.end()); }
};

}  // namespace

std::vector<HallWord> bounded_words(const Alphabet& a, std::span<const int> caps) {
  if (caps.size() != a.size()) throw std::invalid_argument("one cap per letter required");
  long total = 0;
  for (int c : caps) {
    if (c < 0) throw std::invalid_argument("caps must be nonnegative");
    total += c;
  }
  std::vector<LyndonWord> words;
  if (total > 0) {
    CapsVisitor v;
    v.caps = caps;
    v.counts.assign(a.size(), 0);
    v.out = &words;
    enumerate_lyndon(static_cast<int>(a.size()), static_cast<int>(total), v);
  }
  std::sort(words.begin(), words.end(), [](const LyndonWord& x, const LyndonWord& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::vector<HallWord> out;
  out.reserve(words.size());
  for (LyndonWord& w : words) out.emplace_back(std::move(w));
  return out;
}

}  // namespace pptower::lie
