#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pptower/snf.hpp"

namespace pptower::lie {

// One generator of a free Lie algebra: an opaque ordered symbol carrying a
// multidegree and a connectivity tag. The order of the letters in an
// Alphabet is the total order used for Lyndon comparisons.
struct Generator {
  std::string label;
  std::vector<int> multidegree;
  int connectivity = 0;
};

struct Alphabet {
  std::vector<Generator> letters;
  std::size_t size() const { return letters.size(); }
};

// Letter indices into an alphabet. A word is Lyndon if it is strictly
// smaller than every proper rotation of itself.
using LyndonWord = std::vector<int>;

bool is_lyndon(std::span<const int> word);

// All Lyndon words of length <= max_len over q letters, in (length, lex)
// order.
std::vector<LyndonWord> lyndon_words(int q, int max_len);

// Lyndon word with its standard-factorization bracketing: w = uv with v the
// lexicographically least (equivalently the longest Lyndon) proper suffix,
// bracketed as [bracket(u), bracket(v)], recursively.
class HallWord {
 public:
  struct Node {
    int letter = -1;  // leaf if >= 0
    int left = -1;
    int right = -1;
  };

  explicit HallWord(LyndonWord word);

  const LyndonWord& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  std::map<int, int> letter_multiplicities() const;
  std::vector<int> multidegree(const Alphabet& a) const;

  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }

  // Nested [u,v] rendering with the given letter names.
  std::string render(const std::function<std::string(int)>& letter_name) const;

 private:
  int build(int begin, int end);
  LyndonWord word_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

HallWord standard_bracketing(LyndonWord word);

// Number of Lyndon words of length n over q letters:
// (1/n) sum_{d | n} mu(d) q^{n/d}.
Int witt_count(int q, int n);

// Number of Lyndon words whose letter-multiplicity vector is exactly the
// given degree: (1/n) sum_{d | gcd(degree)} mu(d) (n/d)! / prod (degree_i/d)!
// with n the total degree.
Int multigraded_witt(std::span<const int> degree);

// Every Hall word using letter l at most caps[l] times; exhaustive because
// any such word has length at most sum(caps). (length, lex) order.
std::vector<HallWord> bounded_words(const Alphabet& a, std::span<const int> caps);

// Pruned traversal of the Duval tree of prenecklaces. push() is called as a
// letter is appended; returning false skips the whole subtree (so the
// feasibility predicate must be monotone under extension). pop() undoes the
// matching push. lyndon() fires for every Lyndon prefix encountered.
class PrefixVisitor {
 public:
  virtual ~PrefixVisitor() = default;
  virtual bool push(int letter) = 0;
  virtual void pop() = 0;
  virtual void lyndon(std::span<const int> word) = 0;
};

void enumerate_lyndon(int q, int max_len, PrefixVisitor& visitor);

class enumeration_cap_exceeded : public std::runtime_error {
 public:
  explicit enumeration_cap_exceeded(std::uint64_t cap)
      : std::runtime_error("word enumeration exceeded the safety cap of " + std::to_string(cap) +
                           "; raise the cap to proceed"),
        cap(cap) {}
  std::uint64_t cap;
};

}  // namespace pptower::lie
