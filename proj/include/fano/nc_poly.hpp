#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

// Finite symbol set with a transpose pairing. The pairing must be an
// involution; symbols may be self-paired.
class Alphabet {
 public:
  // pairs: (symbol, its transpose). Unpaired symbols are self-transpose.
  Alphabet(std::vector<std::string> symbols,
           std::vector<std::pair<std::string, std::string>> transpose_pairs = {});

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  int index_of(std::string_view name) const;
  int transpose_of(int i) const { return involution_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
  std::vector<int> involution_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;
using Word = std::vector<int>;  // symbol indices; empty word = 1

// Noncommutative polynomial over an alphabet, with the transpose
// anti-automorphism: (uv)^t = v^t u^t, (u^t)^t = u.
class NCPoly {
 public:
  explicit NCPoly(AlphabetPtr alphabet);

  static NCPoly constant(AlphabetPtr alphabet, const Rational& c);
  static NCPoly symbol(AlphabetPtr alphabet, std::string_view name);
  static NCPoly word(AlphabetPtr alphabet, const std::vector<std::string>& names,
                     const Rational& c = 1);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

  NCPoly scaled(const Rational& k) const;
  NCPoly transpose() const;

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return *a.alpha_ == *b.alpha_ && a.terms_ == b.terms_;
  }

  std::string str() const;
  static std::string word_str(const Alphabet& alphabet, const Word& w);

  void add_term(const Word& w, const Rational& c);

 private:
  AlphabetPtr alpha_;
  std::map<Word, Rational> terms_;
};

// One oriented rule: an exact subword match of `lhs` is replaced by `rhs`.
// Every term of `rhs` must be no longer than `lhs` (degree-nonincreasing).
struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

class RewriteSystem {
 public:
  RewriteSystem(AlphabetPtr alphabet, std::vector<RewriteRule> rules, int max_passes = 10000);

  // Convenience: rules given as (word of symbol names, rhs).
  static RewriteSystem make(AlphabetPtr alphabet,
                            std::vector<std::pair<std::vector<std::string>, NCPoly>> rules,
                            int max_passes = 10000);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int max_passes() const { return max_passes_; }

 private:
  AlphabetPtr alpha_;
  std::vector<RewriteRule> rules_;
  int max_passes_;
};

// Raised when a term fails to reach a normal form within the pass budget.
struct rewrite_limit_error : error {
  std::string offending_term;
  rewrite_limit_error(const std::string& term, int passes)
      : error("rewriting did not terminate within " + std::to_string(passes) +
              " passes; offending term: " + term),
        offending_term(term) {}
};

// Exhaustive leftmost rewriting to a fixed point. Deterministic for a fixed
// rule order: at each step the leftmost matching position is rewritten, and
// the first rule (in rule order) matching there is applied.
NCPoly nc_normalize(const NCPoly& p, const RewriteSystem& rules);

}  // namespace fano
