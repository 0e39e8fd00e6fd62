#include "fano/nc_poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fano {

Alphabet::Alphabet(std::vector<std::string> symbols,
                   std::vector<std::pair<std::string, std::string>> transpose_pairs)
    : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw error("empty symbol name");
    if (!seen.insert(s).second) throw error("duplicate symbol '" + s + "'");
  }
  involution_.resize(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i) involution_[i] = static_cast<int>(i);
  for (const auto& [a, b] : transpose_pairs) {
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) throw error("transpose pair over unknown symbols");
    involution_[static_cast<std::size_t>(ia)] = ib;
    involution_[static_cast<std::size_t>(ib)] = ia;
  }
  for (std::size_t i = 0; i < involution_.size(); ++i) {
    int j = involution_[i];
    if (involution_[static_cast<std::size_t>(j)] != static_cast<int>(i))
      throw error("transpose table is not an involution");
  }
}

int Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return static_cast<int>(i);
  return -1;
}

NCPoly::NCPoly(AlphabetPtr alphabet) : alpha_(std::move(alphabet)) {
  if (!alpha_) throw error("nc polynomial without alphabet");
}

NCPoly NCPoly::constant(AlphabetPtr alphabet, const Rational& c) {
  NCPoly p(std::move(alphabet));
  p.add_term({}, c);
  return p;
}

NCPoly NCPoly::symbol(AlphabetPtr alphabet, std::string_view name) {
  NCPoly p(std::move(alphabet));
  int i = p.alpha_->index_of(name);
  if (i < 0) throw error("unknown symbol '" + std::string(name) + "'");
  p.add_term({i}, 1);
  return p;
}

NCPoly NCPoly::word(AlphabetPtr alphabet, const std::vector<std::string>& names,
                    const Rational& c) {
  NCPoly p(std::move(alphabet));
  Word w;
  for (const auto& n : names) {
    int i = p.alpha_->index_of(n);
    if (i < 0) throw error("unknown symbol '" + n + "'");
    w.push_back(i);
  }
  p.add_term(w, c);
  return p;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r(alpha_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (!(*alpha_ == *o.alpha_)) throw error("mismatched alphabets");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (!(*alpha_ == *o.alpha_)) throw error("mismatched alphabets");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  if (!(*a.alpha_ == *b.alpha_)) throw error("mismatched alphabets");
  NCPoly r(a.alpha_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

NCPoly NCPoly::scaled(const Rational& k) const {
  NCPoly r(alpha_);
  if (k.is_zero()) return r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * k);
  return r;
}

NCPoly NCPoly::transpose() const {
  NCPoly r(alpha_);
  for (const auto& [w, c] : terms_) {
    Word t(w.rbegin(), w.rend());
    for (int& s : t) s = alpha_->transpose_of(s);
    r.add_term(t, c);
  }
  return r;
}

std::string NCPoly::word_str(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += alphabet.name(w[i]);
  }
  return s;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    Rational a = c.abs();
    if (a != Rational(1) || w.empty()) {
      os << a.str();
      if (!w.empty()) os << "*";
    }
    if (!w.empty()) os << word_str(*alpha_, w);
  }
  return os.str();
}

RewriteSystem::RewriteSystem(AlphabetPtr alphabet, std::vector<RewriteRule> rules, int max_passes)
    : alpha_(std::move(alphabet)), rules_(std::move(rules)), max_passes_(max_passes) {
  if (max_passes_ <= 0) throw error("max passes must be positive");
  for (const auto& r : rules_) {
    if (r.lhs.empty()) throw error("rewrite rule with empty left-hand side");
    if (!(*r.rhs.alphabet() == *alpha_)) throw error("rule alphabet mismatch");
    for (int s : r.lhs)
      if (s < 0 || static_cast<std::size_t>(s) >= alpha_->size())
        throw error("rule refers to unknown symbol");
    for (const auto& [w, c] : r.rhs.terms())
      if (w.size() > r.lhs.size())
        throw error("rewrite rule increases degree: " + NCPoly::word_str(*alpha_, r.lhs) +
                    " -> " + r.rhs.str());
  }
}

RewriteSystem RewriteSystem::make(AlphabetPtr alphabet,
                                  std::vector<std::pair<std::vector<std::string>, NCPoly>> rules,
                                  int max_passes) {
  std::vector<RewriteRule> rs;
  for (auto& [names, rhs] : rules) {
    Word w;
    for (const auto& n : names) {
      int i = alphabet->index_of(n);
      if (i < 0) throw error("unknown symbol '" + n + "'");
      w.push_back(i);
    }
    rs.push_back({std::move(w), std::move(rhs)});
  }
  return RewriteSystem(alphabet, std::move(rs), max_passes);
}

namespace {

// Leftmost match: smallest start position wins; ties go to rule order.
struct Match {
  std::size_t pos;
  std::size_t rule;
};

bool find_match(const Word& w, const std::vector<RewriteRule>& rules, Match& out) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const Word& lhs = rules[r].lhs;
      if (pos + lhs.size() > w.size()) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<long>(pos))) {
        out = {pos, r};
        return true;
      }
    }
  }
  return false;
}

}  // namespace

NCPoly nc_normalize(const NCPoly& p, const RewriteSystem& rules) {
  if (!(*p.alphabet() == *rules.alphabet())) throw error("polynomial alphabet not in rewrite system");
  NCPoly out(p.alphabet());
  // Each pending term carries the pass budget left for its lineage.
  struct Pending {
    Word w;
    Rational c;
    int budget;
  };
  std::vector<Pending> stack;
  for (const auto& [w, c] : p.terms()) stack.push_back({w, c, rules.max_passes()});
  while (!stack.empty()) {
    Pending t = std::move(stack.back());
    stack.pop_back();
    Match m{};
    if (!find_match(t.w, rules.rules(), m)) {
      out.add_term(t.w, t.c);
      continue;
    }
    if (t.budget == 0) throw rewrite_limit_error(NCPoly::word_str(*p.alphabet(), t.w),
                                                 rules.max_passes());
    const RewriteRule& rule = rules.rules()[m.rule];
    Word prefix(t.w.begin(), t.w.begin() + static_cast<long>(m.pos));
    Word suffix(t.w.begin() + static_cast<long>(m.pos + rule.lhs.size()), t.w.end());
    for (const auto& [rw, rc] : rule.rhs.terms()) {
      Word nw = prefix;
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), suffix.begin(), suffix.end());
      stack.push_back({std::move(nw), t.c * rc, t.budget - 1});
    }
  }
  return out;
}

}  // namespace fano
