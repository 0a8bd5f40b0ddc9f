#pragma once

// Small expression readers for the command line.
//
// Anyspace expressions:  expr := term (('+'|'-') term)*,  term := power (('*'|'·') power)*,
//                        power := unary ('^' k)?,  unary := '-' unary | atom,
//                        atom := integer | 'z' | 't' index | '(' expr ')'.
// 'z' is zeta_n and t1..tm are the slots of the braided tensor power.
//
// Words in U(L):  sums of terms "coeff*a*b" where generators are matched by
// longest basis name first, so labels such as "b+" or "x[1,2]" read as one
// symbol. Coefficients are integers, rationals p/q or z^k.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "anyonic/anyspace.hpp"
#include "anyonic/envelope.hpp"
#include "anyonic/errors.hpp"

namespace anyonic {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool eat(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  long long integer() {
    skip_space();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 100'000'000) fail("integer too large");
      v = v * 10 + (text_[pos_++] - '0');
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }
  std::string_view rest() const { return text_.substr(pos_); }
  void advance(std::size_t n) { pos_ += n; }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("column " + std::to_string(pos_ + 1), what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class ThetaParser {
 public:
  ThetaParser(std::string_view text, int n, int vars) : cur_(text), n_(n), vars_(vars) {}

  ThetaPoly parse() {
    ThetaPoly p = expr();
    if (!cur_.done()) cur_.fail("unexpected input");
    return p;
  }

 private:
  ThetaPoly expr() {
    ThetaPoly acc = term();
    while (true) {
      if (cur_.eat("+")) {
        acc += term();
      } else if (cur_.eat("-")) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  ThetaPoly term() {
    ThetaPoly acc = power();
    while (cur_.eat("*") || cur_.eat("·")) acc = tp_mul(acc, power());
    return acc;
  }
  ThetaPoly power() {
    ThetaPoly base = unary();
    if (cur_.eat("^")) return tp_pow(base, static_cast<int>(cur_.integer()));
    return base;
  }
  ThetaPoly unary() {
    if (cur_.eat("-")) return CycNum(-1) * unary();
    return atom();
  }
  ThetaPoly atom() {
    if (cur_.eat("(")) {
      ThetaPoly inner = expr();
      if (!cur_.eat(")")) cur_.fail("expected ')'");
      return inner;
    }
    if (cur_.peek_digit()) return CycNum(static_cast<long>(cur_.integer())) * ThetaPoly::one(n_, vars_);
    if (cur_.eat("z")) return root_of_unity(n_, 1) * ThetaPoly::one(n_, vars_);
    if (cur_.eat("t")) {
      const long long slot = cur_.peek_digit() ? cur_.integer() : 1;
      if (slot < 1 || slot > vars_) cur_.fail("slot t" + std::to_string(slot) + " out of range");
      return ThetaPoly::theta(n_, vars_, static_cast<int>(slot - 1));
    }
    cur_.fail("expected a number, z, t<k> or '('");
  }

  Cursor cur_;
  int n_;
  int vars_;
};

/// Largest k with "t<k>" in the text, at least 1.
inline int max_theta_slot(std::string_view text) {
  int best = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 't') continue;
    std::size_t j = i + 1;
    int v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 1000) v = v * 10 + (text[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

}  // namespace detail

/// Parses an anyspace expression; vars = 0 picks the largest slot mentioned.
inline ThetaPoly parse_theta(std::string_view text, int n, int vars = 0) {
  if (vars <= 0) vars = detail::max_theta_slot(text);
  return detail::ThetaParser(text, n, vars).parse();
}

/// Parses a polynomial in the generators of U(L). `n` is the order used for z.
inline Poly parse_word_poly(std::string_view text, const std::vector<std::string>& names, int n) {
  std::vector<int> by_length(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) by_length[i] = static_cast<int>(i);
  std::ranges::stable_sort(by_length, [&](int a, int b) {
    return names[static_cast<std::size_t>(a)].size() > names[static_cast<std::size_t>(b)].size();
  });

  detail::Cursor cur(text);
  auto match_name = [&]() -> std::optional<int> {
    cur.skip_space();
    for (int g : by_length) {
      const auto& name = names[static_cast<std::size_t>(g)];
      if (!name.empty() && cur.rest().substr(0, name.size()) == name) {
        cur.advance(name.size());
        return g;
      }
    }
    return std::nullopt;
  };
  auto coefficient = [&]() -> std::optional<CycNum> {
    if (cur.peek_digit()) {
      Rational r(static_cast<long>(cur.integer()));
      if (cur.eat("/")) {
        const long long den = cur.integer();
        if (den == 0) cur.fail("zero denominator");
        r /= Rational(static_cast<long>(den));
      }
      return CycNum(r);
    }
    if (cur.eat("z")) {
      long long k = 1;
      if (cur.eat("^")) {
        const bool neg = cur.eat("-");
        k = cur.integer();
        if (neg) k = -k;
      }
      return root_of_unity(n, k);
    }
    return std::nullopt;
  };

  Poly total;
  bool first = true;
  while (!cur.done()) {
    CycNum sign = 1;
    if (cur.eat("-")) {
      sign = -1;
    } else if (!cur.eat("+") && !first) {
      cur.fail("expected '+' or '-' between terms");
    }
    first = false;
    CycNum coeff = sign;
    Word word;
    bool any = false;
    while (true) {
      cur.skip_space();
      if (auto g = match_name()) {
        word.push_back(*g);
        any = true;
      } else if (auto c = coefficient()) {
        coeff *= *c;
        any = true;
      } else {
        break;
      }
      if (!cur.eat("*") && !cur.eat("·")) {
        // Juxtaposition continues the product unless a term separator follows.
        cur.skip_space();
        const auto r = cur.rest();
        if (r.empty() || r.starts_with("+") || r.starts_with("-")) break;
      }
    }
    if (!any) cur.fail("expected a generator name or coefficient");
    total.add(word, coeff);
  }
  return total;
}

}  // namespace anyonic
