#include "uea/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>

namespace uea {

std::vector<std::vector<Factor>> enumerate_window_factors(const GradedWindow& w, const CurrentAlgebra& g) {
  w.require_finite();
  if (w.variant != g.variant()) throw Error(Errc::VariantMismatch, "window variant differs from the algebra");
  const auto gens = enumerate_generators(w, g);
  std::vector<std::vector<Factor>> out;
  std::vector<Factor> current;

  const bool loop = w.variant == Variant::Loop;
  const int reach = loop ? std::max(std::abs(w.r_range->first), std::abs(w.r_range->second)) : 0;

  std::function<void(std::size_t, int, int)> rec = [&](std::size_t pos, int xdeg, int budget_used) {
    if (loop) {
      int remaining = w.len_max - budget_used;
      if (std::abs(w.xdeg - xdeg) > remaining * reach) return;
    }
    if (pos == gens.size()) {
      if (xdeg == w.xdeg) out.push_back(current);
      return;
    }
    rec(pos + 1, xdeg, budget_used);
    const GeneratorId& gen = gens[pos];
    const unsigned max_exp = is_odd(g.parity(gen)) ? 1u : ~0u;
    const int cost = loop ? 1 : gen.r + 1;
    for (unsigned e = 1; e <= max_exp; ++e) {
      int used = budget_used + cost * static_cast<int>(e);
      if (used > (loop ? w.len_max : w.filt_max)) break;
      int x = xdeg + gen.r * static_cast<int>(e);
      if (!loop && x > w.xdeg) break;
      current.push_back({gen, e});
      rec(pos + 1, x, used);
      current.pop_back();
    }
  };
  if (loop || (w.xdeg >= 0 && w.filt_max >= 0)) rec(0, 0, 0);

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto len = [](const std::vector<Factor>& f) {
      unsigned n = 0;
      for (const auto& x : f) n += x.exp;
      return n;
    };
    if (len(a) != len(b)) return len(a) < len(b);
    return a < b;
  });
  return out;
}

std::string format_factors(const CurrentAlgebra& g, const std::vector<Factor>& factors) {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " * ";
    s += g.format(f.gen);
    if (f.exp != 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

namespace {

class TermParser {
 public:
  TermParser(const CurrentAlgebra& g, std::string_view text) : g_{g}, text_{text} {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> out;
    skip();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = get() == '-';
    for (;;) {
      out.push_back(term(negate));
      skip();
      if (pos_ == text_.size()) break;
      char c = get();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negate = c == '-';
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  ParsedTerm term(bool negate) {
    ParsedTerm t{Scalar::one(g_.field()), {}};
    skip();
    if (peek() == '-') {
      get();
      negate = !negate;
    }
    if (negate) t.coeff = -t.coeff;
    for (;;) {
      skip();
      factor(t);
      skip();
      if (peek() != '*') break;
      get();
    }
    return t;
  }

  void factor(ParsedTerm& t) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      t.coeff *= Scalar::parse(g_.field(), text_.substr(start, pos_ - start));
      return;
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected a scalar or a generator");
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
    if (get() != ']') fail("unterminated generator");
    GeneratorId id = g_.parse_generator(text_.substr(start, pos_ - start));
    unsigned exp = 1;
    skip();
    if (peek() == '^') {
      get();
      skip();
      std::size_t s = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (s == pos_) fail("expected an exponent");
      exp = static_cast<unsigned>(std::stoul(std::string(text_.substr(s, pos_ - s))));
    }
    if (exp > 0) t.word.emplace_back(id, exp);
  }

  const CurrentAlgebra& g_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(const CurrentAlgebra& g, std::string_view text) {
  return TermParser{g, text}.parse();
}

}  // namespace uea
