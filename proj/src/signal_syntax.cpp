#include "xformlab/signal_syntax.hpp"

#include <optional>

#include "lexer.hpp"

namespace xformlab {

namespace {

using detail::Token;
using detail::TokenCursor;
using detail::TokenKind;

class SignalParser {
 public:
  explicit SignalParser(std::string_view text) : cur_{detail::tokenize(text)} {}

  SignalExpr parse_all() {
    SignalExpr f = parse_sum();
    if (!cur_.at_end()) cur_.fail("expected '+', '-' or end of signal");
    return f;
  }

  GaussianRational parse_gaussian_all() {
    bool negative = cur_.accept_symbol('-');
    auto z = parse_gaussian_literal();
    if (!z) cur_.fail("expected a number");
    GaussianRational value = negative ? -*z : *z;
    if (cur_.is_symbol('+') || cur_.is_symbol('-')) {
      const bool minus = cur_.next().text[0] == '-';
      auto w = parse_gaussian_literal();
      if (!w) cur_.fail("expected a number");
      value += minus ? -*w : *w;
    }
    if (!cur_.at_end()) cur_.fail("unexpected trailing input");
    return value;
  }

 private:
  SignalExpr parse_sum() {
    std::vector<SignalExpr> terms;
    terms.push_back(parse_term());
    while (cur_.is_symbol('+') || cur_.is_symbol('-')) {
      const Token& op = cur_.next();
      if (cur_.at_end() || cur_.is_symbol('+') || cur_.is_symbol(')')) {
        TokenCursor::fail_at(op, "expected a signal after '" + op.text + "'");
      }
      SignalExpr t = parse_term();
      terms.push_back(op.text == "-" ? scale(-1, std::move(t)) : std::move(t));
    }
    if (terms.size() == 1) return terms.front();
    return sum(std::move(terms));
  }

  SignalExpr parse_term() {
    const bool negative = cur_.accept_symbol('-');
    std::optional<GaussianRational> coeff = try_coefficient();
    SignalExpr f = parse_factor();
    if (coeff) return scale(negative ? -*coeff : *coeff, std::move(f));
    if (negative) return scale(-1, std::move(f));
    return f;
  }

  /// A Gaussian literal followed by '*'; rewinds when the input is not one.
  std::optional<GaussianRational> try_coefficient() {
    const std::size_t mark = cur_.position();
    std::optional<GaussianRational> z;
    if (cur_.is_symbol('(')) {
      z = try_paren_gaussian();
    } else {
      z = parse_gaussian_literal();
    }
    if (z && cur_.accept_symbol('*')) return z;
    cur_.rewind(mark);
    return std::nullopt;
  }

  std::optional<GaussianRational> try_paren_gaussian() {
    const std::size_t mark = cur_.position();
    try {
      cur_.expect_symbol('(', "'('");
      const bool negative = cur_.accept_symbol('-');
      auto z = parse_gaussian_literal();
      if (!z) throw SyntaxError("", 0, 0);
      GaussianRational value = negative ? -*z : *z;
      if (cur_.is_symbol('+') || cur_.is_symbol('-')) {
        const bool minus = cur_.next().text[0] == '-';
        auto w = parse_gaussian_literal();
        if (!w) throw SyntaxError("", 0, 0);
        value += minus ? -*w : *w;
      }
      cur_.expect_symbol(')', "')'");
      return value;
    } catch (const SyntaxError&) {
      cur_.rewind(mark);
      return std::nullopt;
    }
  }

  /// number ['/' number] ['i'] | 'i'
  std::optional<GaussianRational> parse_gaussian_literal() {
    if (cur_.is_ident("i")) {
      cur_.next();
      return GaussianRational::i();
    }
    if (cur_.peek().kind != TokenKind::Number) return std::nullopt;
    Rational q = detail::number_value(cur_.next().text);
    if (cur_.is_symbol('/') && cur_.peek(1).kind == TokenKind::Number) {
      cur_.next();
      const Token& d = cur_.next();
      const Rational den = detail::number_value(d.text);
      if (sgn(den) == 0) TokenCursor::fail_at(d, "zero denominator");
      q /= den;
    }
    if (cur_.is_ident("i")) {
      cur_.next();
      return GaussianRational{Rational{0}, q};
    }
    return GaussianRational{q};
  }

  SignalExpr parse_factor() {
    const Token& head = cur_.peek();
    if (cur_.is_ident("causal") || cur_.is_ident("twosided")) {
      cur_.next();
      const Support support = head.text == "causal" ? Support::Causal : Support::TwoSidedEven;
      const Token& open = cur_.expect_symbol('(', "'(' after '" + head.text + "'");
      Atom atom = parse_body(support);
      expect_close(open);
      while (cur_.is_symbol('*') && (cur_.is_ident("sin", 1) || cur_.is_ident("cos", 1))) {
        cur_.next();
        merge_osc(atom, parse_osc(support));
      }
      return make_atom(std::move(atom));
    }
    if (cur_.is_ident("reverse")) {
      cur_.next();
      const Token& open = cur_.expect_symbol('(', "'(' after 'reverse'");
      SignalExpr inner = parse_sum();
      expect_close(open);
      return reverse(std::move(inner));
    }
    if (cur_.is_symbol('(')) {
      cur_.next();
      SignalExpr inner = parse_sum();
      expect_close(head);
      return inner;
    }
    cur_.fail("expected 'causal(', 'twosided(', 'reverse(' or '('");
  }

  void expect_close(const Token& open) {
    if (!cur_.is_symbol(')')) {
      if (cur_.at_end()) TokenCursor::fail_at(open, "unbalanced parenthesis: '(' is never closed");
      cur_.fail("expected ')'");
    }
    cur_.next();
  }

  Atom parse_body(Support support) {
    Atom atom;
    atom.support = support;
    bool any = false;
    do {
      if (cur_.peek().kind == TokenKind::Number && cur_.peek().text == "1") {
        cur_.next();
      } else if (cur_.is_ident("t") || cur_.is_ident("abs")) {
        parse_time_var(support);
        unsigned power = 1;
        if (cur_.accept_symbol('^')) {
          if (cur_.peek().kind != TokenKind::Number || cur_.peek().text.find('.') != std::string::npos) {
            cur_.fail("expected an integer exponent");
          }
          power = static_cast<unsigned>(std::stoul(cur_.next().text));
        }
        atom.degree += power;
      } else if (cur_.is_ident("exp")) {
        cur_.next();
        cur_.expect_symbol('(', "'(' after 'exp'");
        atom.rate += parse_rate(support);
        cur_.expect_symbol(')', "')'");
      } else if (cur_.is_ident("sin") || cur_.is_ident("cos")) {
        merge_osc(atom, parse_osc(support));
      } else {
        cur_.fail("expected '1', 't', 'exp(', 'sin(' or 'cos('");
      }
      any = true;
    } while (cur_.accept_symbol('*'));
    if (!any) cur_.fail("empty signal body");
    return atom;
  }

  void parse_time_var(Support support) {
    if (cur_.is_ident("t")) {
      cur_.next();
      return;
    }
    const Token& abs_tok = cur_.expect_ident("abs");
    if (support != Support::TwoSidedEven) TokenCursor::fail_at(abs_tok, "abs(t) is only allowed inside twosided(...)");
    cur_.expect_symbol('(', "'(' after 'abs'");
    cur_.expect_ident("t");
    cur_.expect_symbol(')', "')'");
  }

  /// [-] [coeff '*'] tvar
  GaussianRational parse_rate(Support support) {
    const bool negative = cur_.accept_symbol('-');
    GaussianRational c{1};
    if (!(cur_.is_ident("t") || cur_.is_ident("abs"))) {
      std::optional<GaussianRational> z = cur_.is_symbol('(') ? try_paren_gaussian() : parse_gaussian_literal();
      if (!z) cur_.fail("expected a rate coefficient");
      cur_.expect_symbol('*', "'*' before the time variable");
      c = *z;
    }
    parse_time_var(support);
    return negative ? -c : c;
  }

  Oscillation parse_osc(Support support) {
    const Token& head = cur_.next();
    Oscillation osc;
    osc.kind = head.text == "sin" ? OscKind::Sin : OscKind::Cos;
    cur_.expect_symbol('(', "'(' after '" + head.text + "'");
    const bool negative = cur_.accept_symbol('-');
    Rational w{1};
    if (!(cur_.is_ident("t") || cur_.is_ident("abs"))) {
      auto z = parse_gaussian_literal();
      if (!z || !z->is_real()) cur_.fail("expected a real rational frequency");
      cur_.expect_symbol('*', "'*' before the time variable");
      w = z->re();
    }
    parse_time_var(support);
    expect_close(head);
    osc.freq = negative ? Rational{-w} : w;
    return osc;
  }

  void merge_osc(Atom& atom, const Oscillation& osc) {
    if (atom.osc.kind != OscKind::None) cur_.fail("at most one sin/cos factor per atom");
    atom.osc = osc;
  }

  TokenCursor cur_;
};

std::string rate_text(const GaussianRational& c) {
  return c.is_real() ? to_string(c) : "(" + to_string(c) + ")";
}

std::string atom_text(const Atom& a) {
  const std::string tvar = a.support == Support::Causal ? "t" : "abs(t)";
  std::string body;
  auto add = [&body](const std::string& f) { body += (body.empty() ? "" : "*") + f; };
  if (a.degree == 1) add(tvar);
  if (a.degree > 1) add(tvar + "^" + std::to_string(a.degree));
  if (!a.rate.is_zero()) add("exp(" + rate_text(a.rate) + "*" + tvar + ")");
  if (a.osc.kind != OscKind::None) {
    add(std::string{a.osc.kind == OscKind::Sin ? "sin(" : "cos("} + to_string(a.osc.freq) + "*" + tvar + ")");
  }
  if (body.empty()) body = "1";
  return (a.support == Support::Causal ? "causal(" : "twosided(") + body + ")";
}

bool needs_parens(const SignalExpr& f) {
  return f.visit([](const auto& node) {
    using T = std::decay_t<decltype(node)>;
    return std::is_same_v<T, SumNode> || std::is_same_v<T, ScaleNode>;
  });
}

}  // namespace

SignalExpr parse_signal(std::string_view text) { return SignalParser{text}.parse_all(); }

GaussianRational parse_gaussian(std::string_view text) { return SignalParser{text}.parse_gaussian_all(); }

std::string print_signal(const SignalExpr& f) {
  return f.visit([](const auto& node) -> std::string {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Atom>) {
      return atom_text(node);
    } else if constexpr (std::is_same_v<T, ScaleNode>) {
      std::string inner = print_signal(node.inner);
      if (needs_parens(node.inner)) inner = "(" + inner + ")";
      return rate_text(node.coeff) + "*" + inner;
    } else if constexpr (std::is_same_v<T, SumNode>) {
      std::string out;
      for (const auto& term : node.terms) {
        std::string s = print_signal(term);
        const bool nested = term.visit([](const auto& n) { return std::is_same_v<std::decay_t<decltype(n)>, SumNode>; });
        if (nested) s = "(" + s + ")";
        out += (out.empty() ? "" : " + ") + s;
      }
      return out;
    } else {
      return "reverse(" + print_signal(node.inner) + ")";
    }
  });
}

}  // namespace xformlab
