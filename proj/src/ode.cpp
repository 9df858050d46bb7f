#include "xformlab/ode.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lexer.hpp"
#include "xformlab/errors.hpp"

namespace xformlab {

namespace {

using detail::Token;
using detail::TokenCursor;
using detail::TokenKind;

constexpr unsigned kMaxOrder = 9;

using ParamTable = std::map<std::string, GaussianRational>;

class EquationParser {
 public:
  EquationParser(std::vector<Token> tokens, const ParamTable& params) : cur_{std::move(tokens)}, params_{params} {}

  /// param value: a coefficient expression filling the whole line
  GaussianRational parse_value_only() {
    GaussianRational v = coeff_sum();
    if (!cur_.at_end()) cur_.fail("unexpected input after the parameter value");
    return v;
  }

  LinearODE parse_equation() {
    if (cur_.at_end()) cur_.fail("expected an equation");
    Side lhs = side('y');
    if (!cur_.is_symbol('=')) cur_.fail("expected '=' or another term");
    const Token& eq = cur_.next();
    if (!lhs.any_ref) TokenCursor::fail_at(eq, "left-hand side has no y term");
    if (cur_.at_end()) TokenCursor::fail_at(eq, "expected a right-hand side after '='");
    Side rhs = side('u');
    if (!cur_.at_end()) cur_.fail("expected '+', '-' or end of equation");

    std::vector<GaussianRational> out(lhs.max_order + 1, GaussianRational{0});
    for (const auto& [k, c] : lhs.coeffs) out[k] += c;
    std::vector<GaussianRational> in(rhs.any_ref ? rhs.max_order + 1 : 1, GaussianRational{0});
    for (const auto& [k, c] : rhs.coeffs) in[k] += c;
    if (out.back().is_zero()) {
      throw ZeroLeadingCoefficient("coefficient of the highest derivative y^(" + std::to_string(lhs.max_order) +
                                   ") is zero");
    }
    return make_ode(std::move(out), std::move(in));
  }

 private:
  struct Side {
    std::map<unsigned, GaussianRational> coeffs;
    unsigned max_order = 0;
    bool any_ref = false;
  };

  struct TermValue {
    GaussianRational coeff{1};
    std::optional<unsigned> order;
  };

  Side side(char signal) {
    Side s;
    add_term(s, term(signal));
    while (cur_.is_symbol('+') || cur_.is_symbol('-')) {
      const Token& op = cur_.next();
      if (cur_.at_end() || cur_.is_symbol('=') || cur_.is_symbol('+') || cur_.is_symbol(')') || cur_.is_symbol('*') ||
          cur_.is_symbol('/')) {
        TokenCursor::fail_at(op, "expected a term after '" + op.text + "'");
      }
      TermValue t = term(signal);
      if (op.text == "-") t.coeff = -t.coeff;
      add_term(s, std::move(t));
    }
    return s;
  }

  void add_term(Side& s, TermValue t) {
    if (!t.order) return;
    s.any_ref = true;
    s.max_order = std::max(s.max_order, *t.order);
    s.coeffs[*t.order] += t.coeff;
  }

  TermValue term(char signal) {
    const Token& start = cur_.peek();
    TermValue t;
    if (cur_.accept_symbol('-')) t.coeff = -1;
    factor(t, signal, false);
    while (cur_.is_symbol('*') || cur_.is_symbol('/')) {
      const Token& op = cur_.next();
      if (cur_.at_end() || cur_.is_symbol('=') || cur_.is_symbol('+') || cur_.is_symbol('-') || cur_.is_symbol(')')) {
        TokenCursor::fail_at(op, "expected a factor after '" + op.text + "'");
      }
      factor(t, signal, op.text == "/", &op);
    }
    if (!t.order && !t.coeff.is_zero()) {
      TokenCursor::fail_at(start, std::string{"term has no "} + signal + " factor");
    }
    return t;
  }

  void factor(TermValue& t, char signal, bool divide, const Token* op = nullptr) {
    const Token& tok = cur_.peek();
    if (tok.kind == TokenKind::Ident && (tok.text == "y" || tok.text == "u")) {
      if (tok.text[0] != signal) {
        cur_.fail(signal == 'y' ? "u terms belong on the right-hand side" : "y terms belong on the left-hand side");
      }
      if (divide) TokenCursor::fail_at(*op, "cannot divide by a signal");
      if (t.order) cur_.fail("more than one signal factor in a term");
      cur_.next();
      t.order = derivative_order();
      return;
    }
    GaussianRational v = coeff_atom();
    if (divide) {
      if (v.is_zero()) TokenCursor::fail_at(*op, "division by zero");
      t.coeff /= v;
    } else {
      t.coeff *= v;
    }
  }

  unsigned derivative_order() {
    unsigned k = 0;
    if (cur_.is_symbol('\'')) {
      while (cur_.accept_symbol('\'')) ++k;
    } else if (cur_.accept_symbol('^')) {
      const bool paren = cur_.accept_symbol('(');
      const Token& n = cur_.peek();
      if (n.kind != TokenKind::Number || n.text.find('.') != std::string::npos) cur_.fail("expected a derivative order");
      cur_.next();
      if (n.text.size() > 2 || std::stoul(n.text) > kMaxOrder) {
        TokenCursor::fail_at(n, "derivative order above " + std::to_string(kMaxOrder));
      }
      k = static_cast<unsigned>(std::stoul(n.text));
      if (paren) cur_.expect_symbol(')', "')'");
    }
    if (k > kMaxOrder) cur_.fail("derivative order above " + std::to_string(kMaxOrder));
    return k;
  }

  GaussianRational coeff_sum() {
    GaussianRational acc = coeff_product();
    while (cur_.is_symbol('+') || cur_.is_symbol('-')) {
      const Token& op = cur_.next();
      if (cur_.at_end() || cur_.is_symbol(')') || cur_.is_symbol('+') || cur_.is_symbol('*') || cur_.is_symbol('/')) {
        TokenCursor::fail_at(op, "expected a term after '" + op.text + "'");
      }
      GaussianRational v = coeff_product();
      acc = op.text == "-" ? acc - v : acc + v;
    }
    return acc;
  }

  GaussianRational coeff_product() {
    const bool negative = cur_.accept_symbol('-');
    GaussianRational acc = coeff_atom();
    while (cur_.is_symbol('*') || cur_.is_symbol('/')) {
      const Token& op = cur_.next();
      if (cur_.at_end() || cur_.is_symbol(')') || cur_.is_symbol('+') || cur_.is_symbol('-')) {
        TokenCursor::fail_at(op, "expected a factor after '" + op.text + "'");
      }
      GaussianRational v = coeff_atom();
      if (op.text == "/") {
        if (v.is_zero()) TokenCursor::fail_at(op, "division by zero");
        acc /= v;
      } else {
        acc *= v;
      }
    }
    return negative ? -acc : acc;
  }

  GaussianRational coeff_atom() {
    const Token& tok = cur_.peek();
    if (tok.kind == TokenKind::Number) {
      cur_.next();
      return GaussianRational{detail::number_value(tok.text)};
    }
    if (tok.kind == TokenKind::Ident) {
      if (tok.text == "i") {
        cur_.next();
        return GaussianRational::i();
      }
      if (tok.text == "y" || tok.text == "u") cur_.fail("signal not allowed inside a coefficient");
      auto it = params_.find(tok.text);
      if (it == params_.end()) cur_.fail("unknown parameter '" + tok.text + "'");
      cur_.next();
      return it->second;
    }
    if (cur_.is_symbol('(')) {
      const Token& open = cur_.next();
      GaussianRational v = coeff_sum();
      if (!cur_.is_symbol(')')) {
        if (cur_.at_end()) TokenCursor::fail_at(open, "unbalanced parenthesis: '(' is never closed");
        cur_.fail("expected ')'");
      }
      cur_.next();
      return v;
    }
    cur_.fail("expected a number, parameter, signal or '('");
  }

  TokenCursor cur_;
  const ParamTable& params_;
};

bool is_blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string ref_text(char signal, std::size_t k) {
  std::string s(1, signal);
  if (k <= 2) return s + std::string(k, '\'');
  return s + "^(" + std::to_string(k) + ")";
}

std::string coeff_text(const GaussianRational& c) {
  if (c.is_real()) return to_string(c.re());
  std::string s = "(";
  if (sgn(c.re()) != 0) s += to_string(c.re()) + (sgn(c.im()) > 0 ? "+" : "-");
  else if (sgn(c.im()) < 0) s += "-";
  return s + to_string(Rational{abs(c.im())}) + "*i)";
}

std::string side_text(const std::vector<GaussianRational>& coeffs, char signal) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const GaussianRational& c = coeffs[k];
    if (c.is_zero()) continue;
    const std::string ref = ref_text(signal, k);
    const bool negative_real = c.is_real() && sgn(c.re()) < 0;
    const GaussianRational mag = negative_real ? -c : c;
    const std::string body = mag == GaussianRational{1} ? ref : coeff_text(mag) + "*" + ref;
    if (out.empty()) {
      out = negative_real ? "-" + body : body;
    } else {
      out += (negative_real ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

ExactPolynomial poly_of(const std::vector<GaussianRational>& coeffs) { return ExactPolynomial{coeffs}; }

}  // namespace

LinearODE make_ode(std::vector<GaussianRational> out_coeffs, std::vector<GaussianRational> in_coeffs,
                   bool zero_initial) {
  if (out_coeffs.empty() || in_coeffs.empty()) throw std::invalid_argument("ODE coefficient lists must be nonempty");
  if (out_coeffs.back().is_zero()) throw ZeroLeadingCoefficient("leading output coefficient a_n is zero");
  while (in_coeffs.size() > 1 && in_coeffs.back().is_zero()) in_coeffs.pop_back();
  return {std::move(out_coeffs), std::move(in_coeffs), zero_initial};
}

LinearODE parse_ode(std::string_view text) {
  ParamTable params;
  std::optional<LinearODE> result;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (is_blank_or_comment(line)) {
      if (end == text.size()) break;
      continue;
    }
    std::vector<Token> tokens = detail::tokenize(line, line_no);
    if (tokens.front().kind == TokenKind::Ident && tokens.front().text == "param") {
      TokenCursor cur{tokens};
      cur.next();
      const Token& name = cur.peek();
      if (name.kind != TokenKind::Ident) cur.fail("expected a parameter name");
      if (name.text == "y" || name.text == "u" || name.text == "i" || name.text == "param") {
        TokenCursor::fail_at(name, "'" + name.text + "' is reserved");
      }
      cur.next();
      cur.expect_symbol('=', "'=' after the parameter name");
      std::vector<Token> rest(tokens.begin() + static_cast<std::ptrdiff_t>(cur.position()), tokens.end());
      params[name.text] = EquationParser{std::move(rest), params}.parse_value_only();
    } else {
      if (result) throw SyntaxError("more than one equation", line_no, tokens.front().column);
      result = EquationParser{std::move(tokens), params}.parse_equation();
    }
    if (end == text.size()) break;
  }
  if (!result) throw SyntaxError("no equation found", std::max(line_no, 1), 1);
  return *result;
}

std::string print_ode(const LinearODE& ode) {
  return side_text(ode.out_coeffs, 'y') + " = " + side_text(ode.in_coeffs, 'u');
}

RationalExpr transfer_function(const LinearODE& ode) {
  if (!ode.zero_initial) {
    throw NonzeroInitialConditions("transfer function needs zero initial conditions on y and u");
  }
  return {poly_of(ode.in_coeffs), poly_of(ode.out_coeffs), Var::S};
}

RationalExpr frequency_response(const LinearODE& ode) {
  return {poly_of(ode.in_coeffs), poly_of(ode.out_coeffs), Var::IOmega};
}

FrequencyResponsePoint response_at(const RationalExpr& h, double omega) {
  const Complex value = eval_at_frequency(h, omega);
  FrequencyResponsePoint p;
  p.omega = omega;
  p.magnitude = std::abs(value);
  p.magnitude_db = 20.0 * std::log10(p.magnitude);
  p.phase_rad = std::arg(value);
  if (p.phase_rad <= -std::numbers::pi) p.phase_rad = std::numbers::pi;
  return p;
}

std::vector<FrequencyResponsePoint> bode_grid(const RationalExpr& h, double w_min, double w_max, int points) {
  if (h.var() != Var::IOmega) throw VarMismatch("Bode grid needs a rational function in (iw)");
  if (!(w_min > 0.0) || !(w_max > w_min)) throw std::invalid_argument("Bode grid needs 0 < w_min < w_max");
  if (points < 2) throw std::invalid_argument("Bode grid needs at least 2 points");
  for (const Complex& r : roots(to_float(h.den()))) {
    // a pole x = iω lies on the imaginary axis
    if (std::abs(r.real()) <= 1e-9 * (1.0 + std::abs(r)) && r.imag() >= w_min && r.imag() <= w_max) {
      std::ostringstream os;
      os << "pole on the frequency axis at w = " << r.imag();
      throw PoleError(os.str());
    }
  }
  std::vector<FrequencyResponsePoint> grid;
  grid.reserve(static_cast<std::size_t>(points));
  const double lo = std::log(w_min);
  const double hi = std::log(w_max);
  for (int k = 0; k < points; ++k) {
    const double w = k == points - 1 ? w_max : std::exp(lo + (hi - lo) * k / (points - 1));
    grid.push_back(response_at(h, w));
  }
  return grid;
}

bool is_improper(const RationalExpr& h) { return h.num().degree() > h.den().degree(); }

}  // namespace xformlab
