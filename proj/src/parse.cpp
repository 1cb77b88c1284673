#include "pptlab/parse.hpp"

#include <cctype>
#include <string>

#include "pptlab/errors.hpp"

namespace pptlab {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const ContextPtr& ctx) : src_(src), ctx_(ctx) {}

  LiftPoly parse() {
    skip_space();
    if (pos_ == src_.size()) throw SyntaxError(pos_, "empty expression");
    LiftPoly value = expr();
    skip_space();
    if (pos_ != src_.size())
      throw SyntaxError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LiftPoly expr() {
    LiftPoly acc = term();
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  LiftPoly term() {
    LiftPoly acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  LiftPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  LiftPoly power() {
    LiftPoly base = primary();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw SyntaxError(pos_, "expected a non-negative integer exponent");
    std::uint64_t k = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      k = k * 10 + static_cast<unsigned>(src_[pos_] - '0');
      if (k > Monomial::kMaxExponent) throw SyntaxError(start, "exponent too large");
      ++pos_;
    }
    return pow(base, k);
  }

  LiftPoly primary() {
    skip_space();
    if (pos_ >= src_.size()) throw SyntaxError(pos_, "unexpected end of expression");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      LiftPoly inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::int64_t m = static_cast<std::int64_t>(ctx_->p()) * ctx_->p();
      std::int64_t v = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        v = (v * 10 + (src_[pos_] - '0')) % m;
        ++pos_;
      }
      reject_juxtaposition();
      return LiftPoly::constant(ctx_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      reject_juxtaposition();
      if (name == "p") return LiftPoly::constant(ctx_, ctx_->p());
      int idx = ctx_->var_index(name);
      if (idx < 0)
        throw Error(ErrorKind::UnknownVariable,
                    "unknown variable '" + name + "' at position " +
                        std::to_string(start));
      return LiftPoly::variable(ctx_, static_cast<unsigned>(idx));
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  // "2x", "x y" and "x(y)" are rejected: multiplication must be explicit.
  void reject_juxtaposition() {
    std::size_t save = pos_;
    skip_space();
    if (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(')
        throw SyntaxError(pos_, "implicit multiplication is not allowed; use '*'");
    }
    pos_ = save;
  }

  std::string_view src_;
  const ContextPtr& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

LiftPoly parse_poly(std::string_view src, const ContextPtr& ctx) {
  return Parser(src, ctx).parse();
}

}  // namespace pptlab
