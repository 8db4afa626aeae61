#include "brauer/cli/parse.hpp"

#include <cctype>
#include <optional>

#include "brauer/arith/number_theory.hpp"

namespace brauer::cli {

ParseError::ParseError(std::size_t column, const std::string& what)
    : Error("parse error at column " + std::to_string(column) + ": " + what), column_(column) {}

namespace {

using ff::RationalFunctionFp;
using ff::RationalFunctionQ;

constexpr long kMaxExponent = 4096;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

/// Half-open slice [begin, end) of the input, positions kept absolute.
struct Range {
  std::size_t begin;
  std::size_t end;
};

Range trim(std::string_view text, Range r) {
  while (r.begin < r.end && is_space(text[r.begin])) ++r.begin;
  while (r.end > r.begin && is_space(text[r.end - 1])) --r.end;
  return r;
}

/// Splits at `sep` outside parentheses.
std::vector<Range> split_top(std::string_view text, Range r, char sep) {
  std::vector<Range> out;
  int depth = 0;
  std::size_t start = r.begin;
  for (std::size_t i = r.begin; i < r.end; ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == sep && depth == 0) {
      out.push_back({start, i});
      start = i + 1;
    }
  }
  out.push_back({start, r.end});
  return out;
}

struct DomainQ {
  using Value = RationalFunctionQ;
  Value constant(const Integer& n) const { return Value(arith::PolyQ::constant(Rational(n))); }
  Value x() const { return Value(arith::PolyQ::x()); }
};

struct DomainFp {
  using Value = RationalFunctionFp;
  arith::PrimeModulus p;
  Value constant(const Integer& n) const {
    const Integer r = ((n % p.value()) + p.value()) % p.value();
    return Value(arith::PolyFp::constant(p, static_cast<std::int64_t>(r.get_ui())));
  }
  Value x() const { return Value(arith::PolyFp::x(p)); }
};

template <class Domain>
class ExprParser {
 public:
  using Value = typename Domain::Value;

  ExprParser(std::string_view text, Range r, Domain domain) : text_(text), pos_(r.begin), end_(r.end), d_(domain) {}

  Value parse() {
    skip();
    if (pos_ == end_) fail("empty expression");
    Value v = expr();
    skip();
    if (pos_ != end_) fail(std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const { throw ParseError(at + 1, what); }

  void skip() {
    while (pos_ < end_ && is_space(text_[pos_])) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < end_ && text_[pos_] == c;
  }
  bool starts_atom() {
    skip();
    return pos_ < end_ && (is_digit(text_[pos_]) || text_[pos_] == 'x' || text_[pos_] == '(');
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (at('+')) {
        ++pos_;
        v = v + term();
      } else if (at('-')) {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (at('*')) {
        ++pos_;
        v = v * unary();
      } else if (at('/')) {
        const std::size_t op = pos_++;
        const Value den = unary();
        if (den.is_zero()) fail_at(op, "division by zero");
        v = v / den;
      } else if (starts_atom()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (at('-')) {
      ++pos_;
      return -unary();
    }
    if (at('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (!at('^')) return base;
    const std::size_t op = pos_++;
    skip();
    bool negative = false;
    if (pos_ < end_ && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    skip();
    if (pos_ >= end_ || !is_digit(text_[pos_])) fail("exponent must be an integer");
    long e = 0;
    while (pos_ < end_ && is_digit(text_[pos_])) {
      e = e * 10 + (text_[pos_++] - '0');
      if (e > kMaxExponent) fail_at(op, "exponent exceeds " + std::to_string(kMaxExponent));
    }
    if (negative && base.is_zero()) fail_at(op, "negative power of zero");
    return base.pow(negative ? -e : e);
  }

  Value atom() {
    skip();
    if (pos_ >= end_) fail("unexpected end of input");
    const char c = text_[pos_];
    if (is_digit(c)) {
      const std::size_t start = pos_;
      while (pos_ < end_ && is_digit(text_[pos_])) ++pos_;
      return d_.constant(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 'x') {
      ++pos_;
      return d_.x();
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      Value v = expr();
      if (!at(')')) {
        if (pos_ >= end_) fail_at(open, "unbalanced '('");
        fail("expected ')'");
      }
      ++pos_;
      return v;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_;
  std::size_t end_;
  Domain d_;
};

RationalFunctionQ function_q(std::string_view text, Range r) { return ExprParser<DomainQ>(text, r, {}).parse(); }

RationalFunctionFp function_fp(std::string_view text, Range r, const arith::PrimeModulus& p) {
  return ExprParser<DomainFp>(text, r, DomainFp{p}).parse();
}

Rational constant_entry(std::string_view text, Range r) {
  r = trim(text, r);
  const RationalFunctionQ f = function_q(text, r);
  if (!f.is_constant()) throw ParseError(r.begin + 1, "entry depends on x; write the symbol as (f, g; n=N, k=FP|Q)");
  return f.num().coeff(0) / f.den().coeff(0);
}

Range strip_parens(std::string_view text, Range r) {
  r = trim(text, r);
  if (r.begin == r.end) throw ParseError(1, "empty input");
  if (text[r.begin] != '(') throw ParseError(r.begin + 1, "expected '('");
  int depth = 0;
  for (std::size_t i = r.begin; i < r.end; ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth == 0) {
      if (i + 1 != r.end) throw ParseError(i + 2, "trailing input after ')'");
      return {r.begin + 1, i};
    }
  }
  throw ParseError(r.begin + 1, "unbalanced '('");
}

struct SymbolOptions {
  unsigned n = 2;
  std::optional<std::uint64_t> p;  // empty: k = Q
  bool field_given = false;
};

SymbolOptions parse_options(std::string_view text, Range r) {
  SymbolOptions out;
  for (Range item : split_top(text, r, ',')) {
    item = trim(text, item);
    const std::string_view s = text.substr(item.begin, item.end - item.begin);
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) throw ParseError(item.begin + 1, "expected key=value");
    const Range key = trim(text, {item.begin, item.begin + eq});
    const Range value = trim(text, {item.begin + eq + 1, item.end});
    const std::string_view k = text.substr(key.begin, key.end - key.begin);
    const std::string_view v = text.substr(value.begin, value.end - value.begin);
    if (v.empty()) throw ParseError(value.begin + 1, "missing value");
    if (k == "n") {
      if (v.size() > 9 || v.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError(value.begin + 1, "n must be a positive integer");
      out.n = static_cast<unsigned>(std::stoul(std::string(v)));
      if (out.n < 2) throw ParseError(value.begin + 1, "n must be at least 2");
    } else if (k == "k") {
      out.field_given = true;
      if (v == "Q") continue;
      std::string_view digits = v;
      if (digits.starts_with("GF")) digits.remove_prefix(2);
      else if (digits.starts_with("F")) digits.remove_prefix(1);
      else throw ParseError(value.begin + 1, "field must be Q or F<p>");
      if (digits.starts_with("_")) digits.remove_prefix(1);
      if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError(value.begin + 1, "field must be Q or F<p>");
      const std::uint64_t p = std::stoull(std::string(digits));
      if (p >= (std::uint64_t{1} << 32) || !arith::is_prime_u64(p))
        throw ParseError(value.begin + 1, std::string(digits) + " is not a prime below 2^32");
      out.p = p;
    } else {
      throw ParseError(key.begin + 1, "unknown option '" + std::string(k) + "'");
    }
  }
  if (!out.field_given) throw ParseError(r.begin + 1, "missing k=FP or k=Q");
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const Range r = trim(text, {0, text.size()});
  std::size_t i = r.begin;
  if (i < r.end && (text[i] == '-' || text[i] == '+')) ++i;
  const std::size_t num_start = i;
  while (i < r.end && is_digit(text[i])) ++i;
  if (i == num_start) throw ParseError(i + 1, "expected digits");
  std::size_t slash = std::string_view::npos;
  if (i < r.end && text[i] == '/') {
    slash = i++;
    const std::size_t den_start = i;
    while (i < r.end && is_digit(text[i])) ++i;
    if (i == den_start) throw ParseError(i + 1, "expected digits after '/'");
  }
  if (i != r.end) throw ParseError(i + 1, std::string("unexpected '") + text[i] + "'");
  Integer num(std::string(text.substr(num_start, (slash == std::string_view::npos ? r.end : slash) - num_start)));
  if (text[r.begin] == '-') num = -num;
  if (slash == std::string_view::npos) return Rational(num);
  const Integer den(std::string(text.substr(slash + 1, r.end - slash - 1)));
  if (den == 0) throw ParseError(slash + 1, "zero denominator");
  return Rational(num, den);
}

ff::RationalFunctionQ parse_function_q(std::string_view text) { return function_q(text, {0, text.size()}); }

ff::RationalFunctionFp parse_function_fp(std::string_view text, const arith::PrimeModulus& p) {
  return function_fp(text, {0, text.size()}, p);
}

Algebra parse_algebra(std::string_view text) {
  const Range inner = strip_parens(text, {0, text.size()});
  const std::vector<Range> parts = split_top(text, inner, ';');
  if (parts.size() > 2) throw ParseError(parts[2].begin, "more than one ';'");
  const std::vector<Range> entries = split_top(text, parts[0], ',');
  if (entries.size() != 2) throw ParseError(inner.begin + 1, "expected two entries separated by ','");
  if (parts.size() == 1) return quat::QuaternionQ(constant_entry(text, entries[0]), constant_entry(text, entries[1]));

  const SymbolOptions opts = parse_options(text, parts[1]);
  if (opts.p) {
    const arith::PrimeModulus p(*opts.p);
    return ff::SymbolAlgebraFp(opts.n, function_fp(text, entries[0], p), function_fp(text, entries[1], p));
  }
  return ff::SymbolAlgebraQ(opts.n, function_q(text, entries[0]), function_q(text, entries[1]));
}

elliptic::WeierstrassCurve parse_curve(std::string_view text) {
  const Range r = trim(text, {0, text.size()});
  const std::size_t eq = text.find('=', r.begin);
  if (eq == std::string_view::npos || eq >= r.end) throw ParseError(r.begin + 1, "expected 'y^2 = ...' or 'roots = ...'");
  const Range lhs = trim(text, {r.begin, eq});
  std::string head;
  for (std::size_t i = lhs.begin; i < lhs.end; ++i)
    if (!is_space(text[i])) head += text[i];
  const Range rhs{eq + 1, r.end};

  if (head == "roots") {
    const std::vector<Range> roots = split_top(text, rhs, ',');
    if (roots.size() != 3) throw ParseError(eq + 2, "expected three roots separated by ','");
    return elliptic::WeierstrassCurve::from_roots(constant_entry(text, roots[0]), constant_entry(text, roots[1]),
                                                  constant_entry(text, roots[2]));
  }
  if (head != "y^2") throw ParseError(lhs.begin + 1, "expected 'y^2' or 'roots' before '='");
  const Range body = trim(text, rhs);
  const RationalFunctionQ f = function_q(text, body);
  if (f.den().degree() != 0) throw ParseError(body.begin + 1, "right-hand side must be a polynomial in x");
  const arith::PolyQ cubic = f.num() * arith::PolyQ::constant(f.den().coeff(0).inverse());
  if (cubic.degree() != 3 || cubic.leading() != Rational(1))
    throw DomainError("right-hand side " + cubic.str() + " is not a monic cubic");
  return elliptic::WeierstrassCurve::from_coefficients(cubic.coeff(2), cubic.coeff(1), cubic.coeff(0));
}

std::vector<local::PlaceQ> parse_places(std::string_view text) {
  std::vector<local::PlaceQ> out;
  if (trim(text, {0, text.size()}).begin == text.size()) return out;
  for (Range item : split_top(text, {0, text.size()}, ',')) {
    item = trim(text, item);
    const std::string_view s = text.substr(item.begin, item.end - item.begin);
    if (s == "inf" || s == "oo" || s == "∞" || s == "infinity") {
      out.push_back(local::PlaceQ::infinity());
      continue;
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
      throw ParseError(item.begin + 1, "expected a prime or 'inf'");
    out.push_back(local::PlaceQ::finite(Integer(std::string(s))));
  }
  return out;
}

}  // namespace brauer::cli
