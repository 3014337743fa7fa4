#include "neutro/textio.hpp"

#include <cctype>
#include <vector>

#include "neutro/error.hpp"

namespace neutro {

namespace {

using boost::multiprecision::cpp_int;

// cpp_int reads a leading 0 as an octal prefix, so strip it first.
cpp_int decimal_int(std::string_view digits) {
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return cpp_int(std::string(digits.substr(first)));
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char next() { return text_[pos_++]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  // Next non-space character without consuming it.
  char peek_token(std::size_t* at = nullptr) const {
    std::size_t p = pos_;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p])))
      ++p;
    if (at) *at = p;
    return p < text_.size() ? text_[p] : '\0';
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string found = at_end() ? "end of input"
                                 : std::string("'") + peek() + "'";
    throw Error(ErrorCode::Syntax, what + ", found " + found + " at offset " +
                                       std::to_string(pos_),
                pos_);
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Rational parse_number(Cursor& in) {
  if (!std::isdigit(static_cast<unsigned char>(in.peek())))
    in.fail("expected a number");
  std::string_view whole = in.digits();
  if (in.peek() == '.') {
    in.next();
    if (!std::isdigit(static_cast<unsigned char>(in.peek())))
      in.fail("expected digits after '.'");
    std::string_view frac = in.digits();
    cpp_int scale = boost::multiprecision::pow(cpp_int(10),
                                               static_cast<unsigned>(frac.size()));
    return Rational(decimal_int(std::string(whole) + std::string(frac)), scale);
  }
  if (in.peek() == '/') {
    in.next();
    std::size_t at = in.pos();
    if (!std::isdigit(static_cast<unsigned char>(in.peek())))
      in.fail("expected a denominator");
    cpp_int den = decimal_int(in.digits());
    if (den == 0)
      throw Error(ErrorCode::Syntax,
                  "zero denominator at offset " + std::to_string(at), at);
    return Rational(decimal_int(whole), den);
  }
  return Rational(decimal_int(whole));
}

Hyperreal parse_hyperreal_at(Cursor& in) {
  in.skip_space();
  Rational standard = parse_number(in);
  Rational eps = 0;
  if (in.peek() == '+' || in.peek() == '-') {
    int sign = in.next() == '+' ? 1 : -1;
    eps = std::isdigit(static_cast<unsigned char>(in.peek())) ? parse_number(in)
                                                               : Rational(1);
    eps *= sign;
  }
  return Hyperreal(std::move(standard), std::move(eps));
}

Hyperreal parse_endpoint_at(Cursor& in) {
  in.skip_space();
  std::size_t start = in.pos();
  Hyperreal v = parse_hyperreal_at(in);
  if (!in_unit_range(v))
    throw Error(ErrorCode::OutOfRange,
                "endpoint " + v.to_string() + " outside [0-,1+] at offset " +
                    std::to_string(start),
                start);
  return v;
}

NSInterval parse_term(Cursor& in) {
  in.skip_space();
  std::size_t start = in.pos();
  if (in.peek() == '{') {
    in.next();
    if (in.peek_token() == '}') {
      throw Error(ErrorCode::EmptySubset,
                  "empty subset at offset " + std::to_string(start), start);
    }
    Hyperreal p = parse_endpoint_at(in);
    in.expect('}');
    return NSInterval::point(p);
  }
  if (in.peek() == '[') {
    in.next();
    Hyperreal lo = parse_endpoint_at(in);
    in.expect(',');
    Hyperreal hi = parse_endpoint_at(in);
    in.expect(']');
    if (hi < lo)
      throw Error(ErrorCode::InvalidInterval,
                  "interval lo > hi at offset " + std::to_string(start), start);
    return NSInterval(lo, hi);
  }
  in.fail("expected '[' or '{'");
}

NSSubset parse_subset_at(Cursor& in) {
  std::size_t at = 0;
  char first = in.peek_token(&at);
  if (first == '\0' || first == ';' || first == ')')
    throw Error(ErrorCode::EmptySubset,
                "empty subset at offset " + std::to_string(at), at);

  std::vector<NSInterval> terms;
  in.skip_space();
  // "[[" or "[{" opens the bracketed list form.
  std::size_t after = 0;
  Cursor look = in;
  look.next();
  char second = look.peek_token(&after);
  if (first == '[' && (second == '[' || second == '{')) {
    in.next();
    terms.push_back(parse_term(in));
    while (in.peek_token() == ',') {
      in.expect(',');
      terms.push_back(parse_term(in));
    }
    in.expect(']');
  } else {
    terms.push_back(parse_term(in));
    while (in.peek_token() == 'U') {
      in.expect('U');
      terms.push_back(parse_term(in));
    }
  }
  return NSSubset::normalize(terms);
}

void expect_end(Cursor& in) {
  in.skip_space();
  if (!in.at_end()) in.fail("unexpected trailing input");
}

}  // namespace

Hyperreal parse_hyperreal(std::string_view text) {
  Cursor in(text);
  Hyperreal v = parse_hyperreal_at(in);
  expect_end(in);
  return v;
}

Hyperreal parse_endpoint(std::string_view text) {
  Cursor in(text);
  Hyperreal v = parse_endpoint_at(in);
  expect_end(in);
  return v;
}

NSSubset parse_subset(std::string_view text) {
  Cursor in(text);
  NSSubset s = parse_subset_at(in);
  expect_end(in);
  return s;
}

NeutroTriple parse_triple(std::string_view text) {
  static constexpr const char* kComponents[] = {"T", "I", "F"};
  Cursor in(text);
  in.expect('(');
  std::vector<NSSubset> parts;
  for (int i = 0; i < 3; ++i) {
    if (i > 0) in.expect(';');
    try {
      parts.push_back(parse_subset_at(in));
    } catch (const Error& e) {
      throw Error(ErrorCode::Component,
                  std::string("component ") + kComponents[i] + ": " +
                      to_string(e.code()) + ": " + e.what(),
                  e.offset(), e.code());
    }
  }
  in.expect(')');
  expect_end(in);
  return NeutroTriple{parts[0], parts[1], parts[2]};
}

std::string format_subset(const NSSubset& s) {
  std::string out;
  for (const auto& iv : s.intervals()) {
    if (!out.empty()) out += " U ";
    if (iv.is_point())
      out += "{" + iv.lo().to_string() + "}";
    else
      out += "[" + iv.lo().to_string() + "," + iv.hi().to_string() + "]";
  }
  return out;
}

std::string format_triple(const NeutroTriple& t) {
  return "(" + format_subset(t.truth) + ";" + format_subset(t.indeterminacy) +
         ";" + format_subset(t.falsity) + ")";
}

}  // namespace neutro
