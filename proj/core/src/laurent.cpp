#include "taitmap/laurent.hpp"

#include <cctype>
#include <sstream>

#include "taitmap/reduction.hpp"

namespace taitmap {

LaurentPoly::LaurentPoly(BigInt constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(BigInt coefficient, Exponent exponent) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

BigInt LaurentPoly::coefficient(Exponent e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(Exponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  LaurentPoly product;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) product.add_term(ea + eb, ca * cb);
  }
  terms_ = std::move(product.terms_);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly quantum_integer(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::kDomain, "quantum integer [n] needs n >= 1");
  LaurentPoly out;
  for (std::int64_t e = n - 1; e >= 1 - n; e -= 2) out += LaurentPoly::monomial(1, e);
  return out;
}

Rational evaluate(const LaurentPoly& p, const Rational& q0) {
  if (q0 == 0) throw Error(ErrorKind::kDomain, "cannot evaluate a Laurent polynomial at q = 0");
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational power = 1;
    const Rational base = e >= 0 ? q0 : Rational(1) / q0;
    for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k) power *= base;
    total += Rational(c) * power;
  }
  return total;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude << '*';
    out << 'q';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const LaurentPoly& p) { return out << to_string(p); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term(sign);
      skip_ws();
    }
    return out;
  }

 private:
  LaurentPoly term(int sign) {
    BigInt coefficient = 1;
    bool has_coefficient = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = BigInt(digits());
      has_coefficient = true;
      skip_ws();
      if (at_end() || peek() != '*') return LaurentPoly::monomial(sign * coefficient, 0);
      ++pos_;
      skip_ws();
    }
    if (at_end() || peek() != 'q') fail(has_coefficient ? "expected 'q' after '*'" : "expected a term");
    ++pos_;
    skip_ws();
    LaurentPoly::Exponent exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      int esign = 1;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        esign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      exponent = esign * std::stoll(digits());
    }
    return LaurentPoly::monomial(sign * coefficient, exponent);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kParse, "polynomial at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return PolyParser(text).parse(); }

Rational parse_rational(std::string_view text) {
  auto integer = [&](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw Error(ErrorKind::kParse, "bad rational '" + std::string(text) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
        throw Error(ErrorKind::kParse, "bad rational '" + std::string(text) + "'");
      }
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(integer(text));
  const BigInt den = integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::kDomain, "zero denominator in '" + std::string(text) + "'");
  return Rational(integer(text.substr(0, slash)), den);
}

LaurentPoly p3(const CombinatorialMap& map) {
  if (!is_bipartite(map)) throw Error(ErrorKind::kNotBipartite, "P3 is defined for bipartite webs only");
  const RelationWeights<LaurentPoly> weights{quantum_integer(3), quantum_integer(2), LaurentPoly(1)};
  // Bipartite planar maps always have a loop, digon or square, so this
  // cannot report an irreducible branch.
  return reduce(map, weights).value;
}

}  // namespace taitmap
