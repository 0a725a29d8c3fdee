#include "apolar/binary_form.hpp"

#include "json.hpp"

#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace apolar {

namespace {

std::string monomial_text(int e0, int e1, const VariableNames& names) {
  std::string out;
  auto append = [&out](const std::string& var, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += '^' + std::to_string(e);
  };
  append(names.x0, e0);
  append(names.x1, e1);
  return out;
}

// Sparse, possibly inhomogeneous polynomial used while parsing. Terms with a
// zero coefficient are kept so that "0*X1^3" still remembers its degree.
struct Sparse {
  std::map<std::pair<int, int>, Rational> terms;

  static Sparse constant(const Rational& c) { return Sparse{{{{0, 0}, c}}}; }

  bool is_constant() const {
    for (const auto& [m, c] : terms)
      if ((m.first || m.second) && !is_zero(c)) return false;
    return true;
  }
  Rational constant_value() const {
    auto it = terms.find({0, 0});
    return it == terms.end() ? Rational(0) : it->second;
  }
};

Sparse add(Sparse a, const Sparse& b, int sign) {
  for (const auto& [m, c] : b.terms) {
    if (sign > 0)
      a.terms[m] += c;
    else
      a.terms[m] -= c;
  }
  return a;
}

Sparse mul(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms)
      out.terms[{ma.first + mb.first, ma.second + mb.second}] += ca * cb;
  return out;
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Sparse parse() {
    Sparse out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  static constexpr int kMaxExponent = 512;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse form '" + std::string(text_) + "': " + what +
                                " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Sparse expression() {
    Sparse acc = term();
    while (true) {
      if (accept('+'))
        acc = add(std::move(acc), term(), +1);
      else if (accept('-'))
        acc = add(std::move(acc), term(), -1);
      else
        return acc;
    }
  }

  Sparse term() {
    Sparse acc = unary();
    while (true) {
      if (accept('*')) {
        acc = mul(acc, unary());
      } else if (accept('/')) {
        const Sparse divisor = unary();
        if (!divisor.is_constant() || is_zero(divisor.constant_value()))
          fail("division only by a nonzero constant");
        acc = mul(acc, Sparse::constant(1 / divisor.constant_value()));
      } else {
        return acc;
      }
    }
  }

  Sparse unary() {
    if (accept('-')) return mul(Sparse::constant(-1), unary());
    if (accept('+')) return unary();
    return power();
  }

  Sparse power() {
    Sparse base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::string digits = read_digits();
    if (digits.empty()) fail("exponent must be a non-negative integer");
    if (digits.size() > 4 || std::stoi(digits) > kMaxExponent) fail("exponent too large");
    const int e = std::stoi(digits);
    Sparse out = Sparse::constant(1);
    for (int i = 0; i < e; ++i) out = mul(out, base);
    return out;
  }

  Sparse primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Sparse inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Sparse::constant(Rational(Integer(read_digits(), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string ident;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ident += text_[pos_++];
      if (ident == "X0" || ident == "x0" || ident == "xi0") return Sparse{{{{1, 0}, 1}}};
      if (ident == "X1" || ident == "x1" || ident == "xi1") return Sparse{{{{0, 1}, 1}}};
      fail("unknown variable '" + ident + "'");
    }
    fail("unexpected character");
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      out += text_[pos_++];
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

BinaryForm parse_json_form(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON form: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
    throw std::invalid_argument("JSON form needs \"degree\" and \"coeffs\"");
  if (!j["degree"].is_number_integer() || j["degree"].get<long long>() < 0)
    throw std::invalid_argument("JSON form degree must be a non-negative integer");
  const auto degree = j["degree"].get<long long>();
  const auto& coeffs = j["coeffs"];
  if (!coeffs.is_array() || static_cast<long long>(coeffs.size()) != degree + 1)
    throw std::invalid_argument("JSON form needs exactly degree+1 coefficients");
  RationalVector values;
  for (const auto& c : coeffs) {
    if (c.is_string())
      values.push_back(parse_rational(c.get<std::string>()));
    else if (c.is_number_integer())
      values.push_back(parse_rational(std::to_string(c.get<long long>())));
    else
      throw std::invalid_argument("JSON form coefficients must be rational strings");
  }
  return BinaryForm(std::move(values));
}

}  // namespace

std::string render(const BinaryForm& p, const VariableNames& names) {
  const int l = p.degree();
  if (p.is_zero()) return l == 0 ? "0" : "0*" + monomial_text(0, l, names);

  std::string out;
  for (int k = l; k >= 0; --k) {
    const Rational& c = p[k];
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational magnitude = abs(c);
    const std::string mono = monomial_text(k, l - k, names);
    if (mono.empty())
      out += to_string(magnitude);
    else if (magnitude == 1)
      out += mono;
    else
      out += to_string(magnitude) + "*" + mono;
  }
  return out;
}

BinaryForm parse_expression(std::string_view text) {
  const Sparse poly = ExpressionParser(text).parse();

  std::set<int> nonzero_degrees, all_degrees;
  for (const auto& [m, c] : poly.terms) {
    all_degrees.insert(m.first + m.second);
    if (!is_zero(c)) nonzero_degrees.insert(m.first + m.second);
  }
  int degree = 0;
  if (!nonzero_degrees.empty()) {
    if (nonzero_degrees.size() > 1) throw std::invalid_argument("form is not homogeneous: '" + std::string(text) + "'");
    degree = *nonzero_degrees.begin();
  } else if (all_degrees.size() == 1) {
    degree = *all_degrees.begin();
  } else if (all_degrees.size() > 1) {
    throw std::invalid_argument("zero form with ambiguous degree: '" + std::string(text) + "'");
  }

  BinaryForm out(degree);
  for (const auto& [m, c] : poly.terms)
    if (m.first + m.second == degree) out[m.first] += c;
  return out;
}

BinaryForm parse_form(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') return parse_json_form(text);
  return parse_expression(text);
}

}  // namespace apolar
