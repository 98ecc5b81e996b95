#include "isopair/laurent.hpp"

#include <cctype>

#include "isopair/error.hpp"

namespace isopair {

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [v, e] : b) {
    int& slot = r[v];
    slot += e;
    if (slot == 0) r.erase(v);
  }
  return r;
}

Monomial invert(const Monomial& m) {
  Monomial r;
  for (const auto& [v, e] : m) r[v] = -e;
  return r;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Laurent parse() {
    Laurent result;
    skip();
    if (pos_ == s_.size()) throw ParseError("empty Laurent expression");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-' at offset " + std::to_string(pos_) + " in '" + s_ + "'");
      }
      first = false;
      result += term() * Laurent(sign);
    }
    return result;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "' in '" + s_ + "'");
    ++pos_;
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
      throw ParseError("expected integer in '" + s_ + "'");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  Laurent term() {
    std::int64_t coeff = 1;
    Monomial mono;
    bool any = false;
    while (true) {
      skip();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        coeff *= std::stoll(s_.substr(start, pos_ - start));
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string name;
        while (std::isalpha(static_cast<unsigned char>(peek()))) name.push_back(s_[pos_++]);
        if (peek() == '_') {
          ++pos_;
          name.push_back('_');
          if (peek() == '{') {
            std::size_t close = s_.find('}', pos_);
            if (close == std::string::npos) throw ParseError("unterminated subscript in '" + s_ + "'");
            name += s_.substr(pos_, close - pos_ + 1);
            pos_ = close + 1;
          } else {
            name += "{";
            name.push_back(s_[pos_++]);
            name += "}";
          }
        }
        int e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          if (peek() == '{') {
            ++pos_;
            e = integer();
            expect('}');
          } else {
            e = integer();
          }
        }
        mono = multiply(mono, Monomial{{name, e}});
        any = true;
      } else {
        break;
      }
    }
    if (!any) throw ParseError("expected a term in '" + s_ + "'");
    return Laurent::monomial(mono, coeff);
  }
};

}  // namespace

Laurent::Laurent(long c) {
  if (c != 0) terms_[Monomial{}] = c;
}

Laurent Laurent::variable(const std::string& name) { return monomial(Monomial{{name, 1}}); }

Laurent Laurent::monomial(const Monomial& m, std::int64_t coeff) {
  Laurent r;
  r.add_term(m, coeff);
  return r;
}

Laurent Laurent::parse(const std::string& text) { return Parser(text).parse(); }

bool Laurent::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

void Laurent::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  Laurent r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(multiply(m1, m2), c1 * c2);
  *this = std::move(r);
  return *this;
}

Laurent Laurent::inverse() const {
  if (!is_unit()) throw DivisionByZero("Laurent division by a non-unit: " + str());
  const auto& [m, c] = *terms_.begin();
  return monomial(invert(m), c);
}

Laurent& Laurent::operator/=(const Laurent& o) { return *this *= o.inverse(); }

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (c < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    first = false;
    if (m.empty() || mag != 1) out += std::to_string(mag);
    for (const auto& [v, e] : m) {
      out += v;
      if (e != 1) out += "^{" + std::to_string(e) + "}";
    }
  }
  return out;
}

Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
Laurent operator/(Laurent a, const Laurent& b) { return a /= b; }

}  // namespace isopair
