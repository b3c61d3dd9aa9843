#include "leaftype/exponent.hpp"

#include <cctype>
#include <sstream>

#include "leaftype/error.hpp"

namespace leaftype {

SymbolTable::SymbolTable(std::vector<std::string> names) {
  for (auto const& n : names) {
    declare(n);
  }
}

SymbolId SymbolTable::declare(std::string const& name) {
  if (name.empty() || name == "i" ||
      !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
    throw InvalidInput("invalid symbol name '" + name + "'");
  }
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
      throw InvalidInput("invalid symbol name '" + name + "'");
    }
  }
  if (find(name)) {
    throw InvalidInput("symbol '" + name + "' declared twice");
  }
  names_.push_back(name);
  return static_cast<SymbolId>(names_.size() - 1);
}

std::optional<SymbolId> SymbolTable::find(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) {
      return static_cast<SymbolId>(k);
    }
  }
  return std::nullopt;
}

LinearForm LinearForm::symbol(SymbolId id, Rational coeff) {
  LinearForm f;
  if (coeff != 0) {
    f.coeffs_.emplace(id, std::move(coeff));
  }
  return f;
}

Rational LinearForm::coefficient(SymbolId id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

LinearForm& LinearForm::operator+=(LinearForm const& other) {
  constant_ += other.constant_;
  for (auto const& [id, c] : other.coeffs_) {
    auto [it, inserted] = coeffs_.emplace(id, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        coeffs_.erase(it);
      }
    }
  }
  return *this;
}

LinearForm& LinearForm::operator-=(LinearForm const& other) {
  return *this += -other;
}

LinearForm& LinearForm::operator*=(Rational const& s) {
  if (s == 0) {
    constant_ = 0;
    coeffs_.clear();
    return *this;
  }
  constant_ *= s;
  for (auto& [id, c] : coeffs_) {
    c *= s;
  }
  return *this;
}

LinearForm LinearForm::operator-() const {
  LinearForm r = *this;
  r *= Rational(-1);
  return r;
}

ExponentScalar& ExponentScalar::operator+=(ExponentScalar const& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExponentScalar& ExponentScalar::operator-=(ExponentScalar const& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExponentScalar& ExponentScalar::operator*=(Rational const& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

ExponentScalar ExponentScalar::times_gaussian(Rational const& re,
                                              Rational const& im) const {
  // (x + iy)(a + ib) = (ax - by) + i(bx + ay)
  return ExponentScalar(re_ * re - im_ * im, re_ * im + im_ * re);
}

namespace {

void append_form(std::ostringstream& os, LinearForm const& f, bool imaginary,
                 SymbolTable const* symbols, bool& first) {
  auto emit = [&](Rational const& c, std::string const& atom) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) {
        os << "-";
      }
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string factors;
    if (imaginary) {
      factors = "i";
    }
    if (!atom.empty()) {
      factors += factors.empty() ? atom : "*" + atom;
    }
    if (factors.empty()) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << factors;
    } else {
      os << to_string(mag) << "*" << factors;
    }
  };
  if (f.constant() != 0) {
    emit(f.constant(), "");
  }
  for (auto const& [id, c] : f.coefficients()) {
    emit(c, symbols ? symbols->name(id) : "$" + std::to_string(id));
  }
}

}  // namespace

std::string ExponentScalar::to_string(SymbolTable const& symbols) const {
  std::ostringstream os;
  bool first = true;
  append_form(os, re_, false, &symbols, first);
  append_form(os, im_, true, &symbols, first);
  if (first) {
    return "0";
  }
  return os.str();
}

std::string ExponentScalar::key() const {
  std::ostringstream os;
  auto dump = [&](LinearForm const& f) {
    os << leaftype::to_string(f.constant());
    for (auto const& [id, c] : f.coefficients()) {
      os << ',' << id << ':' << leaftype::to_string(c);
    }
  };
  dump(re_);
  os << '|';
  dump(im_);
  return os.str();
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, SymbolTable const& symbols)
      : text_(text), symbols_(symbols) {}

  ExponentScalar parse() {
    ExponentScalar total;
    skip_space();
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) {
        if (first) {
          fail("empty expression");
        }
        break;
      }
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      total += term() * sign;
      first = false;
    }
    return total;
  }

 private:
  ExponentScalar term() {
    Rational coeff(1);
    int i_power = 0;
    std::optional<SymbolId> sym;
    bool expect_factor = true;
    while (expect_factor) {
      skip_space();
      if (at_end()) {
        fail("expected a factor");
      }
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= number();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id = identifier();
        if (id == "i") {
          ++i_power;
        } else {
          auto found = symbols_.find(id);
          if (!found) {
            fail("unknown symbol '" + id + "'");
          }
          if (sym) {
            fail("products of symbols are not linear");
          }
          sym = *found;
        }
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      expect_factor = false;
      if (!at_end() && peek() == '*') {
        ++pos_;
        expect_factor = true;
      } else if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("can only divide by a number");
        }
        Rational d = number();
        if (d == 0) {
          fail("division by zero");
        }
        coeff /= d;
        skip_space();
        if (!at_end() && peek() == '*') {
          ++pos_;
          expect_factor = true;
        }
      }
    }
    // i^k cycles through 1, i, -1, -i.
    bool imaginary = (i_power % 2) == 1;
    if ((i_power % 4) >= 2) {
      coeff = -coeff;
    }
    LinearForm f = sym ? LinearForm::symbol(*sym, coeff) : LinearForm(coeff);
    return imaginary ? ExponentScalar(LinearForm{}, f) : ExponentScalar(f, LinearForm{});
  }

  Rational number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(std::string const& msg) const {
    throw InvalidInput("exponent '" + std::string(text_) + "' at offset " +
                       std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  SymbolTable const& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

ExponentScalar parse_exponent(std::string_view text, SymbolTable const& symbols) {
  return ExpressionParser(text, symbols).parse();
}

}  // namespace leaftype
