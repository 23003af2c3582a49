#include "burniat/parse.hpp"

#include <cctype>
#include <charconv>

#include "burniat/checked.hpp"
#include "burniat/errors.hpp"

namespace burniat {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DivisorClass parse_all() {
    DivisorClass out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

  Torsion parse_torsion_all() {
    skip_ws();
    Torsion out;
    if (peek() == '(') {
      out = torsion_literal();
    } else {
      out = bare_bits();
    }
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after torsion");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    std::int64_t v = 0;
    const auto r = std::from_chars(text_.data() + digits, text_.data() + pos_, v);
    if (r.ec != std::errc{}) {
      pos_ = start;
      throw OverflowError("integer literal out of range at position " + std::to_string(start));
    }
    return neg ? checked_neg(v) : v;
  }

  unsigned bit() {
    skip_ws();
    if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1')) fail("expected bit 0 or 1");
    return static_cast<unsigned>(text_[pos_++] - '0');
  }

  DivisorClass expr() {
    DivisorClass out = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        out += term();
      } else if (c == '-') {
        ++pos_;
        out -= term();
      } else {
        return out;
      }
    }
  }

  DivisorClass term() {
    bool neg = false;
    while (peek() == '-') {
      ++pos_;
      neg = !neg;
    }
    std::int64_t mult = 1;
    if (at_digit()) {
      mult = integer();
      if (peek() == '*') {
        ++pos_;
      } else if (mult == 0 && !starts_atom()) {
        return DivisorClass{};
      }
    }
    DivisorClass a = atom();
    if (neg) mult = checked_neg(mult);
    return mult == 1 ? a : mult * a;
  }

  bool starts_atom() {
    const char c = peek();
    return c == '[' || c == '(' || c == 'K' || std::isalpha(static_cast<unsigned char>(c)) != 0;
  }

  DivisorClass atom() {
    const char c = peek();
    if (c == '[') return coords();
    if (c == '(') {
      if (looks_like_torsion()) return torsion_class(torsion_literal());
      ++pos_;
      DivisorClass inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'K') {
      ++pos_;
      return canonical_class();
    }
    if (pos_ + 2 <= text_.size()) {
      if (const auto label = CurveLabel::parse(text_.substr(pos_, 2))) {
        const bool boundary =
            pos_ + 2 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 2]));
        if (boundary) {
          pos_ += 2;
          return generator(*label);
        }
      }
    }
    if (c == '\0') fail("unexpected end of input");
    fail("expected generator, K, coordinate literal or torsion");
  }

  bool looks_like_torsion() const {
    std::size_t p = pos_ + 1;
    int bits = 0;
    for (; p < text_.size() && text_[p] != ')'; ++p) {
      const char ch = text_[p];
      if (ch == '0' || ch == '1') {
        ++bits;
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        return false;
      }
    }
    return p < text_.size() && bits == 6;
  }

  Torsion bare_bits() {
    unsigned v = 0;
    for (int i = 0; i < 6; ++i) v = (v << 1) | bit();
    return Torsion::from_index(v);
  }

  Torsion torsion_literal() {
    expect('(');
    const Torsion t = bare_bits();
    expect(')');
    return t;
  }

  Slot slot() {
    Slot s;
    s.deg = integer();
    expect(':');
    const unsigned e1 = bit();
    const unsigned e2 = bit();
    s.tor = Bit2(e1, e2);
    return s;
  }

  DivisorClass coords() {
    const std::size_t start = pos_;
    expect('[');
    const std::int64_t d = integer();
    expect(';');
    std::array<Slot, 6> slots;
    slots[0] = slot();
    expect(',');
    slots[1] = slot();
    expect(',');
    slots[2] = slot();
    bool full = false;
    if (peek() == ';') {
      ++pos_;
      full = true;
      slots[3] = slot();
      expect(',');
      slots[4] = slot();
      expect(',');
      slots[5] = slot();
    }
    expect(']');
    try {
      return full ? DivisorClass::from_full(d, slots)
                  : DivisorClass::from_truncated(d, slots[0], slots[1], slots[2]);
    } catch (const MembershipError& e) {
      throw MembershipError(std::string(e.what()) + " (literal at position " +
                            std::to_string(start) + ")");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string slot_str(const Slot& s, char sep) {
  return std::to_string(s.deg) + sep + s.tor.str();
}

}  // namespace

DivisorClass parse_divisor(std::string_view text) { return Parser(text).parse_all(); }

Torsion parse_torsion(std::string_view text) { return Parser(text).parse_torsion_all(); }

std::string format_truncated(const DivisorClass& divisor) {
  return "[" + std::to_string(divisor.d()) + "; " + slot_str(divisor.slot(0), ':') + ", " +
         slot_str(divisor.slot(1), ':') + ", " + slot_str(divisor.slot(2), ':') + "]";
}

std::string format(const DivisorClass& divisor) {
  std::string out = format_truncated(divisor);
  out.pop_back();
  out += "; " + slot_str(divisor.slot(3), ':') + ", " + slot_str(divisor.slot(4), ':') + ", " +
         slot_str(divisor.slot(5), ':') + "]";
  return out;
}

std::string format_table(const DivisorClass& divisor) {
  std::string out = "(" + std::to_string(divisor.d()) + " |";
  for (int k = 0; k < 6; ++k) {
    if (k == 3) out += " |";
    out += (k % 3 == 0 ? " " : ", ") + slot_str(divisor.slot(k), ' ');
  }
  return out + ")";
}

}  // namespace burniat
