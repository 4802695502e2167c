#include "toric/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw Error("duplicate name '" + names_[i] + "'");
}

std::optional<std::size_t> VariableSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VariableSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown name '" + std::string(name) + "'");
}

VariableSet VariableSet::with(std::string name) const {
  auto names = names_;
  names.push_back(std::move(name));
  return VariableSet(std::move(names));
}

VariableSet VariableSet::without(std::size_t index) const {
  auto names = names_;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(index));
  return VariableSet(std::move(names));
}

Exponent total_degree(std::span<const Exponent> exponents) {
  return std::accumulate(exponents.begin(), exponents.end(), Exponent{0});
}

Binomial Binomial::from_sides(ExponentVector lhs, ExponentVector rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("binomial sides have different lengths");
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const Exponent common = std::min(lhs[i], rhs[i]);
    lhs[i] -= common;
    rhs[i] -= common;
  }
  Binomial b;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] == rhs[i]) continue;
    if (lhs[i] < rhs[i]) std::swap(lhs, rhs);
    break;
  }
  b.plus_ = std::move(lhs);
  b.minus_ = std::move(rhs);
  return b;
}

bool Binomial::is_zero() const { return plus_ == minus_; }

Exponent Binomial::degree() const { return std::max(total_degree(plus_), total_degree(minus_)); }

IntVector Binomial::difference() const {
  IntVector out(plus_.size());
  for (std::size_t i = 0; i < plus_.size(); ++i) {
    out[i] = Integer(static_cast<unsigned long>(plus_[i]));
    out[i] -= Integer(static_cast<unsigned long>(minus_[i]));
  }
  return out;
}

Binomial Binomial::embed(std::size_t nvars, std::span<const std::size_t> positions) const {
  if (positions.size() != plus_.size()) throw std::invalid_argument("embedding has wrong length");
  ExponentVector p(nvars, 0), m(nvars, 0);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    p[positions[i]] = plus_[i];
    m[positions[i]] = minus_[i];
  }
  return from_sides(std::move(p), std::move(m));
}

DisjointSplit split_disjoint(std::span<const Integer> u) {
  ExponentVector plus(u.size(), 0), minus(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Integer mag = abs(u[i]);
    if (!mag.fits_ulong_p()) throw std::overflow_error("exponent does not fit in 64 bits");
    (sgn(u[i]) > 0 ? plus : minus)[i] = mag.get_ui();
  }
  const auto first = std::find_if(u.begin(), u.end(), [](const Integer& v) { return sgn(v) != 0; });
  const bool flipped = first != u.end() && sgn(*first) < 0;
  return {Binomial::from_sides(std::move(plus), std::move(minus)), flipped};
}

Binomial homogenize_binomial(const Binomial& b) {
  ExponentVector p = b.plus(), m = b.minus();
  const Exponent dp = total_degree(p), dm = total_degree(m);
  p.push_back(dp < dm ? dm - dp : 0);
  m.push_back(dm < dp ? dp - dm : 0);
  return Binomial::from_sides(std::move(p), std::move(m));
}

Binomial dehomogenize_binomial(const Binomial& b, std::size_t var) {
  if (var >= b.nvars()) throw std::out_of_range("variable index out of range");
  ExponentVector p = b.plus(), m = b.minus();
  p.erase(p.begin() + static_cast<std::ptrdiff_t>(var));
  m.erase(m.begin() + static_cast<std::ptrdiff_t>(var));
  return Binomial::from_sides(std::move(p), std::move(m));
}

std::pair<VariableSet, Binomial> homogenize_binomial(const VariableSet& vars, const Binomial& b,
                                                     const std::string& x) {
  if (b.nvars() != vars.size()) throw std::invalid_argument("binomial does not match its variables");
  if (vars.contains(x)) throw Error("homogenizing variable '" + x + "' is not fresh");
  return {vars.with(x), homogenize_binomial(b)};
}

std::pair<VariableSet, Binomial> dehomogenize_binomial(const VariableSet& vars, const Binomial& b,
                                                       std::string_view x) {
  if (b.nvars() != vars.size()) throw std::invalid_argument("binomial does not match its variables");
  const std::size_t i = vars.index_of(x);
  return {vars.without(i), dehomogenize_binomial(b, i)};
}

Binomial embed_by_name(const VariableSet& from, const Binomial& b, const VariableSet& to) {
  if (b.nvars() != from.size()) throw std::invalid_argument("binomial does not match its variables");
  std::vector<std::size_t> positions;
  for (const auto& name : from.names()) positions.push_back(to.index_of(name));
  return b.embed(to.size(), positions);
}

std::string format_monomial(const VariableSet& vars, std::span<const Exponent> exponents) {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (exponents[i] != 1) out += '^' + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_binomial(const VariableSet& vars, const Binomial& b) {
  if (b.is_zero()) return "0";
  return format_monomial(vars, b.plus()) + " - " + format_monomial(vars, b.minus());
}

namespace {

class BinomialParser {
public:
  BinomialParser(const VariableSet& vars, std::string_view text) : vars_(vars), text_(text) {}

  Binomial parse() {
    skip_space();
    if (peek() == '0') {
      ++pos_;
      skip_space();
      if (pos_ != text_.size()) fail("unexpected text after '0'");
      return Binomial(vars_.size());
    }
    ExponentVector lhs = monomial();
    skip_space();
    if (peek() != '-') fail("expected '-' between the two monomials");
    ++pos_;
    ExponentVector rhs = monomial();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected text after binomial");
    return Binomial::from_sides(std::move(lhs), std::move(rhs));
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, what + " in '" + std::string(text_) + "'");
  }

  ExponentVector monomial() {
    ExponentVector e(vars_.size(), 0);
    skip_space();
    if (peek() == '1') {
      ++pos_;
      return e;
    }
    while (true) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '.'))
        ++pos_;
      if (start == pos_) fail("expected a variable name");
      const std::string name(text_.substr(start, pos_ - start));
      const auto idx = vars_.find(name);
      if (!idx) fail("unknown variable '" + name + "'");
      Exponent power = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, power);
        if (ec != std::errc() || ptr == first) fail("malformed exponent");
        pos_ += static_cast<std::size_t>(ptr - first);
      }
      e[*idx] += power;
      skip_space();
      if (peek() != '*') break;
      ++pos_;
    }
    return e;
  }

  const VariableSet& vars_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Binomial parse_binomial(const VariableSet& vars, std::string_view text) {
  return BinomialParser(vars, text).parse();
}

} // namespace toric
