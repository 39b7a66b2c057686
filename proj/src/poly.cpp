#include "tkr/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>

#include <nlohmann/json.hpp>

#include "tkr/errors.hpp"

namespace tkr {

namespace {

Int int_pow(const Int& base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<Int> binomial_row(int n) {
  std::vector<Int> row(n + 1);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) row[i] = row[i - 1] * (n - i + 1) / i;
  return row;
}

// Print order: total degree descending, then X-exponent descending.
bool prints_before(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  int ta = a.first + a.second, tb = b.first + b.second;
  if (ta != tb) return ta > tb;
  return a.first > b.first;
}

struct TermText {
  bool negative;
  std::string magnitude;
};

TermText render_term(const Int& coef, const std::vector<std::pair<std::string, int>>& vars) {
  TermText t;
  t.negative = coef < 0;
  Int mag = abs_int(coef);
  std::vector<std::string> pieces;
  for (const auto& [name, e] : vars) {
    if (e == 0) continue;
    pieces.push_back(e == 1 ? name : name + "^" + std::to_string(e));
  }
  if (pieces.empty() || mag != 1) pieces.insert(pieces.begin(), mag.str());
  t.magnitude = pieces[0];
  for (std::size_t i = 1; i < pieces.size(); ++i) t.magnitude += "*" + pieces[i];
  return t;
}

std::string assemble(const std::vector<TermText>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms[0].negative ? "-" + terms[0].magnitude : terms[0].magnitude;
  for (std::size_t i = 1; i < terms.size(); ++i)
    out += (terms[i].negative ? " - " : " + ") + terms[i].magnitude;
  return out;
}

// Shared parser for the canonical text form. Variables are single letters.
struct TextParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit TextParser(const std::string& str) : s(str) {}

  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eof() {
    skip_space();
    return pos >= s.size();
  }

  char peek() {
    skip_space();
    return pos < s.size() ? s[pos] : '\0';
  }

  Int parse_integer() {
    skip_space();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("ParseError", "expected an integer in polynomial text");
    return Int(s.substr(start, pos - start));
  }

  int parse_exponent() {
    if (peek() != '^') return 1;
    ++pos;
    Int e = parse_integer();
    return static_cast<int>(to_int64(e));
  }

  // One term: optional magnitude and '*'-joined variable powers.
  void parse_term(const std::vector<char>& var_names, Int sign,
                  const std::function<void(std::vector<int>, Int)>& emit) {
    Int coef = sign;
    std::vector<int> exps(var_names.size(), 0);
    bool saw_factor = false;
    while (true) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= parse_integer();
        saw_factor = true;
      } else {
        auto it = std::find(var_names.begin(), var_names.end(), c);
        if (it == var_names.end()) break;
        ++pos;
        exps[it - var_names.begin()] += parse_exponent();
        saw_factor = true;
      }
      if (peek() != '*') break;
      ++pos;
    }
    if (!saw_factor) fail("ParseError", "empty term in polynomial text");
    emit(exps, coef);
  }

  void parse_poly(const std::vector<char>& var_names,
                  const std::function<void(std::vector<int>, Int)>& emit) {
    if (eof()) fail("ParseError", "empty polynomial text");
    Int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos;
    } else if (peek() == '+') {
      ++pos;
    }
    parse_term(var_names, sign, emit);
    while (!eof()) {
      char c = peek();
      if (c == '+') sign = 1;
      else if (c == '-') sign = -1;
      else fail("ParseError", std::string("unexpected character '") + c + "' in polynomial text");
      ++pos;
      parse_term(var_names, sign, emit);
    }
  }
};

}  // namespace

BiPoly BiPoly::constant(Int c) {
  BiPoly p;
  p.add_term(0, 0, c);
  return p;
}

BiPoly BiPoly::monomial(int ex, int ey, Int c) {
  BiPoly p;
  p.add_term(ex, ey, c);
  return p;
}

Int BiPoly::coefficient(int ex, int ey) const {
  auto it = terms_.find({ex, ey});
  return it == terms_.end() ? Int(0) : it->second;
}

void BiPoly::add_term(int ex, int ey, const Int& c) {
  if (c == 0) return;
  if (ex < 0 || ey < 0) fail("OutOfRange", "negative exponent in polynomial");
  auto [it, inserted] = terms_.try_emplace({ex, ey}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, c);
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

BiPoly BiPoly::scaled(const Int& c) const {
  BiPoly r;
  for (const auto& [e, v] : terms_) r.add_term(e.first, e.second, v * c);
  return r;
}

BiPoly BiPoly::shifted(long long dx, long long dy) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    auto bx = binomial_row(e.first);
    auto by = binomial_row(e.second);
    for (int i = 0; i <= e.first; ++i)
      for (int j = 0; j <= e.second; ++j)
        r.add_term(i, j,
                   c * bx[i] * int_pow(Int(dx), e.first - i) * by[j] *
                       int_pow(Int(dy), e.second - j));
  }
  return r;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e.second, e.first, c);
  return r;
}

Int BiPoly::evaluate(const Int& x, const Int& y) const {
  Int total = 0;
  for (const auto& [e, c] : terms_) total += c * int_pow(x, e.first) * int_pow(y, e.second);
  return total;
}

BiPoly BiPoly::divided_by_x() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.first == 0) fail("NonExactDivision", "polynomial is not divisible by X");
    r.add_term(e.first - 1, e.second, c);
  }
  return r;
}

bool BiPoly::all_coefficients_positive() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::string BiPoly::to_text() const {
  std::vector<std::pair<std::pair<int, int>, Int>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return prints_before(a.first, b.first); });
  std::vector<TermText> rendered;
  for (const auto& [e, c] : sorted)
    rendered.push_back(render_term(c, {{"X", e.first}, {"Y", e.second}}));
  return assemble(rendered);
}

std::string BiPoly::to_json() const {
  std::vector<std::pair<std::pair<int, int>, Int>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return prints_before(a.first, b.first); });
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : sorted)
    arr.push_back({{"x", e.first}, {"y", e.second}, {"c", to_int64(c)}});
  return arr.dump();
}

BiPoly BiPoly::parse_text(const std::string& s) {
  BiPoly p;
  TextParser tp(s);
  tp.parse_poly({'X', 'Y'}, [&](std::vector<int> exps, Int c) {
    p.add_term(exps[0], exps[1], c);
  });
  return p;
}

BiPoly BiPoly::parse_json(const std::string& s) {
  nlohmann::json arr = nlohmann::json::parse(s, nullptr, false);
  if (arr.is_discarded() || !arr.is_array())
    fail("ParseError", "polynomial JSON must be an array of terms");
  BiPoly p;
  for (const auto& t : arr) {
    if (!t.contains("x") || !t.contains("y") || !t.contains("c"))
      fail("ParseError", "polynomial JSON term needs x, y, c");
    p.add_term(t["x"].get<int>(), t["y"].get<int>(), Int(t["c"].get<long long>()));
  }
  return p;
}

UniPoly UniPoly::constant(Int c) {
  UniPoly p;
  p.add_term(0, c);
  return p;
}

UniPoly UniPoly::monomial(int e, Int c) {
  UniPoly p;
  p.add_term(e, c);
  return p;
}

Int UniPoly::coefficient(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void UniPoly::add_term(int e, const Int& c) {
  if (c == 0) return;
  if (e < 0) fail("OutOfRange", "negative exponent in polynomial");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  UniPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  UniPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Int UniPoly::evaluate(const Int& v) const {
  Int total = 0;
  for (const auto& [e, c] : terms_) total += c * int_pow(v, e);
  return total;
}

std::string UniPoly::to_text() const {
  std::vector<std::pair<int, Int>> sorted(terms_.rbegin(), terms_.rend());
  std::vector<TermText> rendered;
  for (const auto& [e, c] : sorted) rendered.push_back(render_term(c, {{"L", e}}));
  return assemble(rendered);
}

std::string UniPoly::to_json() const {
  std::vector<std::pair<int, Int>> sorted(terms_.rbegin(), terms_.rend());
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : sorted) arr.push_back({{"e", e}, {"c", to_int64(c)}});
  return arr.dump();
}

UniPoly UniPoly::parse_text(const std::string& s) {
  UniPoly p;
  TextParser tp(s);
  tp.parse_poly({'L'}, [&](std::vector<int> exps, Int c) { p.add_term(exps[0], c); });
  return p;
}

UniPoly UniPoly::parse_json(const std::string& s) {
  nlohmann::json arr = nlohmann::json::parse(s, nullptr, false);
  if (arr.is_discarded() || !arr.is_array())
    fail("ParseError", "polynomial JSON must be an array of terms");
  UniPoly p;
  for (const auto& t : arr) {
    if (!t.contains("e") || !t.contains("c"))
      fail("ParseError", "polynomial JSON term needs e, c");
    p.add_term(t["e"].get<int>(), Int(t["c"].get<long long>()));
  }
  return p;
}

UniPoly to_bott_substitution(const BiPoly& p, int sign_exponent) {
  UniPoly r;
  for (const auto& [e, c] : p.terms()) {
    int flips = e.first + e.second + sign_exponent;
    r.add_term(e.second, flips % 2 == 0 ? c : Int(-c));
  }
  return r;
}

BiPoly one_plus_x_power(int n) {
  auto row = binomial_row(n);
  BiPoly p;
  for (int i = 0; i <= n; ++i) p.add_term(i, 0, row[i]);
  return p;
}

}  // namespace tkr
