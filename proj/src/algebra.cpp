#include "hitcalc/algebra.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <sstream>

#include "hitcalc/error.hpp"

namespace hitcalc {

namespace {

void check_arity(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": arity " << a << " vs " << b;
    throw Error(ErrorCode::arity_mismatch, os.str());
  }
}

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b)
    throw Error(ErrorCode::overflow, "exponent overflow");
  return a + b;
}

// Sorts into the global order and cancels pairs of equal terms.
void normalize(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end(), MonomialOrder{});
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) {
      if (out != i) terms[out] = std::move(terms[i]);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// (sum of x_j over the bits of `mask`)^e, using Frobenius on each binary
// digit of e: (sum x_j)^(2^b) = sum x_j^(2^b).
Polynomial linear_form_power(std::size_t k, std::uint64_t mask, Exponent e) {
  Polynomial result(Monomial::one(k));
  if (e == 0) return result;
  if (mask == 0) return Polynomial(k);
  for (int b = 0; b < 64; ++b) {
    if (!((e >> b) & 1u)) continue;
    std::vector<Monomial> factor_terms;
    for (std::size_t j = 0; j < k; ++j) {
      if (!((mask >> j) & 1u)) continue;
      std::vector<Exponent> exps(k, 0);
      exps[j] = Exponent{1} << b;
      factor_terms.emplace_back(std::move(exps));
    }
    result = result * Polynomial::from_terms(k, std::move(factor_terms));
  }
  return result;
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() &&
         (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
          text[pos] == '\r'))
    ++pos;
}

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos,
                             const std::string& msg) {
  std::ostringstream os;
  os << msg << " at offset " << pos << " in \"" << text << "\"";
  throw Error(ErrorCode::parse, os.str());
}

Monomial parse_monomial_at(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != '(')
    parse_fail(text, pos, "expected '('");
  ++pos;
  std::vector<Exponent> exps;
  skip_space(text, pos);
  if (pos < text.size() && text[pos] == ')') {
    ++pos;
    return Monomial(std::move(exps));
  }
  for (;;) {
    skip_space(text, pos);
    Exponent value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range)
      parse_fail(text, pos, "exponent out of range");
    if (ec != std::errc{}) parse_fail(text, pos, "expected exponent");
    pos = static_cast<std::size_t>(ptr - text.data());
    exps.push_back(value);
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      break;
    }
    parse_fail(text, pos, "expected ',' or ')'");
  }
  return Monomial(std::move(exps));
}

}  // namespace

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (Exponent e : exps_) d = checked_add(d, e);
  return d;
}

bool Monomial::is_spike() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) {
    return e == std::numeric_limits<Exponent>::max() ||
           std::has_single_bit(e + 1);
  });
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_arity(arity(), other.arity(), "monomial product");
  std::vector<Exponent> exps(exps_.size());
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] = checked_add(exps_[i], other.exps_[i]);
  return Monomial(std::move(exps));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

Polynomial::Polynomial(const Monomial& m) : arity_(m.arity()), terms_{m} {}

Polynomial Polynomial::from_terms(std::size_t arity,
                                  std::vector<Monomial> terms) {
  for (const auto& m : terms) check_arity(arity, m.arity(), "polynomial term");
  normalize(terms);
  Polynomial p(arity);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, MonomialOrder{});
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return is_homogeneous_of(terms_.front().degree());
}

bool Polynomial::is_homogeneous_of(Exponent degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Monomial& m) { return m.degree() == degree; });
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_arity(arity_, other.arity_, "polynomial sum");
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(),
                                other.terms_.begin(), other.terms_.end(),
                                std::back_inserter(merged), MonomialOrder{});
  terms_ = std::move(merged);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_arity(a.arity_, b.arity_, "polynomial product");
  std::vector<Monomial> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.push_back(x * y);
  return Polynomial::from_terms(a.arity_, std::move(terms));
}

std::vector<Monomial> enumerate_monomials(std::size_t k, Exponent d) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "k must be positive");
  std::vector<Monomial> out;
  std::vector<Exponent> exps(k, 0);
  // Depth-first, largest leading exponent first.
  auto rec = [&](auto&& self, std::size_t pos, Exponent remaining) -> void {
    if (pos + 1 == k) {
      exps[pos] = remaining;
      out.emplace_back(exps);
      return;
    }
    for (Exponent e = remaining + 1; e-- > 0;) {
      exps[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

LinearSubstitution::LinearSubstitution(std::vector<std::uint64_t> rows)
    : rows_(std::move(rows)) {
  if (rows_.size() > 64)
    throw Error(ErrorCode::invalid_argument,
                "linear substitutions support at most 64 variables");
  const std::uint64_t mask =
      rows_.size() == 64 ? ~std::uint64_t{0}
                         : (std::uint64_t{1} << rows_.size()) - 1;
  for (auto r : rows_)
    if (r & ~mask)
      throw Error(ErrorCode::invalid_argument,
                  "substitution row refers to a missing variable");
}

LinearSubstitution LinearSubstitution::identity(std::size_t k) {
  std::vector<std::uint64_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = std::uint64_t{1} << i;
  return LinearSubstitution(std::move(rows));
}

LinearSubstitution LinearSubstitution::transposition(std::size_t k,
                                                     std::size_t i,
                                                     std::size_t j) {
  if (i >= k || j >= k)
    throw Error(ErrorCode::invalid_argument, "variable index out of range");
  auto g = identity(k);
  std::swap(g.rows_[i], g.rows_[j]);
  return g;
}

LinearSubstitution LinearSubstitution::transvection(std::size_t k,
                                                    std::size_t target,
                                                    std::size_t source) {
  if (target >= k || source >= k || target == source)
    throw Error(ErrorCode::invalid_argument, "bad transvection indices");
  auto g = identity(k);
  g.rows_[target] |= std::uint64_t{1} << source;
  return g;
}

namespace {

std::optional<std::size_t> parse_variable(std::size_t k, std::string_view s) {
  static constexpr std::string_view letters = "xyztu";
  if (s.size() == 1 && k <= letters.size()) {
    auto pos = letters.find(s[0]);
    if (pos != std::string_view::npos && pos < k) return pos;
    return std::nullopt;
  }
  if (s.size() >= 2 && s[0] == 'x') {
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), idx);
    if (ec == std::errc{} && ptr == s.data() + s.size() && idx >= 1 &&
        idx <= k)
      return idx - 1;
  }
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

LinearSubstitution LinearSubstitution::parse(std::size_t k,
                                             std::string_view text) {
  auto g = identity(k);
  auto bad = [&](const std::string& why) -> Error {
    return Error(ErrorCode::parse,
                 "bad substitution \"" + std::string(text) + "\": " + why);
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto clause = trim(text.substr(start, end - start));
    start = end + 1;
    if (clause.empty()) continue;
    auto arrow = clause.find("->");
    if (arrow == std::string_view::npos) throw bad("missing '->'");
    auto lhs = parse_variable(k, trim(clause.substr(0, arrow)));
    if (!lhs) throw bad("unknown variable");
    std::uint64_t row = 0;
    auto rhs = clause.substr(arrow + 2);
    std::size_t s = 0;
    while (s <= rhs.size()) {
      auto e = rhs.find('+', s);
      if (e == std::string_view::npos) e = rhs.size();
      auto name = trim(rhs.substr(s, e - s));
      s = e + 1;
      if (name == "0") continue;
      auto v = parse_variable(k, name);
      if (!v) throw bad("unknown variable");
      row ^= std::uint64_t{1} << *v;
    }
    g.rows_[*lhs] = row;
  }
  return g;
}

bool LinearSubstitution::is_invertible() const {
  auto rows = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && !((rows[r] >> col) & 1u)) ++r;
    if (r == rows.size()) return false;
    std::swap(rows[r], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && ((rows[i] >> col) & 1u)) rows[i] ^= rows[rank];
    ++rank;
  }
  return true;
}

LinearSubstitution LinearSubstitution::then(
    const LinearSubstitution& next) const {
  check_arity(arity(), next.arity(), "substitution composition");
  std::vector<std::uint64_t> rows(arity(), 0);
  for (std::size_t i = 0; i < arity(); ++i)
    for (std::size_t j = 0; j < arity(); ++j)
      if (entry(i, j)) rows[i] ^= next.rows_[j];
  return LinearSubstitution(std::move(rows));
}

Polynomial substitute(const Polynomial& p, const LinearSubstitution& g) {
  check_arity(p.arity(), g.arity(), "substitute");
  const std::size_t k = p.arity();
  Polynomial result(k);
  for (const auto& m : p.terms()) {
    Polynomial image(Monomial::one(k));
    for (std::size_t i = 0; i < k && !image.is_zero(); ++i)
      if (m[i] != 0) image = image * linear_form_power(k, g.row(i), m[i]);
    result += image;
  }
  return result;
}

Polynomial project(const Polynomial& p, std::span<const std::size_t> kill) {
  std::vector<bool> killed(p.arity(), false);
  for (auto v : kill) {
    if (v >= p.arity())
      throw Error(ErrorCode::invalid_argument,
                  "projection kills a missing variable");
    killed[v] = true;
  }
  const auto remaining =
      static_cast<std::size_t>(std::count(killed.begin(), killed.end(), false));
  std::vector<Monomial> terms;
  for (const auto& m : p.terms()) {
    std::vector<Exponent> exps;
    exps.reserve(remaining);
    bool survives = true;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (!killed[i]) {
        exps.push_back(m[i]);
      } else if (m[i] != 0) {
        survives = false;
        break;
      }
    }
    if (survives) terms.emplace_back(std::move(exps));
  }
  return Polynomial::from_terms(remaining, std::move(terms));
}

std::string to_string(const Monomial& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (i) s += ',';
    s += std::to_string(m[i]);
  }
  s += ')';
  return s;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& m : p.terms()) {
    if (!s.empty()) s += '+';
    s += to_string(m);
  }
  return s;
}

Monomial parse_monomial(std::string_view text) {
  std::size_t pos = 0;
  auto m = parse_monomial_at(text, pos);
  skip_space(text, pos);
  if (pos != text.size()) parse_fail(text, pos, "trailing input");
  return m;
}

Polynomial parse_polynomial(std::string_view text,
                            std::optional<std::size_t> arity) {
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos < text.size() && text[pos] == '0') {
    ++pos;
    skip_space(text, pos);
    if (pos != text.size()) parse_fail(text, pos, "trailing input after 0");
    if (!arity)
      throw Error(ErrorCode::parse, "arity of the zero polynomial is unknown");
    return Polynomial(*arity);
  }
  std::vector<Monomial> terms;
  for (;;) {
    terms.push_back(parse_monomial_at(text, pos));
    if (arity) check_arity(*arity, terms.back().arity(), "parsed term");
    check_arity(terms.front().arity(), terms.back().arity(), "parsed term");
    skip_space(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != '+') parse_fail(text, pos, "expected '+'");
    ++pos;
  }
  const auto k = terms.front().arity();
  return Polynomial::from_terms(k, std::move(terms));
}

std::string variable_name(std::size_t k, std::size_t i) {
  static constexpr std::string_view letters = "xyztu";
  if (k <= letters.size()) return std::string(1, letters[i]);
  return "x" + std::to_string(i + 1);
}

}  // namespace hitcalc
