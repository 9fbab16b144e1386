#include "infdef/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>

#include "infdef/error.hpp"

namespace infdef {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(i) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL + (h >> 7);
  return h;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind == OrderKind::degrevlex) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::string_view to_string(OrderKind kind) {
  return kind == OrderKind::degrevlex ? "degrevlex" : "lex";
}

// -------------------------------------------------------------------- Ring

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring::Ring(std::vector<std::string> variables, Field field, MonomialOrder order)
    : vars_(std::move(variables)), field_(field), order_(order) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_identifier(v))
      throw Error(ErrorKind::syntax, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw Error(ErrorKind::syntax, "duplicate variable '" + v + "'");
  }
}

RingPtr Ring::make(std::vector<std::string> variables, Field field, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(variables), field, order);
}

std::size_t Ring::index_of(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end())
    throw Error(ErrorKind::unknown_variable, "unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

RingPtr Ring::with_order(MonomialOrder order) const {
  return make(vars_, field_, order);
}

std::string Ring::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Monomial one(ring->nvars());
  return monomial(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  auto n = ring->nvars();
  auto one = ring->field().one();
  return monomial(std::move(ring), Monomial::variable(n, i), one);
}

// Sorts, merges equal monomials and drops zeros.
void Polynomial::normalize() {
  for (const auto& t : terms_)
    if (t.monomial.size() != ring_->nvars())
      throw Error(ErrorKind::ring_mismatch, "monomial length does not match ring");
  const auto& order = ring_->order();
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial)
      merged.back().coefficient += t.coefficient;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient.is_zero(); });
  terms_ = std::move(merged);
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw Error(ErrorKind::ring_mismatch, "polynomials belong to different rings");
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return field().zero();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

// Merge two descending term lists, optionally negating the right side.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              bool subtract, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = i == a.size()   ? -1
              : j == b.size() ? 1
                              : order.compare(a[i].monomial, b[j].monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Term t = b[j++];
      if (subtract) t.coefficient = -t.coefficient;
      out.push_back(std::move(t));
    } else {
      Scalar c = subtract ? a[i].coefficient - b[j].coefficient
                          : a[i].coefficient + b[j].coefficient;
      if (!c.is_zero()) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_ring(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, false, ring_->order());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_ring(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, true, ring_->order());
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Monomial m = s.monomial * t.monomial;
      auto [it, inserted] = acc.try_emplace(std::move(m), s.coefficient * t.coefficient);
      if (!inserted) it->second += s.coefficient * t.coefficient;
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, c});
  return Polynomial(a.ring_, std::move(terms));
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  if (c.is_zero()) return Polynomial(p.ring_);
  Polynomial r = p;
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  // multiplication by a monomial preserves the order of terms
  for (auto& t : r.terms_) {
    t.monomial = t.monomial * m;
    t.coefficient *= c;
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, field().one());
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= ring_->nvars())
    throw Error(ErrorKind::out_of_range, "derivative variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    auto e = t.monomial[i];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m[i] = e - 1;
    terms.push_back({std::move(m), t.coefficient * field().from_int(static_cast<long>(e))});
  }
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::rebase(RingPtr target, std::span<const std::size_t> var_map) const {
  if (!(target->field() == field()))
    throw Error(ErrorKind::ring_mismatch, "rebase across different fields");
  if (var_map.size() != ring_->nvars())
    throw Error(ErrorKind::ring_mismatch, "variable map has wrong length");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) m[var_map[i]] += t.monomial[i];
    terms.push_back({std::move(m), t.coefficient});
  }
  return Polynomial(std::move(target), std::move(terms));
}

Polynomial Polynomial::reorder(const MonomialOrder& order) const {
  return Polynomial(ring_->with_order(order), terms_);
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images,
                                  const RingPtr& target) const {
  if (images.size() != ring_->nvars())
    throw Error(ErrorKind::ring_mismatch, "substitution needs one image per variable");
  for (const auto& img : images)
    if (!(*img.ring() == *target))
      throw Error(ErrorKind::ring_mismatch, "substitution image outside the target ring");
  if (!(target->field() == field()))
    throw Error(ErrorKind::ring_mismatch, "substitution across different fields");

  // cache powers of each image
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, field().one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i] != 0) term = term * power(i, t.monomial[i]);
    result += term;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string c = t.coefficient.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (t.monomial.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + '*';
      out += ring_->format(t.monomial);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(*a.ring_ == *b.ring_)) return false;
  return a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

std::vector<Polynomial> jacobian(const Polynomial& f) {
  std::vector<Polynomial> out;
  out.reserve(f.ring()->nvars());
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) out.push_back(f.derivative(i));
  return out;
}

// ------------------------------------------------------------------ Parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      terms.push_back(parse_term(negative));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t parse_exponent() {
    std::size_t start = pos_;
    mpz_class e = parse_integer();
    if (e > 1000000) throw ParseError(start, "exponent too large");
    return static_cast<std::uint32_t>(e.get_ui());
  }

  Term parse_term(bool negative) {
    Scalar coeff = ring_->field().one();
    Monomial mono(ring_->nvars());
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      char c = peek();
      if (is_digit(c)) {
        std::size_t start = pos_;
        mpz_class num = parse_integer();
        mpz_class den = 1;
        skip_ws();
        if (peek() == '/') {
          ++pos_;
          skip_ws();
          den = parse_integer();
          if (den == 0) throw Error(ErrorKind::zero_denominator,
                                    "zero denominator at position " + std::to_string(start));
        }
        coeff *= ring_->field().from_fraction(num, den);
      } else if (is_ident_start(c)) {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
          ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        auto it = std::find(ring_->variables().begin(), ring_->variables().end(), name);
        if (it == ring_->variables().end())
          throw Error(ErrorKind::unknown_variable,
                      "unknown variable '" + std::string(name) + "' at position " +
                          std::to_string(start));
        std::size_t idx = static_cast<std::size_t>(it - ring_->variables().begin());
        std::uint32_t e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_exponent();
        }
        mono[idx] += e;
      } else {
        throw ParseError(pos_, at_end() ? "unexpected end of input"
                                        : std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        expect_factor = true;
      } else if (is_ident_start(peek())) {
        // "3x" juxtaposition after a coefficient
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    if (negative) coeff = -coeff;
    return {std::move(mono), std::move(coeff)};
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

Polynomial parse_poly(std::string_view text, std::vector<std::string> variables, Field field) {
  if (variables.empty()) throw Error(ErrorKind::syntax, "variable list is empty");
  return parse_poly(text, Ring::make(std::move(variables), field));
}

Field parse_field(std::string_view text) {
  if (text == "Q") return Field::rationals();
  if (text.starts_with("Fp:")) {
    auto digits = text.substr(3);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorKind::syntax, "malformed field '" + std::string(text) + "'");
    if (digits.size() > 12) throw Error(ErrorKind::out_of_range, "characteristic too large");
    return Field::prime(std::stoull(std::string(digits)));
  }
  throw Error(ErrorKind::syntax, "unknown field '" + std::string(text) + "', expected Q or Fp:<p>");
}

}  // namespace infdef
