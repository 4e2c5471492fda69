#include "bei/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstring>

#include "bei/errors.hpp"

namespace bei {

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int k = 0; k < kMaxVariables; ++k)
    if (exp[k] > other.exp[k]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int k = 0; k < kMaxVariables; ++k)
    if (exp[k] && other.exp[k]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int k = 0; k < kMaxVariables; ++k) {
    int e = a.exp[k] + b.exp[k];
    if (e > 255) throw InputError("exponent overflow");
    m.exp[k] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int k = 0; k < kMaxVariables; ++k) m.exp[k] = std::max(a.exp[k], b.exp[k]);
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int k = 0; k < kMaxVariables; ++k) m.exp[k] = static_cast<std::uint8_t>(a.exp[k] - b.exp[k]);
  return m;
}

Monomial variable(int index) {
  Monomial m;
  m.exp[index] = 1;
  return m;
}

std::string variable_name(int index, int num_vertices) {
  if (index < num_vertices) return "x" + std::to_string(index + 1);
  return "y" + std::to_string(index - num_vertices + 1);
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t words[kMaxVariables / 8];
  std::memcpy(words, m.exp.data(), sizeof(words));
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

Poly Poly::from_terms(std::vector<Term> terms, const PrimeField& field) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Poly out;
  for (auto& t : terms) {
    std::uint32_t c = t.coeff % field.p();
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = field.add(out.terms_.back().coeff, c);
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (c != 0) {
      out.terms_.push_back({t.mono, c});
    }
  }
  return out;
}

Poly Poly::monomial(const Monomial& m, std::uint32_t coeff) {
  Poly out;
  if (coeff != 0) out.terms_.push_back({m, coeff});
  return out;
}

Poly Poly::from_sorted_terms(std::vector<Term> terms) {
  Poly out;
  out.terms_ = std::move(terms);
  return out;
}

Poly sub_mul(const Poly& f, std::uint32_t c, const Monomial& m, const Poly& g,
             const PrimeField& field) {
  Poly out;
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto fi = f.terms_.begin();
  auto gi = g.terms_.begin();
  const std::uint32_t negc = field.neg(c);
  while (fi != f.terms_.end() || gi != g.terms_.end()) {
    if (gi == g.terms_.end()) {
      out.terms_.push_back(*fi++);
      continue;
    }
    Monomial gm = gi->mono * m;
    if (fi == f.terms_.end() || gm > fi->mono) {
      out.terms_.push_back({gm, field.mul(negc, gi->coeff)});
      ++gi;
    } else if (fi->mono > gm) {
      out.terms_.push_back(*fi++);
    } else {
      std::uint32_t v = field.add(fi->coeff, field.mul(negc, gi->coeff));
      if (v != 0) out.terms_.push_back({gm, v});
      ++fi;
      ++gi;
    }
  }
  return out;
}

Poly add(const Poly& f, const Poly& g, const PrimeField& field) {
  return sub_mul(f, field.neg(1), Monomial{}, g, field);
}

Poly sub(const Poly& f, const Poly& g, const PrimeField& field) {
  return sub_mul(f, 1, Monomial{}, g, field);
}

Poly scale(const Poly& f, std::uint32_t c, const PrimeField& field) {
  Poly out;
  if (c % field.p() == 0) return out;
  out.terms_ = f.terms_;
  for (auto& t : out.terms_) t.coeff = field.mul(t.coeff, c);
  return out;
}

Poly mul_monomial(const Poly& f, const Monomial& m) {
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) t.mono = t.mono * m;  // order-preserving
  return Poly::from_sorted_terms(std::move(terms));
}

Poly make_monic(const Poly& f, const PrimeField& field) {
  if (f.is_zero()) return f;
  return scale(f, field.inv(f.leading().coeff), field);
}

Poly drop_variables(const Poly& f, const Monomial& vars_mask) {
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    bool zero = false;
    for (int k = 0; k < kMaxVariables && !zero; ++k)
      if (vars_mask.exp[k] && t.mono.exp[k]) zero = true;
    if (!zero) kept.push_back(t);
  }
  return Poly::from_sorted_terms(std::move(kept));
}

std::string to_string(const Monomial& m, int num_vertices) {
  std::string out;
  for (int k = 0; k < 2 * num_vertices; ++k) {
    if (m.exp[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(k, num_vertices);
    if (m.exp[k] > 1) out += "^" + std::to_string(m.exp[k]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Poly& f, int num_vertices, const PrimeField& field) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    long long c = field.to_signed(t.coeff);
    bool negative = c < 0;
    long long mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool one = t.mono.is_one();
    if (mag != 1 || one) {
      out += std::to_string(mag);
      if (!one) out += '*';
    }
    if (!one) out += to_string(t.mono, num_vertices);
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, int n, const PrimeField& field) : s_(s), n_(n), field_(field) {}

  Poly parse() {
    std::vector<Term> terms;
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip();
    }
    while (true) {
      Term t = term();
      if (negative) t.coeff = field_.neg(t.coeff);
      terms.push_back(t);
      skip();
      if (pos_ == s_.size()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      skip();
    }
    return Poly::from_terms(std::move(terms), field_);
  }

 private:
  Term term() {
    Term t{Monomial{}, 1};
    bool have_factor = false;
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coeff = field_.mul(t.coeff, field_.from_int(number()));
      } else if (peek() == 'x' || peek() == 'y') {
        char kind = get();
        long long idx = number();
        if (idx < 1 || idx > n_) fail("variable index out of range");
        int var = kind == 'x' ? x_var(static_cast<int>(idx)) : y_var(n_, static_cast<int>(idx));
        long long e = 1;
        skip();
        if (peek() == '^') {
          get();
          skip();
          e = number();
        }
        if (t.mono.exp[var] + e > 255) fail("exponent too large");
        t.mono.exp[var] = static_cast<std::uint8_t>(t.mono.exp[var] + e);
      } else {
        fail("expected a coefficient or variable");
      }
      have_factor = true;
      skip();
      if (peek() != '*') break;
      get();
    }
    if (!have_factor) fail("empty term");
    return t;
  }

  long long number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    long long v = 0;
    std::from_chars(s_.data() + start, s_.data() + pos_, v);
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial '" + std::string(s_) + "' at column " + std::to_string(pos_ + 1) +
                     ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int n_;
  const PrimeField& field_;
};

}  // namespace

Poly parse_poly(std::string_view text, int num_vertices, const PrimeField& field) {
  return PolyParser(text, num_vertices, field).parse();
}

}  // namespace bei
