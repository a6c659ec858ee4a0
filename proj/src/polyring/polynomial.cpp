#include "levelcert/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "levelcert/error.hpp"

namespace levelcert {

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms) {
    if (t.mono.deg != terms.front().mono.deg) return false;
  }
  return true;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coef != o.terms[i].coef || terms[i].mono != o.terms[i].mono) return false;
  }
  return true;
}

std::vector<Polynomial> PolyMatrix::column(int c) const {
  std::vector<Polynomial> col;
  col.reserve(rows);
  for (int r = 0; r < rows; ++r) col.push_back(at(r, c));
  return col;
}

void PolyMatrix::append_column(const std::vector<Polynomial>& col) {
  if (static_cast<int>(col.size()) != rows) throw MalformedInput("column length does not match row count");
  std::vector<Polynomial> next;
  next.reserve(static_cast<std::size_t>(rows) * (cols + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) next.push_back(std::move(at(r, c)));
    next.push_back(col[r]);
  }
  entries = std::move(next);
  ++cols;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Polynomial& f) { return f.is_zero(); });
}

PolyRing::PolyRing(PrimeField field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
  if (static_cast<int>(vars_.size()) > kMaxVars) {
    throw MalformedInput("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i] == vars_[j]) throw MalformedInput("duplicate variable name '" + vars_[i] + "'");
    }
  }
}

Polynomial PolyRing::constant(long long c) const {
  Polynomial f;
  auto v = field_.from_int(c);
  if (v) f.terms.push_back({Monomial{}, v});
  return f;
}

Polynomial PolyRing::variable(int i) const { return monomial(Monomial::variable(i)); }

Polynomial PolyRing::monomial(const Monomial& m, PrimeField::Elem c) const {
  Polynomial f;
  if (c) f.terms.push_back({m, c});
  return f;
}

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
  Polynomial r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = cmp(a.terms[i].mono, b.terms[j].mono);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      auto s = field_.add(a.terms[i].coef, b.terms[j].coef);
      if (s) r.terms.push_back({a.terms[i].mono, s});
      ++i;
      ++j;
    }
  }
  r.terms.insert(r.terms.end(), a.terms.begin() + static_cast<std::ptrdiff_t>(i), a.terms.end());
  r.terms.insert(r.terms.end(), b.terms.begin() + static_cast<std::ptrdiff_t>(j), b.terms.end());
  return r;
}

Polynomial PolyRing::neg(const Polynomial& a) const {
  Polynomial r = a;
  for (auto& t : r.terms) t.coef = field_.neg(t.coef);
  return r;
}

Polynomial PolyRing::sub(const Polynomial& a, const Polynomial& b) const {
  return sub_mul_term(a, b, Monomial{}, 1);
}

Polynomial PolyRing::scale(const Polynomial& a, PrimeField::Elem c) const {
  if (c == 0) return {};
  Polynomial r = a;
  for (auto& t : r.terms) t.coef = field_.mul(t.coef, c);
  return r;
}

Polynomial PolyRing::mul_term(const Polynomial& a, const Monomial& m, PrimeField::Elem c) const {
  if (c == 0) return {};
  Polynomial r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back({t.mono * m, field_.mul(t.coef, c)});
  return r;
}

Polynomial PolyRing::sub_mul_term(const Polynomial& a, const Polynomial& b, const Monomial& m,
                                  PrimeField::Elem c) const {
  if (c == 0 || b.is_zero()) return a;
  Polynomial r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  const auto nc = field_.neg(c);
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      r.terms.push_back(a.terms[i++]);
      continue;
    }
    Monomial bm = b.terms[j].mono * m;
    int s = i == a.terms.size() ? -1 : cmp(a.terms[i].mono, bm);
    if (s > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (s < 0) {
      r.terms.push_back({bm, field_.mul(b.terms[j].coef, nc)});
      ++j;
    } else {
      auto v = field_.add(a.terms[i].coef, field_.mul(b.terms[j].coef, nc));
      if (v) r.terms.push_back({bm, v});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> acc;
  acc.reserve(a.terms.size() * b.terms.size());
  for (const auto& s : a.terms) {
    for (const auto& t : b.terms) acc.push_back({s.mono * t.mono, field_.mul(s.coef, t.coef)});
  }
  return normalize(std::move(acc));
}

Polynomial PolyRing::pow(const Polynomial& a, int e) const {
  Polynomial r = constant(1);
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

Polynomial PolyRing::monic(const Polynomial& a) const {
  if (a.is_zero() || a.lead().coef == 1) return a;
  return scale(a, field_.inv(a.lead().coef));
}

Polynomial PolyRing::substitute(const Polynomial& a, const std::vector<Polynomial>& images,
                                const PolyRing& target) const {
  Polynomial r;
  for (const auto& t : a.terms) {
    Polynomial prod = target.constant(1);
    for (int v = 0; v < nvars(); ++v) {
      for (int k = 0; k < t.mono.exp[v]; ++k) prod = target.mul(prod, images[v]);
    }
    r = target.add(r, target.scale(prod, target.field().from_int(t.coef)));
  }
  return r;
}

Polynomial PolyRing::normalize(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(),
            [this](const Term& x, const Term& y) { return cmp(x.mono, y.mono) > 0; });
  Polynomial r;
  for (const auto& t : terms) {
    if (!r.terms.empty() && r.terms.back().mono == t.mono) {
      r.terms.back().coef = field_.add(r.terms.back().coef, t.coef);
      if (r.terms.back().coef == 0) r.terms.pop_back();
    } else if (t.coef) {
      r.terms.push_back(t);
    }
  }
  return r;
}

namespace {

class PolyParser {
 public:
  PolyParser(const PolyRing& ring, std::string_view text) : ring_(ring), s_(text) {}

  Polynomial run() {
    std::vector<Term> acc;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      long long sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc.push_back(term(sign));
      first = false;
    }
    return ring_.normalize(std::move(acc));
  }

 private:
  Term term(long long sign) {
    Term t;
    PrimeField::Elem coef = ring_.field().from_int(sign);
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) fail("expected a coefficient or variable");
      if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coef = ring_.field().mul(coef, ring_.field().from_int(integer()));
      } else if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_') {
        std::size_t start = pos_;
        std::string name = identifier();
        int v = var_index(name, start);
        int e = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip_ws();
          if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent after '^'");
          long long ev = integer();
          if (ev > 60000) fail("exponent too large");
          e = static_cast<int>(ev);
        }
        t.mono.exp[v] = static_cast<std::uint16_t>(t.mono.exp[v] + e);
        t.mono.deg += e;
      } else {
        fail(std::string("unexpected character '") + s_[pos_] + "'");
      }
      have_factor = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    t.coef = coef;
    return t;
  }

  long long integer() {
    long long v = 0;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = (v * 10 + (s_[pos_] - '0')) % (1LL << 40);
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  int var_index(const std::string& name, std::size_t at) {
    const auto& vars = ring_.var_names();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) return static_cast<int>(i);
    }
    pos_ = at;
    fail("unknown variable '" + name + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw MalformedInput("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  const PolyRing& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial PolyRing::parse(std::string_view text) const { return PolyParser(*this, text).run(); }

std::string PolyRing::format(const Monomial& m) const {
  std::string out;
  for (int v = 0; v < nvars(); ++v) {
    if (!m.exp[v]) continue;
    if (!out.empty()) out += '*';
    out += vars_[v];
    if (m.exp[v] > 1) out += '^' + std::to_string(m.exp[v]);
  }
  return out.empty() ? "1" : out;
}

std::string PolyRing::format(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms) {
    long long c = field_.to_signed(t.coef);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    if (t.mono.is_one()) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += format(t.mono);
    }
  }
  return out;
}

}  // namespace levelcert
