#include "levelcert/session.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace levelcert {

SessionError::SessionError(int line, int column, const std::string& message)
    : MalformedInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Loc {
  int line = 1;
  int column = 1;
};

constexpr std::uint64_t kDefaultPrime = 32003;

[[noreturn]] void fail(Loc at, const std::string& message) { throw SessionError(at.line, at.column, message); }

class Reader {
 public:
  explicit Reader(std::string_view text) : s_(text) {}

  void skip() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip();
    return pos_ >= s_.size();
  }
  Loc loc() {
    skip();
    return loc_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  bool accept(std::string_view word) {
    skip();
    if (s_.substr(pos_, word.size()) != word) return false;
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(loc(), std::string("expected '") + c + "'" + found());
  }

  std::string ident() {
    skip();
    Loc at = loc_;
    std::string out;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      bool ok = std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                (!out.empty() && (std::isdigit(static_cast<unsigned char>(c)) || c == '\''));
      if (!ok) break;
      out.push_back(c);
      advance();
    }
    if (out.empty()) fail(at, "expected a name" + found());
    return out;
  }

  long long integer() {
    skip();
    Loc at = loc_;
    std::string out;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      out.push_back(s_[pos_]);
      advance();
    }
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      out.push_back(s_[pos_]);
      advance();
    }
    if (out.empty() || out == "-" || out == "+") fail(at, "expected an integer" + found());
    try {
      return std::stoll(out);
    } catch (const std::out_of_range&) {
      fail(at, "integer out of range");
    }
  }

  /// Raw text up to the next stop character (not consumed), trimmed.
  std::pair<std::string, Loc> raw(std::string_view stops) {
    skip();
    Loc at = loc_;
    std::string out;
    while (pos_ < s_.size() && stops.find(s_[pos_]) == std::string_view::npos && s_[pos_] != '#') {
      out.push_back(s_[pos_]);
      advance();
    }
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return {out, at};
  }

  void expect_word(const std::string& word) {
    Loc at = loc();
    bool ok = pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])) && ident() == word;
    if (!ok) fail(at, "expected '" + word + "'");
  }

  std::string found() {
    skip();
    if (pos_ >= s_.size()) return ", found end of input";
    return std::string(", found '") + s_[pos_] + "'";
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else {
      ++loc_.column;
    }
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Loc loc_;
};

struct RawPoly {
  std::string text;
  Loc at;
};
using RawMatrix = std::vector<std::vector<RawPoly>>;

// poly, poly, ... up to ';' or '}' (possibly empty)
std::vector<RawPoly> poly_list(Reader& r) {
  std::vector<RawPoly> out;
  if (r.peek() == ';' || r.peek() == '}') return out;
  do {
    auto [t, at] = r.raw(",;}");
    if (t.empty()) fail(at, "expected a polynomial");
    out.push_back({t, at});
  } while (r.accept(','));
  return out;
}

std::vector<int> int_list(Reader& r) {
  std::vector<int> out;
  r.expect('[');
  if (r.accept(']')) return out;
  do {
    Loc at = r.loc();
    long long v = r.integer();
    if (v < -1000000 || v > 1000000) fail(at, "twist out of range");
    out.push_back(static_cast<int>(v));
  } while (r.accept(','));
  r.expect(']');
  return out;
}

RawMatrix matrix(Reader& r) {
  RawMatrix rows;
  r.expect('[');
  if (r.accept(']')) return rows;
  do {
    r.expect('[');
    std::vector<RawPoly> row;
    if (!r.accept(']')) {
      do {
        auto [t, at] = r.raw(",]");
        if (t.empty()) fail(at, "expected a polynomial");
        row.push_back({t, at});
      } while (r.accept(','));
      r.expect(']');
    }
    rows.push_back(std::move(row));
  } while (r.accept(','));
  r.expect(']');
  return rows;
}

void end_statement(Reader& r) {
  if (r.accept(';')) return;
  if (r.peek() != '}') fail(r.loc(), "expected ';'" + r.found());
}

Polynomial to_poly(const Ring& R, const RawPoly& p) {
  try {
    return R.reduce(R.poly().parse(p.text));
  } catch (const MalformedInput& e) {
    fail(p.at, e.what());
  }
}

// Matrix with the given shape; an empty literal is the zero matrix.
PolyMatrix to_matrix(const Ring& R, const RawMatrix& m, int rows, int cols, Loc at, const std::string& what) {
  PolyMatrix out(rows, cols);
  if (m.empty() || (rows == 0 && std::all_of(m.begin(), m.end(), [](auto& row) { return row.empty(); }))) {
    return out;
  }
  if (static_cast<int>(m.size()) != rows) {
    fail(at, what + " has " + std::to_string(m.size()) + " rows, expected " + std::to_string(rows));
  }
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(m[i].size()) != cols) {
      fail(at, what + " row " + std::to_string(i) + " has " + std::to_string(m[i].size()) + " entries, expected " +
                   std::to_string(cols));
    }
    for (int j = 0; j < cols; ++j) out.at(i, j) = to_poly(R, m[i][j]);
  }
  return out;
}

std::string fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class Parser {
 public:
  Parser(std::string_view text, std::optional<std::uint64_t> prime) : r_(text), prime_(prime) {}

  Session run() {
    while (!r_.eof()) {
      Loc at = r_.loc();
      std::string kw = r_.ident();
      if (kw == "ring") {
        ring_block(at);
      } else if (kw == "ideal") {
        ideal_block(at);
      } else if (kw == "module") {
        module_block(at);
      } else if (kw == "complex") {
        complex_block(at);
      } else if (kw == "map") {
        map_block(at);
      } else {
        fail(at, "unknown block '" + kw + "'");
      }
    }
    return std::move(s_);
  }

 private:
  std::string new_name() {
    Loc at = r_.loc();
    std::string n = r_.ident();
    if (!names_.insert(n).second) fail(at, "duplicate name '" + n + "'");
    return n;
  }

  const NamedRing& ring_ref() {
    Loc at = r_.loc();
    std::string n = r_.ident();
    const NamedRing* R = s_.ring(n);
    if (!R) fail(at, "unknown ring '" + n + "'");
    return *R;
  }

  // key [INDEX] = ... ; calls body(key, index, key location) for each statement
  void statements(const std::function<void(const std::string&, std::optional<long long>, Loc)>& body) {
    r_.expect('{');
    while (!r_.accept('}')) {
      if (r_.eof()) fail(r_.loc(), "unterminated block");
      Loc at = r_.loc();
      std::string key = r_.ident();
      std::optional<long long> index;
      if (r_.peek() != '=') index = r_.integer();
      r_.expect('=');
      body(key, index, at);
      end_statement(r_);
    }
  }

  void once(std::set<std::string>& seen, const std::string& key, Loc at) {
    if (!seen.insert(key).second) fail(at, "repeated field '" + key + "'");
  }

  void no_index(const std::optional<long long>& index, const std::string& key, Loc at) {
    if (index) fail(at, "field '" + key + "' takes no index");
  }

  void ring_block(Loc at) {
    std::string name = new_name();
    std::optional<std::uint64_t> p;
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::grevlex;
    std::vector<RawPoly> rels;
    std::set<std::string> seen;
    statements([&](const std::string& key, std::optional<long long> index, Loc kat) {
      once(seen, key, kat);
      no_index(index, key, kat);
      if (key == "p") {
        Loc vat = r_.loc();
        long long v = r_.integer();
        if (v < 2) fail(vat, "characteristic must be a prime");
        p = static_cast<std::uint64_t>(v);
      } else if (key == "vars") {
        do vars.push_back(r_.ident());
        while (r_.accept(','));
      } else if (key == "order") {
        Loc vat = r_.loc();
        std::string o = r_.ident();
        if (o == "grevlex") {
          order = MonomialOrder::grevlex;
        } else if (o == "lex") {
          order = MonomialOrder::lex;
        } else {
          fail(vat, "unknown monomial order '" + o + "'");
        }
      } else if (key == "relations") {
        rels = poly_list(r_);
      } else {
        fail(kat, "unknown ring field '" + key + "'");
      }
    });
    if (vars.empty()) fail(at, "ring '" + name + "' has no variables");
    std::vector<std::string> rel_text;
    for (const auto& r : rels) rel_text.push_back(r.text);
    try {
      s_.rings.push_back({name, make_ring(prime_.value_or(p.value_or(kDefaultPrime)), vars, order, rel_text)});
    } catch (const std::exception& e) {
      fail(at, "ring '" + name + "': " + e.what());
    }
  }

  void ideal_block(Loc at) {
    std::string name = new_name();
    r_.expect_word("in");
    const NamedRing& R = ring_ref();
    std::string ring_name = R.name;
    RingHandle ring = R.ring;
    std::vector<Polynomial> gens;
    std::set<std::string> seen;
    statements([&](const std::string& key, std::optional<long long> index, Loc kat) {
      once(seen, key, kat);
      no_index(index, key, kat);
      if (key != "gens") fail(kat, "unknown ideal field '" + key + "'");
      for (const auto& g : poly_list(r_)) gens.push_back(to_poly(*ring, g));
    });
    for (const auto& g : gens) {
      if (!g.is_homogeneous()) fail(at, "ideal '" + name + "' has an inhomogeneous generator");
    }
    s_.ideals.push_back({name, ring_name, Ideal(ring, gens)});
  }

  void module_block(Loc at) {
    std::string name = new_name();
    r_.expect_word("over");
    const NamedRing& R = ring_ref();
    std::string ring_name = R.name;
    RingHandle ring = R.ring;
    RawMatrix pres;
    Loc pres_at;
    std::optional<std::vector<int>> twists;
    std::set<std::string> seen;
    statements([&](const std::string& key, std::optional<long long> index, Loc kat) {
      once(seen, key, kat);
      no_index(index, key, kat);
      if (key == "presentation") {
        pres_at = r_.loc();
        pres = matrix(r_);
      } else if (key == "twists") {
        twists = int_list(r_);
      } else {
        fail(kat, "unknown module field '" + key + "'");
      }
    });
    if (!twists) fail(at, "module '" + name + "' has no twists");
    int rows = static_cast<int>(twists->size());
    int cols = pres.empty() ? 0 : static_cast<int>(pres[0].size());
    PolyMatrix m = to_matrix(*ring, pres, rows, cols, pres_at, "presentation");
    try {
      s_.modules.push_back({name, ring_name, ModulePresentation::make(ring, *twists, m)});
    } catch (const MalformedInput& e) {
      fail(at, "module '" + name + "': " + e.what());
    }
  }

  void complex_block(Loc at) {
    std::string name = new_name();
    r_.expect_word("over");
    const NamedRing& R = ring_ref();
    std::string ring_name = R.name;
    RingHandle ring = R.ring;
    std::optional<std::pair<int, int>> range;
    std::map<int, std::vector<int>> twists;
    std::map<int, std::pair<RawMatrix, Loc>> diffs;
    std::set<std::string> seen;
    statements([&](const std::string& key, std::optional<long long> index, Loc kat) {
      std::string tag = index ? key + " " + std::to_string(*index) : key;
      once(seen, tag, kat);
      if (key == "range") {
        no_index(index, key, kat);
        long long lo = r_.integer();
        if (!r_.accept("..")) fail(r_.loc(), "expected '..'" + r_.found());
        long long hi = r_.integer();
        if (hi < lo || hi - lo > 1000) fail(kat, "invalid range");
        range = {static_cast<int>(lo), static_cast<int>(hi)};
      } else if (key == "twists" || key == "d") {
        if (!index) fail(kat, "field '" + key + "' needs a degree");
        if (!range) fail(kat, "range must precede '" + key + "'");
        if (*index < range->first || *index > range->second || (key == "d" && *index == range->first)) {
          fail(kat, "degree " + std::to_string(*index) + " is outside the range for '" + key + "'");
        }
        int i = static_cast<int>(*index);
        if (key == "twists") {
          twists[i] = int_list(r_);
        } else {
          Loc mat_at = r_.loc();
          diffs[i] = {matrix(r_), mat_at};
        }
      } else {
        fail(kat, "unknown complex field '" + key + "'");
      }
    });
    if (!range) fail(at, "complex '" + name + "' has no range");
    std::vector<std::vector<int>> tw;
    std::vector<PolyMatrix> ds;
    for (int i = range->first; i <= range->second; ++i) {
      tw.push_back(twists.count(i) ? twists[i] : std::vector<int>{});
      if (i == range->first) continue;
      int rows = static_cast<int>(tw[tw.size() - 2].size());
      int cols = static_cast<int>(tw.back().size());
      auto it = diffs.find(i);
      if (it == diffs.end()) {
        ds.emplace_back(rows, cols);
      } else {
        ds.push_back(to_matrix(*ring, it->second.first, rows, cols, it->second.second, "d " + std::to_string(i)));
      }
    }
    std::vector<std::vector<int>> perms;
    try {
      s_.complexes.push_back({name, ring_name, ChainComplex::make(ring, range->first, tw, ds, &perms)});
    } catch (const MalformedInput& e) {
      fail(at, "complex '" + name + "': " + e.what());
    }
    perms_[name] = {range->first, std::move(perms)};
  }

  void map_block(Loc at) {
    std::string name = new_name();
    auto complex_ref = [&]() -> const NamedComplex& {
      Loc cat = r_.loc();
      std::string n = r_.ident();
      const NamedComplex* C = s_.complex(n);
      if (!C) fail(cat, "unknown complex '" + n + "'");
      return *C;
    };
    r_.expect_word("from");
    const NamedComplex& X = complex_ref();
    r_.expect_word("to");
    const NamedComplex& Y = complex_ref();
    if (X.ring != Y.ring) fail(at, "map '" + name + "' joins complexes over different rings");
    std::string xs = X.name, ys = Y.name;
    ChainComplex src = X.complex, tgt = Y.complex;
    const Ring& R = *src.ring();
    std::map<int, std::pair<RawMatrix, Loc>> comps;
    std::set<std::string> seen;
    statements([&](const std::string& key, std::optional<long long> index, Loc kat) {
      if (key != "component") fail(kat, "unknown map field '" + key + "'");
      if (!index) fail(kat, "field 'component' needs a degree");
      once(seen, key + " " + std::to_string(*index), kat);
      Loc mat_at = r_.loc();
      comps[static_cast<int>(*index)] = {matrix(r_), mat_at};
    });
    std::map<int, PolyMatrix> m;
    const auto& ps = perms_.at(xs);
    const auto& pt = perms_.at(ys);
    auto perm = [](const std::pair<int, std::vector<std::vector<int>>>& p, int i) {
      int k = i - p.first;
      return k >= 0 && k < static_cast<int>(p.second.size()) ? p.second[k] : std::vector<int>{};
    };
    for (const auto& [i, raw] : comps) {
      PolyMatrix given = to_matrix(R, raw.first, tgt.rank(i), src.rank(i), raw.second, "component " + std::to_string(i));
      auto rs = perm(pt, i), cs = perm(ps, i);
      PolyMatrix sorted(given.rows, given.cols);
      for (int a = 0; a < given.rows; ++a) {
        for (int b = 0; b < given.cols; ++b) sorted.at(a, b) = given.at(rs[a], cs[b]);
      }
      m[i] = std::move(sorted);
    }
    try {
      s_.maps.push_back({name, xs, ys, ChainMap::make(src, tgt, std::move(m))});
    } catch (const MalformedInput& e) {
      fail(at, "map '" + name + "': " + e.what());
    }
  }

  Reader r_;
  std::optional<std::uint64_t> prime_;
  Session s_;
  std::set<std::string> names_;
  std::map<std::string, std::pair<int, std::vector<std::vector<int>>>> perms_;
};

template <class T>
const T* find_named(const std::vector<T>& v, std::string_view name) {
  for (const auto& x : v) {
    if (x.name == name) return &x;
  }
  return nullptr;
}

std::string format_list(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

std::string format_matrix(const PolyRing& S, const PolyMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return "[]";
  std::string out = "[";
  for (int i = 0; i < m.rows; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < m.cols; ++j) out += (j ? ", " : "") + S.format(m.at(i, j));
    out += "]";
  }
  return out + "]";
}

}  // namespace

const NamedRing* Session::ring(std::string_view name) const { return find_named(rings, name); }
const NamedIdeal* Session::ideal(std::string_view name) const { return find_named(ideals, name); }
const NamedModule* Session::module(std::string_view name) const { return find_named(modules, name); }
const NamedComplex* Session::complex(std::string_view name) const { return find_named(complexes, name); }
const NamedMap* Session::map(std::string_view name) const { return find_named(maps, name); }

Session parse_session(std::string_view text, std::optional<std::uint64_t> prime) {
  Session s = Parser(text, prime).run();
  s.digest = fnv1a(text);
  return s;
}

std::string serialize_session(const Session& s) {
  std::ostringstream out;
  for (const auto& [name, R] : s.rings) {
    const auto& S = R->poly();
    out << "ring " << name << " {\n  p = " << R->field().characteristic() << ";\n  vars = ";
    for (int i = 0; i < S.nvars(); ++i) out << (i ? ", " : "") << S.var_names()[i];
    out << ";\n  order = " << (S.order() == MonomialOrder::lex ? "lex" : "grevlex") << ";\n";
    if (!R->relations().empty()) {
      out << "  relations = ";
      for (std::size_t i = 0; i < R->relations().size(); ++i) out << (i ? ", " : "") << S.format(R->relations()[i]);
      out << ";\n";
    }
    out << "}\n\n";
  }
  for (const auto& I : s.ideals) {
    const auto& S = I.ideal.ring()->poly();
    out << "ideal " << I.name << " in " << I.ring << " {\n  gens = ";
    const auto& g = I.ideal.generators();
    for (std::size_t i = 0; i < g.size(); ++i) out << (i ? ", " : "") << S.format(g[i]);
    out << ";\n}\n\n";
  }
  for (const auto& M : s.modules) {
    const auto& S = M.module.ring->poly();
    out << "module " << M.name << " over " << M.ring << " {\n  presentation = "
        << format_matrix(S, M.module.presentation) << ";\n  twists = " << format_list(M.module.twists) << ";\n}\n\n";
  }
  for (const auto& C : s.complexes) {
    const auto& F = C.complex;
    const auto& S = F.ring()->poly();
    out << "complex " << C.name << " over " << C.ring << " {\n";
    if (F.empty_window()) {
      out << "  range = 0..0;\n  twists 0 = [];\n}\n\n";
      continue;
    }
    out << "  range = " << F.lo() << ".." << F.hi() << ";\n";
    for (int i = F.lo(); i <= F.hi(); ++i) out << "  twists " << i << " = " << format_list(F.twists(i)) << ";\n";
    for (int i = F.lo() + 1; i <= F.hi(); ++i) {
      PolyMatrix d = F.differential(i);
      if (d.is_zero()) continue;
      out << "  d " << i << " = " << format_matrix(S, d) << ";\n";
    }
    out << "}\n\n";
  }
  for (const auto& M : s.maps) {
    const auto& X = M.map.source();
    const auto& S = X.ring()->poly();
    out << "map " << M.name << " from " << M.source << " to " << M.target << " {\n";
    for (int i = X.lo(); i <= X.hi() && !X.empty_window(); ++i) {
      PolyMatrix c = M.map.component(i);
      if (c.is_zero()) continue;
      out << "  component " << i << " = " << format_matrix(S, c) << ";\n";
    }
    out << "}\n\n";
  }
  return out.str();
}

}  // namespace levelcert
