#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levelcert/complex.hpp"
#include "levelcert/error.hpp"
#include "levelcert/resolution.hpp"

namespace levelcert {

/// Syntax or semantic error in a session file, with a 1-based location.
class SessionError : public MalformedInput {
 public:
  SessionError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct NamedRing {
  std::string name;
  RingHandle ring;
};

struct NamedIdeal {
  std::string name;
  std::string ring;
  Ideal ideal;
};

struct NamedModule {
  std::string name;
  std::string ring;
  ModulePresentation module;
};

struct NamedComplex {
  std::string name;
  std::string ring;
  ChainComplex complex;
};

struct NamedMap {
  std::string name;
  std::string source;
  std::string target;
  ChainMap map;
};

/// Parsed and validated session. Objects keep declaration order per kind.
struct Session {
  std::vector<NamedRing> rings;
  std::vector<NamedIdeal> ideals;
  std::vector<NamedModule> modules;
  std::vector<NamedComplex> complexes;
  std::vector<NamedMap> maps;
  std::string digest;  // FNV-1a of the source text, hex

  const NamedRing* ring(std::string_view name) const;
  const NamedIdeal* ideal(std::string_view name) const;
  const NamedModule* module(std::string_view name) const;
  const NamedComplex* complex(std::string_view name) const;
  const NamedMap* map(std::string_view name) const;
};

/// Block grammar:
///   ring NAME { p = INT; vars = id, ...; order = grevlex|lex; relations = poly, ...; }  (p defaults to 32003)
///   ideal NAME in RING { gens = poly, ...; }
///   module NAME over RING { presentation = [[poly, ...], ...]; twists = [int, ...]; }
///   complex NAME over RING { range = LO..HI; twists I = [int, ...]; d I = [[poly, ...], ...]; }
///   map NAME from COMPLEX to COMPLEX { component I = [[poly, ...], ...]; }
/// `d I` maps degree I to I-1 with rows indexing the target generators.
/// `#` starts a comment; the semicolon before `}` is optional. `prime`
/// replaces the characteristic of every ring.
Session parse_session(std::string_view text, std::optional<std::uint64_t> prime = std::nullopt);

/// Canonical text: generators sorted by twist, entries in normal form.
std::string serialize_session(const Session& s);

}  // namespace levelcert
