#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "levelcert/level.hpp"
#include "levelcert/session.hpp"

namespace levelcert {

/// Unknown command or object, or a missing or invalid flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandFlags {
  std::optional<std::string> complex;
  std::optional<std::string> module;
  std::optional<std::string> ring;
  std::optional<std::string> ideal;  // `m` names the maximal ideal unless declared
  std::optional<std::string> suite;  // gaps | pd | koszul | everyn
  int power = 1;
  int steps = 10;
  int max_n = 5;
  const CancelToken* cancel = nullptr;
};

struct CommandResult {
  nlohmann::json document;
  bool ok = true;  // false when a verify assertion failed
};

/// Commands: homology, resolve, koszul, level, verify. The document always
/// carries the keys object, command, lower, upper, exact, certificates,
/// cited, homology, betti, notes.
CommandResult run_command(const std::string& command, const Session& session, const CommandFlags& flags);

nlohmann::json certificate_json(const BoundCertificate& c, const CancelToken* cancel = nullptr);
nlohmann::json homology_json(const HomologyData& h);

}  // namespace levelcert
