#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "levelcert/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw levelcert::UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified bounds on the level of complexes over graded quotient rings"};
  std::string command, file;
  levelcert::CommandFlags flags;
  std::optional<std::uint64_t> prime;
  bool pretty = false;
  app.add_option("command", command, "homology | resolve | koszul | level | verify")
      ->required()
      ->check(CLI::IsMember({"homology", "resolve", "koszul", "level", "verify"}));
  app.add_option("file", file, "session file, or - for stdin")->required();
  app.add_option("--complex", flags.complex, "complex name");
  app.add_option("--module", flags.module, "module name");
  app.add_option("--ring", flags.ring, "ring name");
  app.add_option("--ideal", flags.ideal, "ideal name; m is the maximal ideal unless declared");
  app.add_option("--power", flags.power, "Koszul complex on the C-th power of the ideal")->check(CLI::PositiveNumber);
  app.add_option("--steps", flags.steps, "resolution bound (default 10)")->check(CLI::PositiveNumber);
  app.add_option("--prime", prime, "override the characteristic of every ring");
  app.add_option("--suite", flags.suite, "verify suite")->check(CLI::IsMember({"gaps", "pd", "koszul", "everyn"}));
  app.add_option("--max-n", flags.max_n, "largest n for the everyn suite")->check(CLI::NonNegativeNumber);
  app.add_flag("--pretty", pretty, "indent the JSON output");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    levelcert::Session session = levelcert::parse_session(read_input(file), prime);
    levelcert::CommandResult res = levelcert::run_command(command, session, flags);
    res.document["session"] = session.digest;
    std::cout << res.document.dump(pretty ? 2 : -1) << "\n";
    return res.ok ? 0 : 1;
  } catch (const levelcert::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
