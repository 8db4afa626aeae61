#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/arith/rational.hpp"
#include "brauer/errors.hpp"

namespace brauer::cli {

enum class Command {
  Ramify,
  Embed,
  Distinguish,
  UnramifiedGroup,
  FfRamify,
  GenusBound,
  EllipticBound,
  OracleCheck,
};

enum class OutputFormat { Text, Structured };

enum class ExitCode : int {
  Ok = 0,
  Usage = 1,
  Parse = 2,
  Precondition = 3,
  UnresolvedSquare = 4,
  OracleMismatch = 5,
  Internal = 6,
};

/// Wrong command, arity or flag value.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string to_string(Command c);
std::optional<Command> command_from_string(std::string_view name);
const std::vector<Command>& all_commands();
/// Positional argument names, e.g. {"FIELD", "ALGEBRA"} for embed.
const std::vector<std::string>& operands(Command c);
std::string describe(Command c);

struct Request {
  Command command = Command::Ramify;
  std::vector<std::string> arguments;
  OutputFormat format = OutputFormat::Text;
  std::optional<Integer> max_witness;
  bool oracle = false;
  std::string extra_places;
  std::optional<Integer> unramified_order;
};

/// UsageError on a wrong number of operands or a nonpositive numeric flag.
void validate(const Request& r);

}  // namespace brauer::cli
