#include "brauer/cli/request.hpp"

namespace brauer::cli {

namespace {

struct CommandInfo {
  Command command;
  const char* name;
  std::vector<std::string> operands;
  const char* description;
};

const std::vector<CommandInfo>& table() {
  static const std::vector<CommandInfo> t = {
      {Command::Ramify, "ramify", {"ALGEBRA"}, "ramified places of a quaternion algebra (a, b) over Q"},
      {Command::Embed, "embed", {"FIELD", "ALGEBRA"}, "does Q(sqrt(d)) embed in (a, b)?"},
      {Command::Distinguish, "distinguish", {"ALGEBRA1", "ALGEBRA2"},
       "quadratic field embedding in exactly one of two algebras"},
      {Command::UnramifiedGroup, "unramified-group", {"PLACES"},
       "classes of 2Br(Q) unramified outside a set of places"},
      {Command::FfRamify, "ff-ramify", {"SYMBOL"}, "residues and ramified places of a symbol over F_p(x) or Q(x)"},
      {Command::GenusBound, "genus-bound", {"SYMBOL"}, "genus bound for a symbol algebra over F_p(x) or Q(x)"},
      {Command::EllipticBound, "elliptic-bound", {"CURVE"}, "genus bound over the function field of a split curve"},
      {Command::OracleCheck, "oracle-check", {"ALGEBRA"},
       "compare closed-form Hilbert symbols with a brute-force p-adic search"},
  };
  return t;
}

const CommandInfo& info(Command c) {
  for (const auto& i : table())
    if (i.command == c) return i;
  throw Error("unknown command");
}

}  // namespace

std::string to_string(Command c) { return info(c).name; }

std::optional<Command> command_from_string(std::string_view name) {
  for (const auto& i : table())
    if (name == i.name) return i.command;
  return std::nullopt;
}

const std::vector<Command>& all_commands() {
  static const std::vector<Command> all = [] {
    std::vector<Command> out;
    for (const auto& i : table()) out.push_back(i.command);
    return out;
  }();
  return all;
}

const std::vector<std::string>& operands(Command c) { return info(c).operands; }

std::string describe(Command c) { return info(c).description; }

void validate(const Request& r) {
  const auto& want = operands(r.command);
  if (r.arguments.size() != want.size()) {
    std::string usage = to_string(r.command);
    for (const auto& o : want) usage += " " + o;
    throw UsageError("expected " + std::to_string(want.size()) + " operand(s): " + usage);
  }
  if (r.max_witness && *r.max_witness < 1) throw UsageError("--max-witness must be positive");
  if (r.unramified_order && *r.unramified_order < 1) throw UsageError("--unramified-order must be positive");
}

}  // namespace brauer::cli
