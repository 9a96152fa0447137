#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "forno/bennett.hpp"
#include "forno/compile.hpp"
#include "forno/eval.hpp"
#include "forno/invert.hpp"
#include "forno/parser.hpp"
#include "forno/printer.hpp"
#include "forno/state.hpp"
#include "forno/turing.hpp"
#include "forno/validity.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitSelfCheckFailure = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot write '" + path + "'");
  }
  out << text;
}

forno::Term parse_file(const std::string& path) {
  try {
    return forno::parse(read_file(path));
  } catch (const forno::ParseError& e) {
    throw InputError(path + ": " + std::to_string(e.span.begin) + ".." +
                     std::to_string(e.span.end) + ": " + e.what());
  }
}

forno::TuringMachine parse_tm_file(const std::string& path) {
  try {
    return forno::parse_tm(read_file(path));
  } catch (const forno::TmFormatError& e) {
    throw InputError(path + ": " + e.what());
  }
}

forno::MachineState make_state(const std::vector<std::string>& bindings, forno::Nat counter) {
  forno::MachineState state;
  state.counter = counter;
  for (const std::string& binding : bindings) {
    auto eq = binding.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InputError("--set expects name=[..], got '" + binding + "'");
    }
    forno::Register reg{binding.substr(0, eq)};
    try {
      state.store.set(reg, forno::parse_stack_literal(binding.substr(eq + 1)));
    } catch (const forno::StackFormatError& e) {
      throw InputError(e.what());
    }
  }
  return state;
}

// Largest PUSH/POP/IF literal plus one; the default body count for COPY
// when none is given on the command line.
forno::Nat default_code_count(const forno::Term& t) {
  forno::Nat max_value = 0;
  std::vector<const forno::Term::Node*> work{t.node()};
  while (!work.empty()) {
    const forno::Term::Node* n = work.back();
    work.pop_back();
    switch (n->kind) {
      case forno::Term::Kind::Push:
      case forno::Term::Kind::Pop:
      case forno::Term::Kind::If:
        max_value = std::max(max_value, n->value);
        break;
      default:
        break;
    }
    for (const forno::Term& child : n->children) {
      work.push_back(child.node());
    }
  }
  return max_value + 1;
}

std::string compile_header(const forno::CompiledProgram& program,
                           const forno::TuringMachine& machine) {
  std::string header = "# roles:";
  for (const auto& [role, reg] : program.roles.as_table()) {
    header += " " + role + "=" + reg.name;
  }
  header += "\n# symbols:";
  for (std::size_t i = 0; i < machine.tape_alphabet.size(); ++i) {
    header += " " + std::string(1, machine.tape_alphabet[i]) + "=" + std::to_string(i);
  }
  header += "\n# states:";
  for (std::size_t i = 0; i < machine.states.size(); ++i) {
    header += " " + machine.states[i] + "=" + std::to_string(i);
  }
  header += "\n";
  return header;
}

int cmd_check(const std::string& file) {
  forno::Term term = parse_file(file);
  std::vector<forno::Violation> violations = forno::check(term);
  for (const forno::Violation& v : violations) {
    std::cerr << file << ": " << forno::describe(v) << "\n";
  }
  return violations.empty() ? kExitOk : kExitInputError;
}

int cmd_run(const std::string& file, const std::vector<std::string>& bindings, forno::Nat counter,
            bool trace, bool steps) {
  forno::Term term = parse_file(file);
  forno::EvalOptions opts;
  opts.trace = trace;
  forno::EvalResult result = forno::eval(term, make_state(bindings, counter), opts);
  if (result.trace) {
    for (const forno::TraceEvent& event : *result.trace) {
      std::cerr << forno::format_trace_line(event) << "\n";
    }
  }
  std::cout << forno::format_store_dump(result.final);
  if (steps) {
    std::cout << "steps = " << result.steps << "\n";
  }
  return kExitOk;
}

int cmd_invert(const std::string& file, const std::string& out) {
  write_output(out, forno::render(forno::invert(parse_file(file))) + "\n");
  return kExitOk;
}

int cmd_compile_tm(const std::string& file, const std::string& out) {
  forno::TuringMachine machine = parse_tm_file(file);
  forno::CompiledProgram program = forno::compile(machine);
  write_output(out, compile_header(program, machine) + forno::render(program.term) + "\n");
  return kExitOk;
}

int cmd_simulate_tm(const std::string& file, const std::string& input) {
  forno::TuringMachine machine = parse_tm_file(file);
  try {
    forno::RunResult result = forno::tm_run(machine, input);
    std::cout << result.output << "\n" << "steps = " << result.steps << "\n";
  } catch (const forno::BoundExceeded& e) {
    std::cerr << "BoundExceeded: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

int cmd_encode(const std::string& file, const std::string& text) {
  forno::TuringMachine machine = parse_tm_file(file);
  forno::Encoding enc(machine);
  std::cout << forno::format_stack(enc.encode_string(text)) << "\n";
  return kExitOk;
}

int cmd_run_tm(const std::string& file, const std::string& input) {
  forno::TuringMachine machine = parse_tm_file(file);
  forno::RunResult oracle = forno::tm_run(machine, input);

  forno::CompiledProgram program = forno::compile(machine);
  forno::MachineState initial;
  initial.store.set(program.roles.rgt, program.encoding.encode_string(input));
  forno::EvalResult result = forno::eval(program.term, std::move(initial));
  std::string decoded = program.encoding.decode_stack(result.final.store.get(program.roles.rgt));

  std::cout << decoded << "\n";
  if (decoded != oracle.output || !result.final.sound()) {
    std::cerr << "self-check failed: direct run produced '" << oracle.output
              << "', compiled program produced '" << decoded
              << "' (counter = " << result.final.counter << ")\n";
    return kExitSelfCheckFailure;
  }
  return kExitOk;
}

int cmd_bennett(const std::string& file, const std::string& io, const std::string& target,
                std::optional<forno::Nat> codes, const std::string& out) {
  forno::Term term = parse_file(file);
  forno::Nat code_count = codes ? *codes : default_code_count(term);
  forno::Term wrapped =
      forno::bennett_wrap(term, forno::Register{io}, forno::Register{target}, code_count);
  write_output(out, forno::render(wrapped) + "\n");
  return kExitOk;
}

int cmd_twoway(const std::string& fwd_file, const std::string& io, const std::string& inv_file,
               const std::string& io_inv, std::optional<forno::Nat> codes,
               const std::string& out) {
  forno::Term fwd = parse_file(fwd_file);
  forno::Term inv = parse_file(inv_file);
  forno::Nat code_count =
      codes ? *codes : std::max(default_code_count(fwd), default_code_count(inv));
  forno::TwoWayProgram program = forno::zero_garbage_compose(
      fwd, forno::Register{io}, inv, forno::Register{io_inv}, code_count);
  std::string header =
      "# input: " + program.input.name + "\n# output: " + program.output.name + "\n";
  write_output(out, header + forno::render(program.term) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolchain for a reversible stack language: evaluate, check, invert,\n"
               "compile polynomial-time Turing machines, and build zero-garbage\n"
               "two-way bijection programs."};
  app.require_subcommand(1);

  std::string file;
  std::string out;
  std::string input;
  std::string io;
  std::string io_inv;
  std::string target;
  std::string inv_file;
  std::vector<std::string> bindings;
  forno::Nat counter = 0;
  bool trace = false;
  bool steps = false;
  std::optional<forno::Nat> codes;

  CLI::App* check = app.add_subcommand("check", "Check a program for membership violations");
  check->add_option("file", file, "program file")->required();

  CLI::App* run = app.add_subcommand("run", "Evaluate a program and dump the final store");
  run->add_option("file", file, "program file")->required();
  run->add_option("--set", bindings, "initial register binding, name=[..]");
  run->add_option("--counter", counter, "initial error counter");
  run->add_flag("--trace", trace, "write a rule-by-rule trace to standard error");
  run->add_flag("--steps", steps, "append the evaluation step count");

  CLI::App* invert_cmd = app.add_subcommand("invert", "Emit the inverse program");
  invert_cmd->add_option("file", file, "program file")->required();
  invert_cmd->add_option("-o,--output", out, "output file (default: standard output)");

  CLI::App* compile_tm = app.add_subcommand("compile-tm", "Compile a Turing machine");
  compile_tm->add_option("file", file, "machine description (.tm)")->required();
  compile_tm->add_option("-o,--output", out, "output file (default: standard output)");

  CLI::App* simulate_tm =
      app.add_subcommand("simulate-tm", "Run a Turing machine directly");
  simulate_tm->add_option("file", file, "machine description (.tm)")->required();
  simulate_tm->add_option("--input", input, "input string")->required();

  CLI::App* encode = app.add_subcommand("encode", "Encode a string with a machine's alphabet");
  encode->add_option("file", file, "machine description (.tm)")->required();
  encode->add_option("--string", input, "string to encode")->required();

  CLI::App* run_tm = app.add_subcommand(
      "run-tm", "Compile a machine, evaluate it, and cross-check the direct run");
  run_tm->add_option("file", file, "machine description (.tm)")->required();
  run_tm->add_option("--input", input, "input string")->required();

  CLI::App* bennett = app.add_subcommand("bennett", "Wrap a program to keep input and result");
  bennett->add_option("file", file, "program file")->required();
  bennett->add_option("--io", io, "input/output register")->required();
  bennett->add_option("--target", target, "register receiving the result copy")->required();
  bennett->add_option("--codes", codes, "copy covers codes 0..K-1 (default: literals in the program)");
  bennett->add_option("-o,--output", out, "output file (default: standard output)");

  CLI::App* twoway = app.add_subcommand(
      "twoway", "Compose a program and its inverse into a zero-garbage bijection");
  twoway->add_option("forward", file, "forward program file")->required();
  twoway->add_option("inverse", inv_file, "inverse program file")->required();
  twoway->add_option("--io", io, "io register of the forward program")->required();
  twoway->add_option("--io-inv", io_inv, "io register of the inverse program")->required();
  twoway->add_option("--codes", codes, "copy covers codes 0..K-1 (default: literals in the programs)");
  twoway->add_option("-o,--output", out, "output file (default: standard output)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file);
    if (run->parsed()) return cmd_run(file, bindings, counter, trace, steps);
    if (invert_cmd->parsed()) return cmd_invert(file, out);
    if (compile_tm->parsed()) return cmd_compile_tm(file, out);
    if (simulate_tm->parsed()) return cmd_simulate_tm(file, input);
    if (encode->parsed()) return cmd_encode(file, input);
    if (run_tm->parsed()) return cmd_run_tm(file, input);
    if (bennett->parsed()) return cmd_bennett(file, io, target, codes, out);
    if (twoway->parsed()) return cmd_twoway(file, io, inv_file, io_inv, codes, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
