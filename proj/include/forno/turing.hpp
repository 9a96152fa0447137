#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forno/state.hpp"
#include "forno/syntax.hpp"

namespace forno {

enum class Move { Left, Right };

// p(x) = coefficient * x^exponent + constant
struct Polynomial {
  Nat coefficient = 1;
  Nat exponent = 1;
  Nat constant = 0;

  Nat operator()(Nat x) const;
};

struct TmAction {
  std::string state;
  char write = 0;
  Move move = Move::Right;

  friend bool operator==(const TmAction&, const TmAction&) = default;
};

/// Deterministic single-tape machine on a semi-infinite tape. The tape
/// alphabet lists the input alphabet first, in order, so that symbol codes
/// (positions) give every tape-only symbol a larger code than every input
/// symbol. The transition map is total on (states minus halt) x tape
/// alphabet.
struct TuringMachine {
  std::vector<std::string> states;
  std::string initial;
  std::string halt;
  std::vector<char> input_alphabet;
  std::vector<char> tape_alphabet;
  char blank = '_';
  std::map<std::pair<std::string, char>, TmAction> delta;
  Polynomial poly;
};

/// Tape snapshot (u, q, v): `left` is the tape to the left of the head in
/// tape order (head-adjacent character last); `right` starts with the
/// scanned character and never ends with a blank. Empty `right` means the
/// head scans the blank region.
struct Configuration {
  std::string left;
  std::string state;
  std::string right;

  auto operator<=>(const Configuration&) const = default;
};

struct TmFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the line-based `.tm` description format and validates the
/// machine (alphabet discipline, totality of delta, polynomial shape).
TuringMachine parse_tm(std::string_view text);

/// Position-based codes: tape symbols get their index in the tape
/// alphabet, states their index in the state list. Strings encode as
/// stacks with the first character on top.
class Encoding {
 public:
  Encoding() = default;
  explicit Encoding(const TuringMachine& m);

  Nat symbol_code(char symbol) const;       // throws DecodeError
  char symbol_at(Nat code) const;           // throws DecodeError
  Nat state_code(const std::string&) const; // throws DecodeError
  const std::string& state_at(Nat code) const;
  Nat blank_code() const;

  std::size_t input_symbol_count() const { return input_count_; }
  std::size_t symbol_count() const { return symbols_.size(); }
  std::size_t state_count() const { return states_.size(); }
  bool is_input_code(Nat code) const { return code < input_count_; }

  Stack encode_string(std::string_view text) const;
  std::string decode_stack(const Stack& s) const;

 private:
  std::vector<char> symbols_;
  std::size_t input_count_ = 0;
  std::vector<std::string> states_;
  char blank_ = 0;
};

Configuration initial_configuration(std::string_view input);
bool is_halting(const TuringMachine& m, const Configuration& c);

/// One transition; nullopt when the configuration is halting. A left move
/// with nothing to the left keeps the head on the leftmost cell.
std::optional<Configuration> tm_step(const TuringMachine& m, const Configuration& c);

struct RunResult {
  std::string output;  // full tape, trailing blanks stripped
  Nat steps = 0;
  bool head_at_leftmost = false;
};

/// Runs to the halting state, enforcing the declared polynomial step
/// bound; throws BoundExceeded when the bound does not hold on `input`.
RunResult tm_run(const TuringMachine& m, std::string_view input);

}  // namespace forno
