#include "forno/turing.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace forno {

Nat Polynomial::operator()(Nat x) const {
  Nat power = 1;
  for (Nat i = 0; i < exponent; ++i) {
    power *= x;
  }
  return coefficient * power + constant;
}

namespace {

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  std::string word;
  while (in >> word) {
    words.push_back(word);
  }
  return words;
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& message) {
  throw TmFormatError("line " + std::to_string(line_no) + ": " + message);
}

char single_char(const std::string& word, std::size_t line_no) {
  if (word.size() != 1) {
    fail_line(line_no, "symbol '" + word + "' must be a single character");
  }
  return word[0];
}

Nat parse_nat(const std::string& word, std::size_t line_no) {
  if (word.empty() || !std::all_of(word.begin(), word.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      })) {
    fail_line(line_no, "'" + word + "' is not a natural number");
  }
  Nat value = 0;
  for (char c : word) {
    Nat digit = static_cast<Nat>(c - '0');
    if (value > (std::numeric_limits<Nat>::max() - digit) / 10) {
      fail_line(line_no, "number '" + word + "' too large");
    }
    value = value * 10 + digit;
  }
  return value;
}

}  // namespace

TuringMachine parse_tm(std::string_view text) {
  TuringMachine m;
  bool saw_states = false, saw_initial = false, saw_halt = false;
  bool saw_input = false, saw_tape = false, saw_blank = false, saw_poly = false;
  std::vector<std::tuple<std::size_t, std::vector<std::string>>> delta_lines;

  std::istringstream in{std::string(text)};
  std::string raw_line;
  std::size_t line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    if (auto hash = raw_line.find('#'); hash != std::string::npos) {
      raw_line.erase(hash);
    }
    std::vector<std::string> words = split_words(raw_line);
    if (words.empty()) {
      continue;
    }
    std::string key = words.front();
    if (key.empty() || key.back() != ':') {
      fail_line(line_no, "expected 'key:' at line start, got '" + key + "'");
    }
    key.pop_back();
    std::vector<std::string> rest(words.begin() + 1, words.end());

    auto expect_unseen = [&](bool& seen) {
      if (seen) fail_line(line_no, "duplicate '" + key + ":' line");
      seen = true;
    };

    if (key == "states") {
      expect_unseen(saw_states);
      if (rest.empty()) fail_line(line_no, "no states listed");
      m.states = rest;
    } else if (key == "initial") {
      expect_unseen(saw_initial);
      if (rest.size() != 1) fail_line(line_no, "expected exactly one initial state");
      m.initial = rest[0];
    } else if (key == "halt") {
      expect_unseen(saw_halt);
      if (rest.size() != 1) fail_line(line_no, "expected exactly one halt state");
      m.halt = rest[0];
    } else if (key == "input_alphabet") {
      expect_unseen(saw_input);
      for (const std::string& w : rest) m.input_alphabet.push_back(single_char(w, line_no));
    } else if (key == "tape_alphabet") {
      expect_unseen(saw_tape);
      if (rest.empty()) fail_line(line_no, "tape alphabet is empty");
      for (const std::string& w : rest) m.tape_alphabet.push_back(single_char(w, line_no));
    } else if (key == "blank") {
      expect_unseen(saw_blank);
      if (rest.size() != 1) fail_line(line_no, "expected exactly one blank symbol");
      m.blank = single_char(rest[0], line_no);
    } else if (key == "poly") {
      expect_unseen(saw_poly);
      if (rest.size() != 3) fail_line(line_no, "expected 'poly: a b d' for a*x^b + d");
      m.poly.coefficient = parse_nat(rest[0], line_no);
      m.poly.exponent = parse_nat(rest[1], line_no);
      m.poly.constant = parse_nat(rest[2], line_no);
      if (m.poly.coefficient == 0) fail_line(line_no, "poly coefficient must be positive");
      if (m.poly.exponent == 0) fail_line(line_no, "poly exponent must be positive");
    } else if (key == "delta") {
      delta_lines.emplace_back(line_no, rest);
    } else {
      fail_line(line_no, "unknown key '" + key + "'");
    }
  }

  if (!saw_states) throw TmFormatError("missing 'states:' line");
  if (!saw_initial) throw TmFormatError("missing 'initial:' line");
  if (!saw_halt) throw TmFormatError("missing 'halt:' line");
  if (!saw_input) throw TmFormatError("missing 'input_alphabet:' line");
  if (!saw_tape) throw TmFormatError("missing 'tape_alphabet:' line");
  if (!saw_blank) throw TmFormatError("missing 'blank:' line");
  if (!saw_poly) throw TmFormatError("missing 'poly:' line");

  std::set<std::string> state_set(m.states.begin(), m.states.end());
  if (state_set.size() != m.states.size()) throw TmFormatError("duplicate state name");
  if (state_set.count(m.initial) == 0) throw TmFormatError("initial state not in states");
  if (state_set.count(m.halt) == 0) throw TmFormatError("halt state not in states");

  std::set<char> tape_set(m.tape_alphabet.begin(), m.tape_alphabet.end());
  if (tape_set.size() != m.tape_alphabet.size()) throw TmFormatError("duplicate tape symbol");
  if (m.input_alphabet.size() >= m.tape_alphabet.size()) {
    throw TmFormatError("tape alphabet must strictly extend the input alphabet");
  }
  for (std::size_t i = 0; i < m.input_alphabet.size(); ++i) {
    if (m.tape_alphabet[i] != m.input_alphabet[i]) {
      throw TmFormatError("tape alphabet must list the input alphabet first, in the same order");
    }
  }
  std::set<char> input_set(m.input_alphabet.begin(), m.input_alphabet.end());
  if (input_set.size() != m.input_alphabet.size()) throw TmFormatError("duplicate input symbol");
  if (input_set.count(m.blank) != 0) throw TmFormatError("blank is in the input alphabet");
  if (tape_set.count(m.blank) == 0) throw TmFormatError("blank is not in the tape alphabet");

  for (const auto& [line_no_d, rest] : delta_lines) {
    // delta: q a -> q' a' {L|R}
    if (rest.size() != 6 || rest[2] != "->") {
      fail_line(line_no_d, "expected 'delta: state symbol -> state symbol L|R'");
    }
    const std::string& from_state = rest[0];
    char scanned = single_char(rest[1], line_no_d);
    const std::string& to_state = rest[3];
    char written = single_char(rest[4], line_no_d);
    if (state_set.count(from_state) == 0) fail_line(line_no_d, "unknown state '" + from_state + "'");
    if (state_set.count(to_state) == 0) fail_line(line_no_d, "unknown state '" + to_state + "'");
    if (tape_set.count(scanned) == 0) fail_line(line_no_d, "unknown tape symbol");
    if (tape_set.count(written) == 0) fail_line(line_no_d, "unknown tape symbol");
    if (from_state == m.halt) fail_line(line_no_d, "transition from the halt state");
    Move move;
    if (rest[5] == "L") {
      move = Move::Left;
    } else if (rest[5] == "R") {
      move = Move::Right;
    } else {
      fail_line(line_no_d, "move must be L or R");
    }
    auto key = std::make_pair(from_state, scanned);
    if (m.delta.count(key) != 0) {
      fail_line(line_no_d, "duplicate transition for (" + from_state + ", " + rest[1] + ")");
    }
    m.delta.emplace(key, TmAction{to_state, written, move});
  }

  for (const std::string& state : m.states) {
    if (state == m.halt) continue;
    for (char symbol : m.tape_alphabet) {
      if (m.delta.count({state, symbol}) == 0) {
        throw TmFormatError("delta not total: missing (" + state + ", " + std::string(1, symbol) +
                            ")");
      }
    }
  }
  return m;
}

Encoding::Encoding(const TuringMachine& m)
    : symbols_(m.tape_alphabet),
      input_count_(m.input_alphabet.size()),
      states_(m.states),
      blank_(m.blank) {}

Nat Encoding::symbol_code(char symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) {
    throw DecodeError(std::string("symbol '") + symbol + "' is not in the tape alphabet");
  }
  return static_cast<Nat>(it - symbols_.begin());
}

char Encoding::symbol_at(Nat code) const {
  if (code >= symbols_.size()) {
    throw DecodeError("code " + std::to_string(code) + " is not a tape symbol");
  }
  return symbols_[static_cast<std::size_t>(code)];
}

Nat Encoding::state_code(const std::string& state) const {
  auto it = std::find(states_.begin(), states_.end(), state);
  if (it == states_.end()) {
    throw DecodeError("unknown state '" + state + "'");
  }
  return static_cast<Nat>(it - states_.begin());
}

const std::string& Encoding::state_at(Nat code) const {
  if (code >= states_.size()) {
    throw DecodeError("code " + std::to_string(code) + " is not a state");
  }
  return states_[static_cast<std::size_t>(code)];
}

Nat Encoding::blank_code() const { return symbol_code(blank_); }

Stack Encoding::encode_string(std::string_view text) const {
  std::vector<Nat> codes;
  codes.reserve(text.size());
  for (char c : text) {
    codes.push_back(symbol_code(c));
  }
  return Stack::from_top_first(std::move(codes));
}

std::string Encoding::decode_stack(const Stack& s) const {
  std::string out;
  for (Nat code : s.top_first()) {
    out += symbol_at(code);
  }
  return out;
}

Configuration initial_configuration(std::string_view input) {
  return Configuration{"", "", std::string(input)};
}

bool is_halting(const TuringMachine& m, const Configuration& c) { return c.state == m.halt; }

std::optional<Configuration> tm_step(const TuringMachine& m, const Configuration& c) {
  if (c.state == m.halt) {
    return std::nullopt;
  }
  char scanned = c.right.empty() ? m.blank : c.right[0];
  const TmAction& action = m.delta.at({c.state, scanned});
  std::string rest = c.right.empty() ? std::string() : c.right.substr(1);

  Configuration next;
  next.state = action.state;
  if (action.move == Move::Right) {
    next.left = c.left + action.write;
    next.right = std::move(rest);
  } else {
    next.right = action.write + rest;
    if (c.left.empty()) {
      next.left.clear();  // head pinned to the leftmost cell
    } else {
      next.right.insert(next.right.begin(), c.left.back());
      next.left = c.left.substr(0, c.left.size() - 1);
    }
    while (!next.right.empty() && next.right.back() == m.blank) {
      next.right.pop_back();
    }
  }
  return next;
}

RunResult tm_run(const TuringMachine& m, std::string_view input) {
  Nat bound = m.poly(static_cast<Nat>(input.size()));
  Configuration c = initial_configuration(input);
  c.state = m.initial;
  Nat steps = 0;
  while (auto next = tm_step(m, c)) {
    ++steps;
    if (steps > bound) {
      throw BoundExceeded("machine did not halt within " + std::to_string(bound) +
                          " steps on input of length " + std::to_string(input.size()));
    }
    c = std::move(*next);
  }
  std::string tape = c.left + c.right;
  while (!tape.empty() && tape.back() == m.blank) {
    tape.pop_back();
  }
  return RunResult{std::move(tape), steps, c.left.empty()};
}

}  // namespace forno
