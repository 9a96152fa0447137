#include "forno/state.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace forno {

Stack Stack::from_top_first(std::vector<Nat> items) {
  Stack s;
  s.items_.assign(items.rbegin(), items.rend());
  return s;
}

std::optional<Nat> Stack::head() const {
  if (items_.empty()) {
    return std::nullopt;
  }
  return items_.back();
}

Stack Stack::tail() const {
  Stack t = *this;
  if (!t.items_.empty()) {
    t.items_.pop_back();
  }
  return t;
}

Stack Stack::reversed() const {
  Stack r;
  r.items_.assign(items_.rbegin(), items_.rend());
  return r;
}

std::vector<Nat> Stack::top_first() const {
  return std::vector<Nat>(items_.rbegin(), items_.rend());
}

void push_in_place(Nat n, Stack& s, Nat& counter) {
  if (counter == 0) {
    s.push_top(n);
    return;
  }
  if (s.head() != n) {
    --counter;
  }
}

void pop_in_place(Nat n, Stack& s, Nat& counter) {
  if (counter == 0 && s.head() == n) {
    s.pop_top();
    return;
  }
  if (s.head() == n) {
    return;
  }
  ++counter;
}

std::pair<Stack, Nat> push_op(Nat n, Stack s, Nat counter) {
  push_in_place(n, s, counter);
  return {std::move(s), counter};
}

std::pair<Stack, Nat> pop_op(Nat n, Stack s, Nat counter) {
  pop_in_place(n, s, counter);
  return {std::move(s), counter};
}

const Stack& Store::get(const Register& r) const {
  static const Stack empty_stack;
  auto it = stacks_.find(r);
  return it == stacks_.end() ? empty_stack : it->second;
}

void Store::set(const Register& r, Stack s) {
  if (s.is_empty()) {
    stacks_.erase(r);
  } else {
    stacks_[r] = std::move(s);
  }
}

Stack& Store::at_mut(const Register& r) { return stacks_[r]; }

std::map<Register, Stack> Store::support() const {
  std::map<Register, Stack> result;
  for (const auto& [r, s] : stacks_) {
    if (!s.is_empty()) {
      result.emplace(r, s);
    }
  }
  return result;
}

bool operator==(const Store& a, const Store& b) { return a.support() == b.support(); }

Stack parse_stack_literal(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
  };
  auto fail = [&](const std::string& what) -> void {
    throw StackFormatError("bad stack literal '" + std::string(text) + "': " + what);
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') fail("expected '['");
  ++i;
  std::vector<Nat> values;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    for (;;) {
      skip_ws();
      if (i >= text.size() || std::isdigit(static_cast<unsigned char>(text[i])) == 0) {
        fail("expected a natural number");
      }
      Nat value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
        Nat digit = static_cast<Nat>(text[i] - '0');
        if (value > (std::numeric_limits<Nat>::max() - digit) / 10) fail("number too large");
        value = value * 10 + digit;
        ++i;
      }
      values.push_back(value);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  skip_ws();
  if (i != text.size()) fail("trailing characters");
  return Stack::from_top_first(std::move(values));
}

std::string format_stack(const Stack& s) {
  std::string out = "[";
  bool first = true;
  for (Nat v : s.top_first()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += ']';
  return out;
}

std::string format_store_dump(const MachineState& state) {
  std::string out;
  for (const auto& [r, s] : state.store.support()) {
    out += r.name;
    out += " = ";
    out += format_stack(s);
    out += '\n';
  }
  out += "counter = " + std::to_string(state.counter) + "\n";
  return out;
}

}  // namespace forno
