#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forno/syntax.hpp"

namespace forno {

/// A stack of naturals. The textual literal form is top-first: `[0,1]` is
/// the stack with 0 on top.
class Stack {
 public:
  Stack() = default;

  static Stack from_top_first(std::vector<Nat> items);

  bool is_empty() const { return items_.empty(); }
  Nat length() const { return items_.size(); }
  std::optional<Nat> head() const;
  Stack tail() const;
  Stack reversed() const;

  void push_top(Nat v) { items_.push_back(v); }
  void pop_top() { items_.pop_back(); }  // precondition: non-empty

  std::vector<Nat> top_first() const;
  // Internal storage order (top is the last element).
  const std::vector<Nat>& bottom_first() const { return items_; }

  friend bool operator==(const Stack&, const Stack&) = default;

 private:
  std::vector<Nat> items_;
};

// The reversible push/pop pair. Total on Stack x counter and mutually
// inverse everywhere:
//   pop_op(n, push_op(n, s, c)) = (s, c) = push_op(n, pop_op(n, s, c)).
// At counter 0 they behave as the expected stack operations, a pop of a
// mismatched (or absent) top raises the counter instead of failing, and a
// stack never changes while the counter is nonzero.
void push_in_place(Nat n, Stack& s, Nat& counter);
void pop_in_place(Nat n, Stack& s, Nat& counter);

std::pair<Stack, Nat> push_op(Nat n, Stack s, Nat counter);
std::pair<Stack, Nat> pop_op(Nat n, Stack s, Nat counter);

/// Total register-to-stack mapping with finite support; unbound registers
/// read as the empty stack. Equality compares supports, so a register
/// popped back to empty equals one that was never bound.
class Store {
 public:
  const Stack& get(const Register& r) const;
  void set(const Register& r, Stack s);
  Stack& at_mut(const Register& r);

  // Non-empty bindings, sorted by register name.
  std::map<Register, Stack> support() const;

  friend bool operator==(const Store& a, const Store& b);
  friend bool operator!=(const Store& a, const Store& b) { return !(a == b); }

 private:
  std::map<Register, Stack> stacks_;
};

struct MachineState {
  Store store;
  Nat counter = 0;

  bool sound() const { return counter == 0; }

  friend bool operator==(const MachineState&, const MachineState&) = default;
};

struct StackFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Stack parse_stack_literal(std::string_view text);  // throws StackFormatError
std::string format_stack(const Stack& s);          // `[v0,v1,...]`, top first

// One line per non-empty register (`name = [..]`, sorted by name) followed
// by `counter = c`.
std::string format_store_dump(const MachineState& state);

}  // namespace forno
