#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace forno {

// Stack elements and literals are naturals.
using Nat = std::uint64_t;

// Half-open byte range into the source text a node was parsed from.
// Terms built programmatically carry the empty span {0,0}.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct Register {
  std::string name;
  auto operator<=>(const Register&) const = default;
};

/// Raw term of the surface language. Values are immutable; copies share
/// structure. Structural equality ignores source spans.
class Term {
 public:
  enum class Kind : std::uint8_t { Skip, Push, Pop, Seq, If, Normal, For, Rof };

  struct Node;

  Term();  // SKIP

  static Term skip(SourceSpan span = {});
  static Term push(Nat value, Register target, SourceSpan span = {});
  static Term pop(Nat value, Register target, SourceSpan span = {});
  static Term seq(Term first, Term second, SourceSpan span = {});
  static Term if_eq(Register guard, Nat value, Term body, SourceSpan span = {});
  static Term normal(std::vector<Register> normals, Term body, SourceSpan span = {});
  static Term for_loop(Register guard, std::vector<Term> bodies, SourceSpan span = {});
  static Term rof_loop(Register guard, std::vector<Term> bodies, SourceSpan span = {});

  // Right-nested sequence of `parts`; SKIP when empty, the sole part when
  // singleton.
  static Term seq_of(std::vector<Term> parts);

  Kind kind() const;
  SourceSpan span() const;

  Nat value() const;                          // Push/Pop/If
  const Register& target() const;             // Push/Pop
  const Register& guard() const;              // If/For/Rof
  const std::vector<Register>& normals() const;  // Normal
  const Term& first() const;                  // Seq
  const Term& second() const;                 // Seq
  const Term& body() const;                   // If/Normal
  const std::vector<Term>& bodies() const;    // For/Rof

  const Node* node() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind = Kind::Skip;
  SourceSpan span;
  Nat value = 0;                   // Push/Pop/If literal
  Register reg;                    // Push/Pop target, If/For/Rof guard
  std::vector<Register> normals;   // Normal
  std::vector<Term> children;      // Seq: {first, second}; If/Normal: {body}; For/Rof: bodies

  ~Node();  // iterative teardown; deep Seq chains must not recurse
};

/// Every register occurring in t (write target, guard, or normal).
std::set<Register> registers(const Term& t);

struct RenameCollision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Simultaneous renaming. Registers absent from `mapping` are kept; the
/// effective map must be injective on registers(t) or RenameCollision is
/// thrown.
Term rename(const Term& t, const std::map<Register, Register>& mapping);

}  // namespace forno
