#include "forno/validity.hpp"

#include <algorithm>
#include <utility>

namespace forno {

namespace {

void collect_writes(const Term& t, std::vector<std::pair<Register, SourceSpan>>& out) {
  std::vector<const Term::Node*> work{t.node()};
  while (!work.empty()) {
    const Term::Node* n = work.back();
    work.pop_back();
    if (n->kind == Term::Kind::Push || n->kind == Term::Kind::Pop) {
      out.emplace_back(n->reg, n->span);
    }
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) {
      work.push_back(it->node());
    }
  }
}

struct Checker {
  std::vector<Violation> violations;

  void add(ViolationKind kind, std::optional<Register> reg, SourceSpan span) {
    violations.push_back(Violation{kind, std::move(reg), span});
  }

  // Reports every write of `guard` inside `body`.
  void check_guard_writes(const Register& guard, const Term& body) {
    std::vector<std::pair<Register, SourceSpan>> writes;
    collect_writes(body, writes);
    for (const auto& [reg, span] : writes) {
      if (reg == guard) {
        add(ViolationKind::WriteToGuard, reg, span);
      }
    }
  }

  // `normals` is the register list of the innermost enclosing NORMAL block,
  // or null outside any.
  void walk(const Term& t, const std::vector<Register>* normals) {
    const Term::Node* n = t.node();
    switch (n->kind) {
      case Term::Kind::Skip:
      case Term::Kind::Push:
      case Term::Kind::Pop:
        return;
      case Term::Kind::Seq:
        walk(n->children[0], normals);
        walk(n->children[1], normals);
        return;
      case Term::Kind::If:
        check_guard_writes(n->reg, n->children[0]);
        walk(n->children[0], normals);
        return;
      case Term::Kind::Normal: {
        if (normals != nullptr) {
          add(ViolationKind::NestedNormal, std::nullopt, n->span);
        }
        std::vector<std::pair<Register, SourceSpan>> writes;
        collect_writes(n->children[0], writes);
        for (const auto& [reg, span] : writes) {
          if (std::find(n->normals.begin(), n->normals.end(), reg) != n->normals.end()) {
            add(ViolationKind::WriteToNormal, reg, span);
          }
        }
        walk(n->children[0], &n->normals);
        return;
      }
      case Term::Kind::For:
      case Term::Kind::Rof: {
        if (normals == nullptr) {
          add(ViolationKind::IterationOutsideNormal, n->reg, n->span);
        } else if (std::find(normals->begin(), normals->end(), n->reg) == normals->end()) {
          add(ViolationKind::IterationLedByNonNormal, n->reg, n->span);
        }
        for (const Term& body : n->children) {
          check_guard_writes(n->reg, body);
          walk(body, normals);
        }
        return;
      }
    }
  }
};

}  // namespace

std::set<Register> written_registers(const Term& t) {
  std::vector<std::pair<Register, SourceSpan>> writes;
  collect_writes(t, writes);
  std::set<Register> result;
  for (auto& [reg, span] : writes) {
    result.insert(std::move(reg));
  }
  return result;
}

std::vector<Violation> check(const Term& t) {
  Checker checker;
  checker.walk(t, nullptr);
  return checker.violations;
}

std::string describe(const Violation& v) {
  std::string where = std::to_string(v.span.begin) + ".." + std::to_string(v.span.end);
  std::string name = v.reg ? "'" + v.reg->name + "'" : "";
  switch (v.kind) {
    case ViolationKind::IterationOutsideNormal:
      return where + ": iteration led by " + name + " outside any NORMAL block";
    case ViolationKind::NestedNormal:
      return where + ": NORMAL block inside the body of another NORMAL block";
    case ViolationKind::WriteToGuard:
      return where + ": write to guard register " + name;
    case ViolationKind::WriteToNormal:
      return where + ": write to normal register " + name;
    case ViolationKind::IterationLedByNonNormal:
      return where + ": iteration led by " + name + ", which is not normal for this block";
  }
  return where + ": unknown violation";
}

}  // namespace forno
