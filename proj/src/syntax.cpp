#include "forno/syntax.hpp"

#include <cassert>
#include <utility>

namespace forno {

namespace {

std::shared_ptr<const Term::Node> make_node(Term::Node node) {
  return std::make_shared<const Term::Node>(std::move(node));
}

}  // namespace

Term::Node::~Node() {
  // Drain child chains iteratively so that destroying a long Seq spine does
  // not recurse once per element.
  std::vector<Term> pending(std::make_move_iterator(children.begin()),
                            std::make_move_iterator(children.end()));
  children.clear();
  while (!pending.empty()) {
    Term t = std::move(pending.back());
    pending.pop_back();
    const Node* n = t.node();
    if (n != nullptr && t.node_.use_count() == 1) {
      auto* mut = const_cast<Node*>(n);
      pending.insert(pending.end(), std::make_move_iterator(mut->children.begin()),
                     std::make_move_iterator(mut->children.end()));
      mut->children.clear();
    }
  }
}

Term::Term() : node_(make_node(Node{})) {}

Term Term::skip(SourceSpan span) {
  return Term(make_node(Node{.kind = Kind::Skip, .span = span}));
}

Term Term::push(Nat value, Register target, SourceSpan span) {
  return Term(make_node(
      Node{.kind = Kind::Push, .span = span, .value = value, .reg = std::move(target)}));
}

Term Term::pop(Nat value, Register target, SourceSpan span) {
  return Term(make_node(
      Node{.kind = Kind::Pop, .span = span, .value = value, .reg = std::move(target)}));
}

Term Term::seq(Term first, Term second, SourceSpan span) {
  return Term(make_node(Node{.kind = Kind::Seq,
                             .span = span,
                             .children = {std::move(first), std::move(second)}}));
}

Term Term::if_eq(Register guard, Nat value, Term body, SourceSpan span) {
  return Term(make_node(Node{.kind = Kind::If,
                             .span = span,
                             .value = value,
                             .reg = std::move(guard),
                             .children = {std::move(body)}}));
}

Term Term::normal(std::vector<Register> normals, Term body, SourceSpan span) {
  if (normals.empty()) {
    throw std::invalid_argument("NORMAL needs at least one register");
  }
  return Term(make_node(Node{.kind = Kind::Normal,
                             .span = span,
                             .normals = std::move(normals),
                             .children = {std::move(body)}}));
}

Term Term::for_loop(Register guard, std::vector<Term> bodies, SourceSpan span) {
  if (bodies.empty()) {
    throw std::invalid_argument("FOR needs at least one body");
  }
  return Term(make_node(Node{.kind = Kind::For,
                             .span = span,
                             .reg = std::move(guard),
                             .children = std::move(bodies)}));
}

Term Term::rof_loop(Register guard, std::vector<Term> bodies, SourceSpan span) {
  if (bodies.empty()) {
    throw std::invalid_argument("ROF needs at least one body");
  }
  return Term(make_node(Node{.kind = Kind::Rof,
                             .span = span,
                             .reg = std::move(guard),
                             .children = std::move(bodies)}));
}

Term Term::seq_of(std::vector<Term> parts) {
  if (parts.empty()) {
    return Term::skip();
  }
  Term result = std::move(parts.back());
  parts.pop_back();
  while (!parts.empty()) {
    result = Term::seq(std::move(parts.back()), std::move(result));
    parts.pop_back();
  }
  return result;
}

Term::Kind Term::kind() const { return node_->kind; }

SourceSpan Term::span() const { return node_->span; }

Nat Term::value() const {
  assert(node_->kind == Kind::Push || node_->kind == Kind::Pop || node_->kind == Kind::If);
  return node_->value;
}

const Register& Term::target() const {
  assert(node_->kind == Kind::Push || node_->kind == Kind::Pop);
  return node_->reg;
}

const Register& Term::guard() const {
  assert(node_->kind == Kind::If || node_->kind == Kind::For || node_->kind == Kind::Rof);
  return node_->reg;
}

const std::vector<Register>& Term::normals() const {
  assert(node_->kind == Kind::Normal);
  return node_->normals;
}

const Term& Term::first() const {
  assert(node_->kind == Kind::Seq);
  return node_->children[0];
}

const Term& Term::second() const {
  assert(node_->kind == Kind::Seq);
  return node_->children[1];
}

const Term& Term::body() const {
  assert(node_->kind == Kind::If || node_->kind == Kind::Normal);
  return node_->children[0];
}

const std::vector<Term>& Term::bodies() const {
  assert(node_->kind == Kind::For || node_->kind == Kind::Rof);
  return node_->children;
}

bool operator==(const Term& a, const Term& b) {
  std::vector<std::pair<const Term::Node*, const Term::Node*>> work{{a.node(), b.node()}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x == y) {
      continue;
    }
    if (x->kind != y->kind || x->value != y->value || x->reg != y->reg ||
        x->normals != y->normals || x->children.size() != y->children.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x->children.size(); ++i) {
      work.emplace_back(x->children[i].node(), y->children[i].node());
    }
  }
  return true;
}

std::set<Register> registers(const Term& t) {
  std::set<Register> found;
  std::vector<const Term::Node*> work{t.node()};
  while (!work.empty()) {
    const Term::Node* n = work.back();
    work.pop_back();
    switch (n->kind) {
      case Term::Kind::Skip:
        break;
      case Term::Kind::Push:
      case Term::Kind::Pop:
      case Term::Kind::If:
      case Term::Kind::For:
      case Term::Kind::Rof:
        found.insert(n->reg);
        break;
      case Term::Kind::Normal:
        found.insert(n->normals.begin(), n->normals.end());
        break;
      case Term::Kind::Seq:
        break;
    }
    for (const Term& child : n->children) {
      work.push_back(child.node());
    }
  }
  return found;
}

namespace {

Register apply_mapping(const std::map<Register, Register>& mapping, const Register& r) {
  auto it = mapping.find(r);
  return it == mapping.end() ? r : it->second;
}

Term rename_walk(const Term& t, const std::map<Register, Register>& mapping) {
  const Term::Node* n = t.node();
  switch (n->kind) {
    case Term::Kind::Skip:
      return t;
    case Term::Kind::Push:
      return Term::push(n->value, apply_mapping(mapping, n->reg), n->span);
    case Term::Kind::Pop:
      return Term::pop(n->value, apply_mapping(mapping, n->reg), n->span);
    case Term::Kind::Seq:
      return Term::seq(rename_walk(n->children[0], mapping), rename_walk(n->children[1], mapping),
                       n->span);
    case Term::Kind::If:
      return Term::if_eq(apply_mapping(mapping, n->reg), n->value,
                         rename_walk(n->children[0], mapping), n->span);
    case Term::Kind::Normal: {
      std::vector<Register> renamed;
      renamed.reserve(n->normals.size());
      for (const Register& r : n->normals) {
        renamed.push_back(apply_mapping(mapping, r));
      }
      return Term::normal(std::move(renamed), rename_walk(n->children[0], mapping), n->span);
    }
    case Term::Kind::For:
    case Term::Kind::Rof: {
      std::vector<Term> bodies;
      bodies.reserve(n->children.size());
      for (const Term& body : n->children) {
        bodies.push_back(rename_walk(body, mapping));
      }
      Register guard = apply_mapping(mapping, n->reg);
      return n->kind == Term::Kind::For
                 ? Term::for_loop(std::move(guard), std::move(bodies), n->span)
                 : Term::rof_loop(std::move(guard), std::move(bodies), n->span);
    }
  }
  return t;  // unreachable
}

}  // namespace

Term rename(const Term& t, const std::map<Register, Register>& mapping) {
  std::set<Register> image;
  for (const Register& r : registers(t)) {
    if (!image.insert(apply_mapping(mapping, r)).second) {
      throw RenameCollision("renaming maps two registers of the term to '" +
                            apply_mapping(mapping, r).name + "'");
    }
  }
  return rename_walk(t, mapping);
}

}  // namespace forno
