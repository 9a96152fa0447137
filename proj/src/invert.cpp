#include "forno/invert.hpp"

#include <utility>
#include <vector>

namespace forno {

Term invert(const Term& t) {
  const Term::Node* n = t.node();
  switch (n->kind) {
    case Term::Kind::Skip:
      return t;
    case Term::Kind::Push:
      return Term::pop(n->value, n->reg, n->span);
    case Term::Kind::Pop:
      return Term::push(n->value, n->reg, n->span);
    case Term::Kind::Seq:
      return Term::seq(invert(n->children[1]), invert(n->children[0]), n->span);
    case Term::Kind::If:
      return Term::if_eq(n->reg, n->value, invert(n->children[0]), n->span);
    case Term::Kind::Normal:
      return Term::normal(n->normals, invert(n->children[0]), n->span);
    case Term::Kind::For:
    case Term::Kind::Rof: {
      std::vector<Term> bodies;
      bodies.reserve(n->children.size());
      for (const Term& body : n->children) {
        bodies.push_back(invert(body));
      }
      return n->kind == Term::Kind::For ? Term::rof_loop(n->reg, std::move(bodies), n->span)
                                        : Term::for_loop(n->reg, std::move(bodies), n->span);
    }
  }
  return t;  // unreachable
}

}  // namespace forno
