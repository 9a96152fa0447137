#include "forno/printer.hpp"

#include <string>
#include <vector>

namespace forno {

namespace {

bool is_atomic(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Skip:
    case Term::Kind::Push:
    case Term::Kind::Pop:
      return true;
    default:
      return false;
  }
}

void render_term(const Term& t, std::string& out, int indent);

void indent_to(std::string& out, int indent) { out.append(static_cast<std::size_t>(indent) * 2, ' '); }

// `{ BODY }` on one line for atomic bodies, an indented block otherwise.
void render_block(const Term& body, std::string& out, int indent, bool inline_ok) {
  if (inline_ok && is_atomic(body)) {
    out += "{ ";
    render_term(body, out, indent);
    out += " }";
    return;
  }
  out += "{\n";
  indent_to(out, indent + 1);
  render_term(body, out, indent + 1);
  out += '\n';
  indent_to(out, indent);
  out += '}';
}

void render_term(const Term& t, std::string& out, int indent) {
  switch (t.kind()) {
    case Term::Kind::Skip:
      out += "SKIP";
      return;
    case Term::Kind::Push:
      out += "PUSH[" + std::to_string(t.value()) + "] " + t.target().name;
      return;
    case Term::Kind::Pop:
      out += "POP[" + std::to_string(t.value()) + "] " + t.target().name;
      return;
    case Term::Kind::Seq: {
      // Walk the right spine iteratively; chains can be long.
      const Term* cursor = &t;
      while (cursor->kind() == Term::Kind::Seq) {
        render_term(cursor->first(), out, indent);
        out += ";\n";
        indent_to(out, indent);
        cursor = &cursor->second();
      }
      render_term(*cursor, out, indent);
      return;
    }
    case Term::Kind::If:
      out += "IF " + t.guard().name + " = " + std::to_string(t.value()) + " ";
      render_block(t.body(), out, indent, true);
      return;
    case Term::Kind::Normal: {
      out += "NORMAL ";
      bool first = true;
      for (const Register& r : t.normals()) {
        if (!first) out += ',';
        out += r.name;
        first = false;
      }
      out += ' ';
      render_block(t.body(), out, indent, true);
      return;
    }
    case Term::Kind::For:
    case Term::Kind::Rof: {
      out += (t.kind() == Term::Kind::For ? "FOR " : "ROF ") + t.guard().name + " ";
      bool all_atomic = true;
      for (const Term& body : t.bodies()) {
        all_atomic = all_atomic && is_atomic(body);
      }
      bool first = true;
      for (const Term& body : t.bodies()) {
        if (!first) out += ' ';
        render_block(body, out, indent, all_atomic);
        first = false;
      }
      return;
    }
  }
}

}  // namespace

std::string render(const Term& t) {
  std::string out;
  render_term(t, out, 0);
  return out;
}

}  // namespace forno
