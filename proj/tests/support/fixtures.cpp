#include "support/fixtures.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace forno::testing {

std::string machine_path(const std::string& name) {
  return std::string(FORNO_MACHINES_DIR) + "/" + name + ".tm";
}

TuringMachine load_machine(const std::string& name) {
  std::ifstream in(machine_path(name));
  if (!in) {
    throw std::runtime_error("missing fixture machine: " + machine_path(name));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tm(buffer.str());
}

std::vector<std::string> binary_strings_up_to(std::size_t max_length) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      out.push_back(out[i] + "0");
      out.push_back(out[i] + "1");
    }
    begin = end;
  }
  return out;
}

std::vector<Configuration> reachable_configurations(const TuringMachine& m,
                                                    const std::vector<std::string>& inputs) {
  std::set<Configuration> seen;
  std::vector<Configuration> out;
  for (const std::string& input : inputs) {
    Configuration c = initial_configuration(input);
    c.state = m.initial;
    for (;;) {
      if (seen.insert(c).second) {
        out.push_back(c);
      }
      auto next = tm_step(m, c);
      if (!next) {
        break;
      }
      c = std::move(*next);
    }
  }
  return out;
}

MachineState simulation_state(const Configuration& c, const Encoding& enc, const RoleSet& roles,
                              std::size_t extra_blanks) {
  MachineState state;
  std::string left_reversed(c.left.rbegin(), c.left.rend());
  state.store.set(roles.lft, enc.encode_string(left_reversed));
  state.store.set(roles.q, Stack::from_top_first({enc.state_code(c.state)}));

  std::vector<Nat> rgt = enc.encode_string(c.right).top_first();
  std::size_t blanks = extra_blanks;
  if (c.right.empty() && blanks == 0) {
    blanks = 1;
  }
  for (std::size_t i = 0; i < blanks; ++i) {
    rgt.push_back(enc.blank_code());
  }
  state.store.set(roles.rgt, Stack::from_top_first(std::move(rgt)));
  return state;
}

NodeCounts count_nodes(const Term& t) {
  NodeCounts counts;
  std::vector<const Term::Node*> work{t.node()};
  while (!work.empty()) {
    const Term::Node* n = work.back();
    work.pop_back();
    switch (n->kind) {
      case Term::Kind::Skip: ++counts.skips; break;
      case Term::Kind::Push: ++counts.pushes; break;
      case Term::Kind::Pop: ++counts.pops; break;
      case Term::Kind::Seq: ++counts.seqs; break;
      case Term::Kind::If: ++counts.ifs; break;
      case Term::Kind::Normal: ++counts.normals; break;
      case Term::Kind::For: ++counts.fors; break;
      case Term::Kind::Rof: ++counts.rofs; break;
    }
    for (const Term& child : n->children) {
      work.push_back(child.node());
    }
  }
  return counts;
}

}  // namespace forno::testing
