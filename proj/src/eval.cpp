#include "forno/eval.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace forno {

namespace {

constexpr std::string_view kRuleSkip = "skip";
constexpr std::string_view kRuleSeq = "seq";
constexpr std::string_view kRulePop = "pop";
constexpr std::string_view kRulePush = "push";
constexpr std::string_view kRuleIfEq = "if-eq";
constexpr std::string_view kRuleIfNeq = "if-neq";
constexpr std::string_view kRuleFor = "for";
constexpr std::string_view kRuleRof = "rof";
constexpr std::string_view kRuleN = "n";
constexpr std::string_view kRuleBase = "base";
constexpr std::string_view kRuleStep = "step";

using Snapshot = std::shared_ptr<const std::vector<Nat>>;

// Work items: either evaluate a term node, or resume an iteration at
// element `index` of its snapshot.
struct WorkItem {
  enum class Op { Eval, LoopNext } op;
  const Term::Node* node;
  Snapshot snapshot;
  std::size_t index = 0;
};

class Evaluator {
 public:
  Evaluator(MachineState state, bool tracing) : state_(std::move(state)) {
    if (tracing) {
      trace_.emplace();
    }
  }

  void push_eval(const Term& t) { work_.push_back({WorkItem::Op::Eval, t.node(), nullptr, 0}); }

  void push_loop(const Term::Node* loop, Snapshot snapshot, std::size_t index) {
    work_.push_back({WorkItem::Op::LoopNext, loop, std::move(snapshot), index});
  }

  void run() {
    while (!work_.empty()) {
      WorkItem item = std::move(work_.back());
      work_.pop_back();
      if (item.op == WorkItem::Op::Eval) {
        step_term(item.node);
      } else {
        step_loop(item);
      }
    }
  }

  EvalResult take_result() && {
    return EvalResult{std::move(state_), steps_, std::move(trace_)};
  }

  MachineState take_state() && { return std::move(state_); }

 private:
  void step_term(const Term::Node* n) {
    switch (n->kind) {
      case Term::Kind::Skip:
        ++steps_;
        note(kRuleSkip, n->span);
        return;
      case Term::Kind::Push: {
        Stack& s = state_.store.at_mut(n->reg);
        push_in_place(n->value, s, state_.counter);
        ++steps_;
        note_reg(kRulePush, n->span, n->reg, s);
        return;
      }
      case Term::Kind::Pop: {
        Stack& s = state_.store.at_mut(n->reg);
        pop_in_place(n->value, s, state_.counter);
        ++steps_;
        note_reg(kRulePop, n->span, n->reg, s);
        return;
      }
      case Term::Kind::Seq:
        note(kRuleSeq, n->span);
        work_.push_back({WorkItem::Op::Eval, n->children[1].node(), nullptr, 0});
        work_.push_back({WorkItem::Op::Eval, n->children[0].node(), nullptr, 0});
        return;
      case Term::Kind::If: {
        const Stack& s = state_.store.get(n->reg);
        ++steps_;
        if (s.head() == n->value) {
          note(kRuleIfEq, n->span);
          work_.push_back({WorkItem::Op::Eval, n->children[0].node(), nullptr, 0});
        } else {
          note(kRuleIfNeq, n->span);
        }
        return;
      }
      case Term::Kind::Normal:
        note(kRuleN, n->span);
        work_.push_back({WorkItem::Op::Eval, n->children[0].node(), nullptr, 0});
        return;
      case Term::Kind::For: {
        note(kRuleFor, n->span);
        auto snapshot = std::make_shared<std::vector<Nat>>(state_.store.get(n->reg).top_first());
        push_loop(n, std::move(snapshot), 0);
        return;
      }
      case Term::Kind::Rof: {
        note(kRuleRof, n->span);
        // reverse(x) read top-first is x in storage order
        auto snapshot = std::make_shared<std::vector<Nat>>(state_.store.get(n->reg).bottom_first());
        push_loop(n, std::move(snapshot), 0);
        return;
      }
    }
  }

  void step_loop(WorkItem& item) {
    const Term::Node* n = item.node;
    if (item.index >= item.snapshot->size()) {
      note(kRuleBase, n->span);
      return;
    }
    Nat element = (*item.snapshot)[item.index];
    std::size_t last = n->children.size() - 1;
    const Term& body = n->children[element < last ? static_cast<std::size_t>(element) : last];
    ++steps_;
    note(kRuleStep, n->span);
    push_loop(n, std::move(item.snapshot), item.index + 1);
    work_.push_back({WorkItem::Op::Eval, body.node(), nullptr, 0});
  }

  void note(std::string_view rule, SourceSpan span) {
    if (trace_) {
      trace_->push_back(TraceEvent{rule, span, std::nullopt, std::nullopt, state_.counter});
    }
  }

  void note_reg(std::string_view rule, SourceSpan span, const Register& reg, const Stack& after) {
    if (trace_) {
      trace_->push_back(TraceEvent{rule, span, reg, after, state_.counter});
    }
  }

  MachineState state_;
  Nat steps_ = 0;
  std::optional<std::vector<TraceEvent>> trace_;
  std::vector<WorkItem> work_;
};

}  // namespace

EvalResult eval(const Term& t, MachineState initial, const EvalOptions& opts) {
  Evaluator ev(std::move(initial), opts.trace);
  ev.push_eval(t);
  ev.run();
  return std::move(ev).take_result();
}

MachineState eval_snapshot(const Stack& snapshot, const std::vector<Term>& bodies,
                           MachineState state) {
  Term loop = Term::for_loop(Register{"snapshot"}, bodies);
  Evaluator ev(std::move(state), false);
  auto items = std::make_shared<std::vector<Nat>>(snapshot.top_first());
  ev.push_loop(loop.node(), std::move(items), 0);
  ev.run();
  return std::move(ev).take_state();
}

std::string format_trace_line(const TraceEvent& event) {
  std::string line(event.rule);
  line += '\t';
  line += std::to_string(event.span.begin) + ".." + std::to_string(event.span.end);
  line += '\t';
  if (event.reg) {
    line += event.reg->name + "=" + format_stack(*event.reg_stack);
  } else {
    line += '-';
  }
  line += "\tcounter=" + std::to_string(event.counter);
  return line;
}

}  // namespace forno
