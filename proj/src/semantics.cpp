#include "affinekit/semantics.hpp"

#include <algorithm>
#include <utility>

#include "affinekit/error.hpp"

namespace affinekit {

// ---------------------------------------------------------------------------
// Interpretation

void Interpretation::add_sort(const SortName& name, std::size_t size) {
  if (!is_identifier(name)) throw EvalError("invalid sort name '" + name + "'");
  sorts_[name] = size;
}

std::size_t Interpretation::sort_size(const SortName& name) const {
  auto it = sorts_.find(name);
  if (it == sorts_.end()) throw EvalError("unknown sort '" + name + "'");
  return it->second;
}

void Interpretation::add_atom(const AtomName& name, std::vector<SortName> arg_sorts,
                              std::vector<PairValue> values) {
  if (!is_identifier(name)) throw EvalError("invalid atom name '" + name + "'");
  std::size_t rows = 1;
  for (const auto& s : arg_sorts) rows *= sort_size(s);
  if (values.size() != rows) {
    throw EvalError("atom '" + name + "' table has " + std::to_string(values.size()) +
                    " entries, expected " + std::to_string(rows));
  }
  atoms_[name] = AtomTable{std::move(arg_sorts), std::move(values)};
}

const AtomTable* Interpretation::find_atom(const AtomName& name) const {
  auto it = atoms_.find(name);
  return it == atoms_.end() ? nullptr : &it->second;
}

const AtomTable& Interpretation::atom(const AtomName& name) const {
  const AtomTable* t = find_atom(name);
  if (!t) throw EvalError("unknown atom '" + name + "'");
  return *t;
}

std::size_t Interpretation::row(const AtomName& name, std::span<const std::size_t> args) const {
  const AtomTable& t = atom(name);
  if (args.size() != t.arg_sorts.size()) throw EvalError("arity mismatch for atom '" + name + "'");
  std::size_t r = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::size_t n = sort_size(t.arg_sorts[i]);
    if (args[i] >= n) throw EvalError("argument out of range for atom '" + name + "'");
    r = r * n + args[i];
  }
  return r;
}

void Interpretation::set_value(const AtomName& name, std::size_t row, PairValue value) {
  auto it = atoms_.find(name);
  if (it == atoms_.end()) throw EvalError("unknown atom '" + name + "'");
  if (row >= it->second.values.size()) throw EvalError("row out of range for atom '" + name + "'");
  it->second.values[row] = value;
}

void Interpretation::validate() const {
  for (const auto& [name, table] : atoms_) {
    for (std::size_t r = 0; r < table.values.size(); ++r) {
      if (!table.values[r].disjoint()) {
        throw EvalError("atom '" + name + "' row " + std::to_string(r) +
                        " is both pos and neg");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// compilation shared by both programs

namespace {

struct ArgRef {
  bool constant;
  std::size_t value;  // constant element or environment slot
  std::size_t stride;
};

struct Scope {
  struct Entry {
    VarName var;
    SortName sort;
    std::size_t slot;
  };
  std::vector<Entry> entries;
  std::size_t max_slots = 0;

  void push(const VarName& v, const SortName& s) {
    entries.push_back({v, s, entries.size()});
    max_slots = std::max(max_slots, entries.size());
  }
  void pop() { entries.pop_back(); }
  const Entry* find(const VarName& v) const {
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
      if (it->var == v) return &*it;
    }
    return nullptr;
  }
};

std::vector<ArgRef> resolve_args(const AtomName& name, const std::vector<std::string>& args,
                                 const AtomTable& table, const Interpretation& m,
                                 const Scope& scope) {
  if (args.size() != table.arg_sorts.size()) {
    throw EvalError("arity mismatch for atom '" + name + "': expected " +
                    std::to_string(table.arg_sorts.size()) + ", got " +
                    std::to_string(args.size()));
  }
  std::vector<ArgRef> out(args.size());
  std::size_t stride = 1;
  for (std::size_t i = args.size(); i-- > 0;) {
    const SortName& want = table.arg_sorts[i];
    const std::size_t n = m.sort_size(want);
    if (is_constant_arg(args[i])) {
      std::size_t c = std::stoull(args[i]);
      if (c >= n) throw EvalError("constant " + args[i] + " out of range for sort '" + want + "'");
      out[i] = {true, c, stride};
    } else {
      const Scope::Entry* e = scope.find(args[i]);
      if (!e) throw EvalError("unbound variable '" + args[i] + "'");
      if (e->sort != want) {
        throw EvalError("sort mismatch: variable '" + args[i] + "' has sort '" + e->sort +
                        "' but atom '" + name + "' expects '" + want + "'");
      }
      out[i] = {false, e->slot, stride};
    }
    stride *= n;
  }
  return out;
}

inline std::size_t row_of(const std::vector<ArgRef>& args, const std::size_t* env) {
  std::size_t r = 0;
  for (const auto& a : args) r += (a.constant ? a.value : env[a.value]) * a.stride;
  return r;
}

Scope initial_scope(const std::vector<FreeVar>& free, const Interpretation& m) {
  Scope scope;
  for (const auto& fv : free) {
    m.sort_size(fv.sort);
    scope.push(fv.var, fv.sort);
  }
  return scope;
}

}  // namespace

// ---------------------------------------------------------------------------
// PairProgram

struct PairProgram::Node {
  AffineKind kind;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  std::size_t slot = 0;
  std::size_t range = 0;
  const AtomTable* table = nullptr;
  std::vector<ArgRef> args;
};

namespace {

std::size_t compile_pair(const AffineFormula& f, const Interpretation& m, Scope& scope,
                         std::vector<PairProgram::Node>& out) {
  PairProgram::Node node;
  node.kind = f.kind();
  switch (f.kind()) {
    case AffineKind::Atom: {
      const AtomTable* t = m.find_atom(f.name());
      if (!t) throw EvalError("unknown atom '" + f.name() + "'");
      node.table = t;
      node.args = resolve_args(f.name(), f.args(), *t, m, scope);
      break;
    }
    case AffineKind::Top:
    case AffineKind::Bot:
      break;
    case AffineKind::Forall:
    case AffineKind::Exists:
      node.range = m.sort_size(f.sort());
      scope.push(f.name(), f.sort());
      node.slot = scope.entries.back().slot;
      node.lhs = compile_pair(f.child(0), m, scope, out);
      scope.pop();
      break;
    case AffineKind::BigTensor:
    case AffineKind::BigPar:
      return compile_pair(unfold_big(f), m, scope, out);
    default:
      node.lhs = compile_pair(f.child(0), m, scope, out);
      if (f.is_binary()) node.rhs = compile_pair(f.child(1), m, scope, out);
      break;
  }
  out.push_back(std::move(node));
  return out.size() - 1;
}

PairValue run_pair(const std::vector<PairProgram::Node>& nodes, std::size_t i, std::size_t* env) {
  const auto& n = nodes[i];
  switch (n.kind) {
    case AffineKind::Atom:
      return n.table->values[row_of(n.args, env)];
    case AffineKind::Top:
      return kProven;
    case AffineKind::Bot:
      return kRefuted;
    case AffineKind::Tensor:
      return tensor(run_pair(nodes, n.lhs, env), run_pair(nodes, n.rhs, env));
    case AffineKind::Par:
      return par(run_pair(nodes, n.lhs, env), run_pair(nodes, n.rhs, env));
    case AffineKind::With:
      return with(run_pair(nodes, n.lhs, env), run_pair(nodes, n.rhs, env));
    case AffineKind::Plus:
      return plus(run_pair(nodes, n.lhs, env), run_pair(nodes, n.rhs, env));
    case AffineKind::Lollipop:
      return lollipop(run_pair(nodes, n.lhs, env), run_pair(nodes, n.rhs, env));
    case AffineKind::LinNeg:
      return negate(run_pair(nodes, n.lhs, env));
    case AffineKind::OfCourse:
      return of_course(run_pair(nodes, n.lhs, env));
    case AffineKind::WhyNot:
      return why_not(run_pair(nodes, n.lhs, env));
    case AffineKind::Forall: {
      PairValue acc = kProven;  // pos: all pos; neg: some neg
      for (std::size_t v = 0; v < n.range; ++v) {
        env[n.slot] = v;
        PairValue b = run_pair(nodes, n.lhs, env);
        acc.pos = acc.pos && b.pos;
        acc.neg = acc.neg || b.neg;
      }
      return acc;
    }
    case AffineKind::Exists: {
      PairValue acc = kRefuted;  // pos: some pos; neg: all neg
      for (std::size_t v = 0; v < n.range; ++v) {
        env[n.slot] = v;
        PairValue b = run_pair(nodes, n.lhs, env);
        acc.pos = acc.pos || b.pos;
        acc.neg = acc.neg && b.neg;
      }
      return acc;
    }
    default:
      return kUndetermined;
  }
}

}  // namespace

PairProgram::~PairProgram() = default;
PairProgram::PairProgram(const PairProgram&) = default;
PairProgram::PairProgram(PairProgram&&) noexcept = default;
PairProgram& PairProgram::operator=(const PairProgram&) = default;
PairProgram& PairProgram::operator=(PairProgram&&) noexcept = default;

PairProgram::PairProgram(const AffineFormula& f, const Interpretation& m, std::vector<FreeVar> free)
    : free_(std::move(free)) {
  Scope scope = initial_scope(free_, m);
  root_ = compile_pair(f, m, scope, nodes_);
  slots_ = scope.max_slots;
}

PairValue PairProgram::eval(std::span<const std::size_t> free_values) const {
  if (free_values.size() != free_.size()) throw EvalError("wrong number of free variable values");
  std::size_t local[16];
  std::vector<std::size_t> heap;
  std::size_t* env = local;
  if (slots_ > 16) {
    heap.resize(slots_);
    env = heap.data();
  }
  std::copy(free_values.begin(), free_values.end(), env);
  return run_pair(nodes_, root_, env);
}

// ---------------------------------------------------------------------------
// ClassicalProgram

struct ClassicalProgram::Node {
  IntKind kind;
  bool positive = true;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  std::size_t slot = 0;
  std::size_t range = 0;
  const AtomTable* table = nullptr;
  std::vector<ArgRef> args;
};

namespace {

std::size_t compile_classical(const IntFormula& f, const Interpretation& m, Scope& scope,
                              std::vector<ClassicalProgram::Node>& out) {
  ClassicalProgram::Node node;
  node.kind = f.kind();
  switch (f.kind()) {
    case IntKind::Atom: {
      if (f.polarity() == Polarity::Plain) {
        throw EvalError("atom '" + f.name() + "' has no +/- polarity");
      }
      const AtomTable* t = m.find_atom(f.name());
      if (!t) throw EvalError("unknown atom '" + f.name() + "'");
      node.table = t;
      node.positive = f.polarity() == Polarity::Pos;
      node.args = resolve_args(f.name(), f.args(), *t, m, scope);
      break;
    }
    case IntKind::True:
    case IntKind::False:
      break;
    case IntKind::Forall:
    case IntKind::Exists:
      node.range = m.sort_size(f.sort());
      scope.push(f.name(), f.sort());
      node.slot = scope.entries.back().slot;
      node.lhs = compile_classical(f.child(0), m, scope, out);
      scope.pop();
      break;
    case IntKind::Not:
      node.lhs = compile_classical(f.child(0), m, scope, out);
      break;
    default:
      node.lhs = compile_classical(f.child(0), m, scope, out);
      node.rhs = compile_classical(f.child(1), m, scope, out);
      break;
  }
  out.push_back(std::move(node));
  return out.size() - 1;
}

bool run_classical(const std::vector<ClassicalProgram::Node>& nodes, std::size_t i,
                   std::size_t* env) {
  const auto& n = nodes[i];
  switch (n.kind) {
    case IntKind::Atom: {
      PairValue v = n.table->values[row_of(n.args, env)];
      return n.positive ? v.pos : v.neg;
    }
    case IntKind::True:
      return true;
    case IntKind::False:
      return false;
    case IntKind::And:
      return run_classical(nodes, n.lhs, env) && run_classical(nodes, n.rhs, env);
    case IntKind::Or:
      return run_classical(nodes, n.lhs, env) || run_classical(nodes, n.rhs, env);
    case IntKind::Implies:
      return !run_classical(nodes, n.lhs, env) || run_classical(nodes, n.rhs, env);
    case IntKind::Not:
      return !run_classical(nodes, n.lhs, env);
    case IntKind::Forall:
      for (std::size_t v = 0; v < n.range; ++v) {
        env[n.slot] = v;
        if (!run_classical(nodes, n.lhs, env)) return false;
      }
      return true;
    case IntKind::Exists:
      for (std::size_t v = 0; v < n.range; ++v) {
        env[n.slot] = v;
        if (run_classical(nodes, n.lhs, env)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace

ClassicalProgram::~ClassicalProgram() = default;
ClassicalProgram::ClassicalProgram(const ClassicalProgram&) = default;
ClassicalProgram::ClassicalProgram(ClassicalProgram&&) noexcept = default;
ClassicalProgram& ClassicalProgram::operator=(const ClassicalProgram&) = default;
ClassicalProgram& ClassicalProgram::operator=(ClassicalProgram&&) noexcept = default;

ClassicalProgram::ClassicalProgram(const IntFormula& f, const Interpretation& m,
                                   std::vector<FreeVar> free)
    : free_(std::move(free)) {
  Scope scope = initial_scope(free_, m);
  root_ = compile_classical(f, m, scope, nodes_);
  slots_ = scope.max_slots;
}

bool ClassicalProgram::eval(std::span<const std::size_t> free_values) const {
  if (free_values.size() != free_.size()) throw EvalError("wrong number of free variable values");
  std::size_t local[16];
  std::vector<std::size_t> heap;
  std::size_t* env = local;
  if (slots_ > 16) {
    heap.resize(slots_);
    env = heap.data();
  }
  std::copy(free_values.begin(), free_values.end(), env);
  return run_classical(nodes_, root_, env);
}

// ---------------------------------------------------------------------------
// one-shot evaluation

namespace {

template <class Formula>
std::pair<std::vector<FreeVar>, std::vector<std::size_t>> bind_env(const Formula& f,
                                                                   const Interpretation& m,
                                                                   const Env& env) {
  std::vector<FreeVar> free;
  std::vector<std::size_t> values;
  for (const auto& v : free_vars(f)) {
    auto it = std::find_if(env.rbegin(), env.rend(), [&](const Binding& b) { return b.var == v; });
    if (it == env.rend()) throw EvalError("unbound variable '" + v + "'");
    if (it->value >= m.sort_size(it->sort)) {
      throw EvalError("value of '" + v + "' out of range for sort '" + it->sort + "'");
    }
    free.push_back({v, it->sort});
    values.push_back(it->value);
  }
  return {std::move(free), std::move(values)};
}

}  // namespace

bool eval_classical(const IntFormula& f, const Interpretation& m, const Env& env) {
  auto [free, values] = bind_env(f, m, env);
  return ClassicalProgram(f, m, std::move(free)).eval(values);
}

PairValue eval_pair(const AffineFormula& f, const Interpretation& m, const Env& env) {
  auto [free, values] = bind_env(f, m, env);
  return PairProgram(f, m, std::move(free)).eval(values);
}

// ---------------------------------------------------------------------------
// disjointness audit

namespace {

class DisjointnessWalker {
 public:
  DisjointnessWalker(const Interpretation& m, DisjointnessReport& report) : m_(m), report_(report) {}

  PairValue walk(const AffineFormula& f) {
    PairValue v = value(f);
    ++report_.evaluations;
    if (!v.disjoint()) {
      ++report_.violation_count;
      if (report_.violations.size() < kKept) {
        report_.violations.push_back({render(f), describe_env(), v});
      }
    }
    return v;
  }

 private:
  static constexpr std::size_t kKept = 16;

  PairValue value(const AffineFormula& f) {
    switch (f.kind()) {
      case AffineKind::Atom: {
        const AtomTable& t = m_.atom(f.name());
        if (f.args().size() != t.arg_sorts.size()) {
          throw EvalError("arity mismatch for atom '" + f.name() + "'");
        }
        std::vector<std::size_t> args;
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          const auto& a = f.args()[i];
          if (is_constant_arg(a)) {
            args.push_back(std::stoull(a));
            continue;
          }
          auto it = std::find_if(env_.rbegin(), env_.rend(),
                                 [&](const Binding& b) { return b.var == a; });
          if (it == env_.rend()) throw EvalError("unbound variable '" + a + "'");
          if (it->sort != t.arg_sorts[i]) throw EvalError("sort mismatch for '" + a + "'");
          args.push_back(it->value);
        }
        return t.values[m_.row(f.name(), args)];
      }
      case AffineKind::Top:
        return kProven;
      case AffineKind::Bot:
        return kRefuted;
      case AffineKind::Tensor:
        return tensor(walk(f.child(0)), walk(f.child(1)));
      case AffineKind::Par:
        return par(walk(f.child(0)), walk(f.child(1)));
      case AffineKind::With:
        return with(walk(f.child(0)), walk(f.child(1)));
      case AffineKind::Plus:
        return plus(walk(f.child(0)), walk(f.child(1)));
      case AffineKind::Lollipop:
        return lollipop(walk(f.child(0)), walk(f.child(1)));
      case AffineKind::LinNeg:
        return negate(walk(f.child(0)));
      case AffineKind::OfCourse:
        return of_course(walk(f.child(0)));
      case AffineKind::WhyNot:
        return why_not(walk(f.child(0)));
      case AffineKind::Forall:
      case AffineKind::Exists: {
        const bool universal = f.kind() == AffineKind::Forall;
        PairValue acc = universal ? kProven : kRefuted;
        const std::size_t n = m_.sort_size(f.sort());
        for (std::size_t v = 0; v < n; ++v) {
          env_.push_back({f.name(), f.sort(), v});
          PairValue b = walk(f.child(0));
          env_.pop_back();
          if (universal) {
            acc = {acc.pos && b.pos, acc.neg || b.neg};
          } else {
            acc = {acc.pos || b.pos, acc.neg && b.neg};
          }
        }
        return acc;
      }
      case AffineKind::BigTensor:
      case AffineKind::BigPar:
        return value(unfold_big(f));
    }
    return kUndetermined;
  }

  std::string describe_env() const {
    std::string out;
    for (const auto& b : env_) {
      if (!out.empty()) out += ", ";
      out += b.var + "=" + std::to_string(b.value);
    }
    return out;
  }

  const Interpretation& m_;
  DisjointnessReport& report_;
  Env env_;
};

}  // namespace

DisjointnessReport check_disjointness(const AffineFormula& f, const Interpretation& m) {
  DisjointnessReport report;
  DisjointnessWalker(m, report).walk(f);
  return report;
}

}  // namespace affinekit
