#include "affinekit/formula.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "affinekit/error.hpp"

namespace affinekit {

bool is_identifier(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text.front()))) return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_constant_arg(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

namespace {

void check_args(const std::vector<std::string>& args) {
  for (const auto& a : args) {
    if (!is_identifier(a) && !is_constant_arg(a)) throw Error("invalid atom argument '" + a + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// AffineFormula

struct AffineFormula::Node {
  AffineKind kind;
  std::string name;
  SortName sort;
  std::vector<std::string> args;
  std::vector<AffineFormula> children;
};

AffineFormula::AffineFormula() : AffineFormula(top()) {}

AffineFormula::AffineFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

AffineFormula AffineFormula::make(AffineKind kind, std::string name, SortName sort,
                                  std::vector<std::string> args,
                                  std::vector<AffineFormula> children) {
  return AffineFormula(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(sort), std::move(args), std::move(children)}));
}

AffineFormula AffineFormula::atom(AtomName name, std::vector<std::string> args) {
  if (!is_identifier(name)) throw Error("invalid atom name '" + name + "'");
  check_args(args);
  return make(AffineKind::Atom, std::move(name), {}, std::move(args), {});
}

AffineFormula AffineFormula::top() {
  static const AffineFormula value = make(AffineKind::Top, {}, {}, {}, {});
  return value;
}

AffineFormula AffineFormula::bot() {
  static const AffineFormula value = make(AffineKind::Bot, {}, {}, {}, {});
  return value;
}

AffineFormula AffineFormula::tensor(AffineFormula lhs, AffineFormula rhs) {
  return make(AffineKind::Tensor, {}, {}, {}, {std::move(lhs), std::move(rhs)});
}
AffineFormula AffineFormula::par(AffineFormula lhs, AffineFormula rhs) {
  return make(AffineKind::Par, {}, {}, {}, {std::move(lhs), std::move(rhs)});
}
AffineFormula AffineFormula::with(AffineFormula lhs, AffineFormula rhs) {
  return make(AffineKind::With, {}, {}, {}, {std::move(lhs), std::move(rhs)});
}
AffineFormula AffineFormula::plus(AffineFormula lhs, AffineFormula rhs) {
  return make(AffineKind::Plus, {}, {}, {}, {std::move(lhs), std::move(rhs)});
}
AffineFormula AffineFormula::lollipop(AffineFormula lhs, AffineFormula rhs) {
  return make(AffineKind::Lollipop, {}, {}, {}, {std::move(lhs), std::move(rhs)});
}
AffineFormula AffineFormula::lin_neg(AffineFormula body) {
  return make(AffineKind::LinNeg, {}, {}, {}, {std::move(body)});
}
AffineFormula AffineFormula::of_course(AffineFormula body) {
  return make(AffineKind::OfCourse, {}, {}, {}, {std::move(body)});
}
AffineFormula AffineFormula::why_not(AffineFormula body) {
  return make(AffineKind::WhyNot, {}, {}, {}, {std::move(body)});
}
AffineFormula AffineFormula::forall(VarName var, SortName sort, AffineFormula body) {
  if (!is_identifier(var) || !is_identifier(sort)) throw Error("invalid quantifier binder");
  return make(AffineKind::Forall, std::move(var), std::move(sort), {}, {std::move(body)});
}
AffineFormula AffineFormula::exists(VarName var, SortName sort, AffineFormula body) {
  if (!is_identifier(var) || !is_identifier(sort)) throw Error("invalid quantifier binder");
  return make(AffineKind::Exists, std::move(var), std::move(sort), {}, {std::move(body)});
}
AffineFormula AffineFormula::big_tensor(std::vector<AffineFormula> items) {
  return make(AffineKind::BigTensor, {}, {}, {}, std::move(items));
}
AffineFormula AffineFormula::big_par(std::vector<AffineFormula> items) {
  return make(AffineKind::BigPar, {}, {}, {}, std::move(items));
}

AffineKind AffineFormula::kind() const { return node_->kind; }
const std::string& AffineFormula::name() const { return node_->name; }
const SortName& AffineFormula::sort() const { return node_->sort; }
const std::vector<std::string>& AffineFormula::args() const { return node_->args; }
const std::vector<AffineFormula>& AffineFormula::children() const { return node_->children; }

bool AffineFormula::is_binary() const {
  switch (kind()) {
    case AffineKind::Tensor:
    case AffineKind::Par:
    case AffineKind::With:
    case AffineKind::Plus:
    case AffineKind::Lollipop:
      return true;
    default:
      return false;
  }
}

bool AffineFormula::is_unary() const {
  return kind() == AffineKind::LinNeg || kind() == AffineKind::OfCourse ||
         kind() == AffineKind::WhyNot;
}

bool AffineFormula::is_quantifier() const {
  return kind() == AffineKind::Forall || kind() == AffineKind::Exists;
}

std::size_t AffineFormula::size() const {
  std::size_t n = 1;
  for (const auto& c : children()) n += c.size();
  return n;
}

std::size_t AffineFormula::depth() const {
  std::size_t d = 0;
  for (const auto& c : children()) d = std::max(d, c.depth() + 1);
  return d;
}

bool operator==(const AffineFormula& a, const AffineFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.sort() == b.sort() &&
         a.args() == b.args() && a.children() == b.children();
}

// ---------------------------------------------------------------------------
// IntFormula

struct IntFormula::Node {
  IntKind kind;
  std::string name;
  Polarity polarity;
  SortName sort;
  std::vector<std::string> args;
  std::vector<IntFormula> children;
};

IntFormula::IntFormula() : IntFormula(truth()) {}

IntFormula::IntFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

IntFormula IntFormula::make(IntKind kind, std::string name, Polarity polarity, SortName sort,
                            std::vector<std::string> args, std::vector<IntFormula> children) {
  return IntFormula(std::make_shared<const Node>(Node{kind, std::move(name), polarity,
                                                      std::move(sort), std::move(args),
                                                      std::move(children)}));
}

IntFormula IntFormula::atom(AtomName name, Polarity polarity, std::vector<std::string> args) {
  if (!is_identifier(name)) throw Error("invalid atom name '" + name + "'");
  check_args(args);
  return make(IntKind::Atom, std::move(name), polarity, {}, std::move(args), {});
}
IntFormula IntFormula::truth() {
  static const IntFormula value = make(IntKind::True, {}, Polarity::Plain, {}, {}, {});
  return value;
}
IntFormula IntFormula::falsity() {
  static const IntFormula value = make(IntKind::False, {}, Polarity::Plain, {}, {}, {});
  return value;
}
IntFormula IntFormula::conj(IntFormula lhs, IntFormula rhs) {
  return make(IntKind::And, {}, Polarity::Plain, {}, {}, {std::move(lhs), std::move(rhs)});
}
IntFormula IntFormula::disj(IntFormula lhs, IntFormula rhs) {
  return make(IntKind::Or, {}, Polarity::Plain, {}, {}, {std::move(lhs), std::move(rhs)});
}
IntFormula IntFormula::implies(IntFormula lhs, IntFormula rhs) {
  return make(IntKind::Implies, {}, Polarity::Plain, {}, {}, {std::move(lhs), std::move(rhs)});
}
IntFormula IntFormula::negation(IntFormula body) {
  return make(IntKind::Not, {}, Polarity::Plain, {}, {}, {std::move(body)});
}
IntFormula IntFormula::forall(VarName var, SortName sort, IntFormula body) {
  if (!is_identifier(var) || !is_identifier(sort)) throw Error("invalid quantifier binder");
  return make(IntKind::Forall, std::move(var), Polarity::Plain, std::move(sort), {},
              {std::move(body)});
}
IntFormula IntFormula::exists(VarName var, SortName sort, IntFormula body) {
  if (!is_identifier(var) || !is_identifier(sort)) throw Error("invalid quantifier binder");
  return make(IntKind::Exists, std::move(var), Polarity::Plain, std::move(sort), {},
              {std::move(body)});
}

IntKind IntFormula::kind() const { return node_->kind; }
const std::string& IntFormula::name() const { return node_->name; }
Polarity IntFormula::polarity() const { return node_->polarity; }
const SortName& IntFormula::sort() const { return node_->sort; }
const std::vector<std::string>& IntFormula::args() const { return node_->args; }
const std::vector<IntFormula>& IntFormula::children() const { return node_->children; }

std::size_t IntFormula::size() const {
  std::size_t n = 1;
  for (const auto& c : children()) n += c.size();
  return n;
}

bool operator==(const IntFormula& a, const IntFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.polarity() == b.polarity() &&
         a.sort() == b.sort() && a.args() == b.args() && a.children() == b.children();
}

// ---------------------------------------------------------------------------
// free variables

namespace {

template <class Formula>
void collect_free(const Formula& f, std::multiset<VarName>& bound, std::set<VarName>& out) {
  if (f.is_quantifier()) {
    auto it = bound.insert(f.name());
    collect_free(f.child(0), bound, out);
    bound.erase(it);
    return;
  }
  for (const auto& a : f.args()) {
    if (!is_constant_arg(a) && !bound.contains(a)) out.insert(a);
  }
  for (const auto& c : f.children()) collect_free(c, bound, out);
}

}  // namespace

std::set<VarName> free_vars(const AffineFormula& f) {
  std::multiset<VarName> bound;
  std::set<VarName> out;
  collect_free(f, bound, out);
  return out;
}

std::set<VarName> free_vars(const IntFormula& f) {
  std::multiset<VarName> bound;
  std::set<VarName> out;
  collect_free(f, bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// desugaring

namespace {

AffineFormula fold_right(AffineKind kind, const std::vector<AffineFormula>& items) {
  const bool is_tensor = kind == AffineKind::BigTensor;
  if (items.empty()) return is_tensor ? AffineFormula::top() : AffineFormula::bot();
  AffineFormula acc = items.back();
  for (auto it = items.rbegin() + 1; it != items.rend(); ++it) {
    acc = is_tensor ? AffineFormula::tensor(*it, acc) : AffineFormula::par(*it, acc);
  }
  return acc;
}

AffineFormula rebuild(const AffineFormula& f, std::vector<AffineFormula> kids) {
  switch (f.kind()) {
    case AffineKind::Atom:
    case AffineKind::Top:
    case AffineKind::Bot:
      return f;
    case AffineKind::Tensor:
      return AffineFormula::tensor(kids[0], kids[1]);
    case AffineKind::Par:
      return AffineFormula::par(kids[0], kids[1]);
    case AffineKind::With:
      return AffineFormula::with(kids[0], kids[1]);
    case AffineKind::Plus:
      return AffineFormula::plus(kids[0], kids[1]);
    case AffineKind::Lollipop:
      return AffineFormula::lollipop(kids[0], kids[1]);
    case AffineKind::LinNeg:
      return AffineFormula::lin_neg(kids[0]);
    case AffineKind::OfCourse:
      return AffineFormula::of_course(kids[0]);
    case AffineKind::WhyNot:
      return AffineFormula::why_not(kids[0]);
    case AffineKind::Forall:
      return AffineFormula::forall(f.name(), f.sort(), kids[0]);
    case AffineKind::Exists:
      return AffineFormula::exists(f.name(), f.sort(), kids[0]);
    case AffineKind::BigTensor:
      return AffineFormula::big_tensor(std::move(kids));
    case AffineKind::BigPar:
      return AffineFormula::big_par(std::move(kids));
  }
  return f;
}

AffineFormula transform(const AffineFormula& f, bool remove_lollipop) {
  std::vector<AffineFormula> kids;
  kids.reserve(f.children().size());
  for (const auto& c : f.children()) kids.push_back(transform(c, remove_lollipop));
  switch (f.kind()) {
    case AffineKind::BigTensor:
    case AffineKind::BigPar:
      return fold_right(f.kind(), kids);
    case AffineKind::Lollipop:
      if (remove_lollipop) return AffineFormula::par(AffineFormula::lin_neg(kids[0]), kids[1]);
      return AffineFormula::lollipop(kids[0], kids[1]);
    default:
      return rebuild(f, std::move(kids));
  }
}

}  // namespace

AffineFormula desugar(const AffineFormula& f) { return transform(f, true); }

AffineFormula unfold_big(const AffineFormula& f) { return transform(f, false); }

// ---------------------------------------------------------------------------
// rendering

namespace {

// Binding strength of each syntactic level; a child printed in a context that
// demands a higher level than its own gets parentheses.
enum Level { kQuant = 0, kArrow = 1, kAdd = 2, kMul = 3, kUnary = 4, kAtom = 5 };

std::string wrap(std::string text, int own, int ctx) {
  return own < ctx ? "(" + text + ")" : text;
}

std::string render_atom(const std::string& name, std::string_view suffix,
                        const std::vector<std::string>& args) {
  std::string out = name;
  out += suffix;
  if (!args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ", ";
      out += args[i];
    }
    out += ')';
  }
  return out;
}

std::string render_aff(const AffineFormula& f, int ctx) {
  auto binary = [&](std::string_view op, int level) {
    int rhs_level = level == kArrow ? kArrow : level + 1;
    int lhs_level = level == kArrow ? kAdd : level;
    return wrap(render_aff(f.child(0), lhs_level) + " " + std::string(op) + " " +
                    render_aff(f.child(1), rhs_level),
                level, ctx);
  };
  auto unary = [&](char op) { return wrap(op + render_aff(f.child(0), kUnary), kUnary, ctx); };
  switch (f.kind()) {
    case AffineKind::Atom:
      return render_atom(f.name(), "", f.args());
    case AffineKind::Top:
      return "top";
    case AffineKind::Bot:
      return "bot";
    case AffineKind::Tensor:
      return binary("*", kMul);
    case AffineKind::With:
      return binary("&", kMul);
    case AffineKind::Par:
      return binary("@", kAdd);
    case AffineKind::Plus:
      return binary("+", kAdd);
    case AffineKind::Lollipop:
      return binary("-o", kArrow);
    case AffineKind::LinNeg:
      return unary('~');
    case AffineKind::OfCourse:
      return unary('!');
    case AffineKind::WhyNot:
      return unary('?');
    case AffineKind::Forall:
    case AffineKind::Exists:
      return wrap(std::string(f.kind() == AffineKind::Forall ? "forall " : "exists ") +
                      f.name() + ":" + f.sort() + ". " + render_aff(f.child(0), kQuant),
                  kQuant, ctx);
    case AffineKind::BigTensor:
    case AffineKind::BigPar:
      return render_aff(unfold_big(f), ctx);
  }
  return {};
}

std::string render_int(const IntFormula& f, int ctx) {
  auto binary = [&](std::string_view op, int level) {
    int rhs_level = level == kArrow ? kArrow : level + 1;
    int lhs_level = level == kArrow ? kAdd : level;
    return wrap(render_int(f.child(0), lhs_level) + " " + std::string(op) + " " +
                    render_int(f.child(1), rhs_level),
                level, ctx);
  };
  switch (f.kind()) {
    case IntKind::Atom: {
      std::string_view suffix =
          f.polarity() == Polarity::Pos ? "+" : (f.polarity() == Polarity::Neg ? "-" : "");
      return render_atom(f.name(), suffix, f.args());
    }
    case IntKind::True:
      return "true";
    case IntKind::False:
      return "false";
    case IntKind::And:
      return binary("/\\", kMul);
    case IntKind::Or:
      return binary("\\/", kAdd);
    case IntKind::Implies:
      return binary("->", kArrow);
    case IntKind::Not:
      return wrap("~" + render_int(f.child(0), kUnary), kUnary, ctx);
    case IntKind::Forall:
    case IntKind::Exists:
      return wrap(std::string(f.kind() == IntKind::Forall ? "forall " : "exists ") + f.name() +
                      ":" + f.sort() + ". " + render_int(f.child(0), kQuant),
                  kQuant, ctx);
  }
  return {};
}

}  // namespace

std::string render(const AffineFormula& f) { return render_aff(f, kQuant); }

std::string render(const IntFormula& f) { return render_int(f, kQuant); }

}  // namespace affinekit
