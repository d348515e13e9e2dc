#include "affinekit/topo.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>

#include "affinekit/error.hpp"
#include "affinekit/parser.hpp"
#include "affinekit/semantics.hpp"

namespace affinekit {

namespace {

using Tuple = std::vector<std::size_t>;

// Calls fn on every tuple over the given sizes, last position fastest.
template <class Fn>
void for_tuples(const std::vector<std::size_t>& sizes, Fn&& fn) {
  for (std::size_t n : sizes) {
    if (n == 0) return;
  }
  Tuple t(sizes.size(), 0);
  while (true) {
    fn(static_cast<const Tuple&>(t));
    std::size_t i = sizes.size();
    while (i > 0) {
      --i;
      if (++t[i] < sizes[i]) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (sizes.empty()) return;
  }
}

std::vector<Subset3> all_subsets(std::size_t m) {
  std::vector<Subset3> out;
  const std::size_t n = subset_count(m);
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(subset_from_index(i, m));
  return out;
}

std::size_t whole_index(std::size_t m) { return subset_count(m) - 1; }

void validate_operator(const InteriorOperator& op) {
  if (op.m == 0) throw Error("operator carrier must be non-empty");
  if (op.table.size() != subset_count(op.m)) {
    throw Error("operator table has " + std::to_string(op.table.size()) + " entries, expected " +
                std::to_string(subset_count(op.m)));
  }
  for (const auto& s : op.table) {
    if (s.size() != op.m) throw Error("operator entry has the wrong carrier size");
    for (PairValue v : s) {
      if (!v.disjoint()) throw Error("operator entry is contradictory");
    }
  }
}

void validate_collection(std::size_t m, const Collection& c) {
  if (c.size() != subset_count(m)) {
    throw Error("collection has " + std::to_string(c.size()) + " entries, expected " +
                std::to_string(subset_count(m)));
  }
  for (PairValue v : c) {
    if (!v.disjoint()) throw Error("collection entry is contradictory");
  }
}

// Sort names whose elements are subsets, mapped to their carrier size, so
// counterexamples print "s=pu" rather than "s=7".
using SubsetSorts = std::map<SortName, std::size_t>;

std::string label(const SubsetSorts& subsets, const FreeVar& v, std::size_t value) {
  auto it = subsets.find(v.sort);
  if (it != subsets.end()) return v.var + "=" + subset_code(subset_from_index(value, it->second));
  return v.var + "=" + std::to_string(value);
}

// Interpretation built from lambdas over argument tuples.
class Model {
 public:
  void sort(const SortName& name, std::size_t n) { interp.add_sort(name, n); }

  template <class Fn>
  void atom(const AtomName& name, std::vector<SortName> sorts, Fn&& fn) {
    interp.add_atom(name, sorts, table(sorts, fn));
  }

  // Refills an existing atom in place.
  template <class Fn>
  void refill(const AtomName& name, Fn&& fn) {
    const auto sorts = interp.atom(name).arg_sorts;
    auto values = table(sorts, fn);
    for (std::size_t r = 0; r < values.size(); ++r) interp.set_value(name, r, values[r]);
  }

  Interpretation interp;

 private:
  template <class Fn>
  std::vector<PairValue> table(const std::vector<SortName>& sorts, Fn& fn) const {
    std::vector<std::size_t> sizes;
    for (const auto& s : sorts) sizes.push_back(interp.sort_size(s));
    std::vector<PairValue> values;
    for_tuples(sizes, [&](const Tuple& t) { values.push_back(fn(t)); });
    return values;
  }
};

// A closed formula compiled against a model; counterexamples enumerate the
// leading universal binders.
class Claim {
 public:
  Claim(std::string name, const std::string& text, const Interpretation& m)
      : name_(std::move(name)),
        formula_(parse_affine(text, ParseMode::Closed)),
        model_(&m),
        program_(formula_, m) {}

  Verdict run(const SubsetSorts& subsets) const {
    Verdict v;
    v.name = name_;
    v.value = program_.eval();
    v.pass = v.value.pos;
    if (!v.pass) {
      v.failures = 1;
      v.counterexample = counterexample(subsets, v.value);
    }
    return v;
  }

 private:
  std::string counterexample(const SubsetSorts& subsets, PairValue value) const {
    std::vector<FreeVar> binders;
    AffineFormula body = formula_;
    while (body.kind() == AffineKind::Forall) {
      binders.push_back({body.name(), body.sort()});
      body = body.child(0);
    }
    if (binders.empty()) return "value " + std::string(to_word(value));
    PairProgram inner(body, *model_, binders);
    std::vector<std::size_t> sizes;
    for (const auto& b : binders) sizes.push_back(model_->sort_size(b.sort));
    std::string found;
    for_tuples(sizes, [&](const Tuple& t) {
      if (!found.empty()) return;
      PairValue r = inner.eval(t);
      if (r.pos) return;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) found += ", ";
        found += label(subsets, binders[i], t[i]);
      }
      found += " (" + std::string(to_word(r)) + ")";
    });
    return found.empty() ? "value " + std::string(to_word(value)) : found;
  }

  std::string name_;
  AffineFormula formula_;
  const Interpretation* model_;
  PairProgram program_;
};

// Table of a formula over its free variables, row-major.
std::vector<PairValue> tabulate(const std::string& text, const Interpretation& m,
                                std::vector<FreeVar> free) {
  PairProgram prog(parse_affine(text, ParseMode::Open), m, free);
  std::vector<std::size_t> sizes;
  for (const auto& v : free) sizes.push_back(m.sort_size(v.sort));
  std::vector<PairValue> out;
  for_tuples(sizes, [&](const Tuple& t) { out.push_back(prog.eval(t)); });
  return out;
}

// Splits a table over (s:P, x:X) into one subset per s.
std::vector<Subset3> rows_to_subsets(const std::vector<PairValue>& values, std::size_t m) {
  std::vector<Subset3> out;
  for (std::size_t i = 0; i < values.size(); i += m) {
    out.emplace_back(values.begin() + static_cast<std::ptrdiff_t>(i),
                     values.begin() + static_cast<std::ptrdiff_t>(i + m));
  }
  return out;
}

// X (carrier), P (all subsets), mem(x,s).
void carrier_sorts(Model& md, std::size_t m, const std::vector<Subset3>& subs) {
  md.sort("X", m);
  md.sort("P", subs.size());
  md.atom("mem", {"X", "P"}, [&](const Tuple& t) { return subs[t[1]][t[0]]; });
}

// ⅄ over the multiset whose base-3 digits (index 0 least significant) give the
// multiplicity of each family member; ⅄ saturates at multiplicity two.
PairValue par_multiset(std::span<const Subset3> family, std::size_t code, std::size_t x) {
  PairValue acc = kRefuted;
  for (const auto& u : family) {
    for (std::size_t k = code % 3; k > 0; --k) acc = par(acc, u[x]);
    code /= 3;
  }
  return acc;
}

std::string family_code(std::span<const Subset3> family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ",";
    out += subset_code(family[i]);
  }
  return out + "}";
}

constexpr const char* kInclusionST = "(forall x:X. mem(x,s) -o mem(x,t))";
constexpr const char* kInclusionTS = "(forall x:X. mem(x,t) -o mem(x,s))";

}  // namespace

// ---------------------------------------------------------------------------
// operators

std::string operator_code(const InteriorOperator& op) {
  std::string out;
  for (const auto& s : op.table) {
    if (!out.empty()) out += '.';
    out += subset_code(s);
  }
  return out;
}

Verdict aggregate_verdict(std::string name) {
  Verdict v;
  v.name = std::move(name);
  v.instances = 0;
  return v;
}

void absorb(Verdict& agg, const Verdict& one, const std::string& context) {
  ++agg.instances;
  if (one.pass) return;
  ++agg.failures;
  if (agg.pass) {
    agg.pass = false;
    agg.value = one.value;
    agg.counterexample = context.empty() ? one.counterexample : context + ": " + one.counterexample;
  }
}

InteriorOperator InteriorOperator::identity(std::size_t m) {
  return from_function(m, [](const Subset3& s) { return s; });
}

InteriorOperator InteriorOperator::constant(std::size_t m, const Subset3& value) {
  if (value.size() != m) throw Error("constant operator value has the wrong carrier size");
  return from_function(m, [&](const Subset3&) { return value; });
}

InteriorOperator InteriorOperator::from_function(
    std::size_t m, const std::function<Subset3(const Subset3&)>& fn) {
  InteriorOperator op;
  op.m = m;
  for (const auto& s : all_subsets(m)) op.table.push_back(fn(s));
  validate_operator(op);
  return op;
}

Subset3 closure(const InteriorOperator& op, const Subset3& s) {
  return complement(op(complement(s)));
}

std::vector<Axiom> axioms_for(AxiomLevel level) {
  switch (level) {
    case AxiomLevel::Moore:
      return {Axiom::I1, Axiom::I2, Axiom::I3};
    case AxiomLevel::Cech:
      return {Axiom::I1, Axiom::I2, Axiom::I4, Axiom::I5};
    case AxiomLevel::Full:
      break;
  }
  return {Axiom::I1, Axiom::I2, Axiom::I3, Axiom::I4, Axiom::I5};
}

std::string axiom_name(Axiom a) {
  return "I" + std::to_string(static_cast<int>(a) + 1);
}

bool TopoReport::ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.pass || v.informational; });
}

const Verdict* TopoReport::find(const std::string& name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

void TopoReport::append(const TopoReport& other) {
  verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
  facts.insert(facts.end(), other.facts.begin(), other.facts.end());
}

TopoReport check_axioms(const InteriorOperator& op, std::span<const Axiom> axioms) {
  validate_operator(op);
  const std::size_t m = op.m;
  const auto subs = all_subsets(m);
  Model md;
  carrier_sorts(md, m, subs);
  md.atom("I", {"X", "P"}, [&](const Tuple& t) { return op.table[t[1]][t[0]]; });
  md.atom("II", {"X", "P"},
          [&](const Tuple& t) { return op(op.table[t[1]])[t[0]]; });
  md.atom("Im", {"X", "P", "P"},
          [&](const Tuple& t) { return op(meet(subs[t[1]], subs[t[2]]))[t[0]]; });

  const std::string w = std::to_string(whole_index(m));
  const SubsetSorts labels{{"P", m}};
  TopoReport rep;
  for (Axiom a : axioms) {
    std::string text;
    switch (a) {
      case Axiom::I1:
        text = "forall s:P. forall x:X. I(x,s) -o mem(x,s)";
        break;
      case Axiom::I2:
        text = std::string("forall s:P. forall t:P. ") + kInclusionST +
               " -o (forall x:X. I(x,s) -o I(x,t))";
        break;
      case Axiom::I3:
        text = "forall s:P. forall x:X. I(x,s) -o II(x,s)";
        break;
      case Axiom::I4:
        text = "forall x:X. mem(x," + w + ") -o I(x," + w + ")";
        break;
      case Axiom::I5:
        text = "forall s:P. forall t:P. forall x:X. I(x,s) * I(x,t) -o Im(x,s,t)";
        break;
    }
    rep.verdicts.push_back(Claim(axiom_name(a), text, md.interp).run(labels));
  }
  return rep;
}

TopoReport check_operator_axioms(const InteriorOperator& op, AxiomLevel level) {
  const auto axioms = axioms_for(level);
  return check_axioms(op, axioms);
}

// ---------------------------------------------------------------------------
// bases

namespace {

Model basis_model(const BasisFamily& b, const std::vector<Subset3>& subs) {
  for (const auto& s : b.sets) {
    if (s.size() != b.m) throw Error("basis set has the wrong carrier size");
  }
  Model md;
  carrier_sorts(md, b.m, subs);
  md.sort("B", b.sets.size());
  md.atom("Bm", {"X", "B"}, [&](const Tuple& t) { return b.sets[t[1]][t[0]]; });
  return md;
}

}  // namespace

InteriorOperator basis_interior(const BasisFamily& b) {
  if (b.m == 0) throw Error("basis carrier must be non-empty");
  const auto subs = all_subsets(b.m);
  Model md = basis_model(b, subs);
  auto values = tabulate("exists i:B. Bm(x,i) * (forall y:X. Bm(y,i) -o mem(y,s))", md.interp,
                         {{"s", "P"}, {"x", "X"}});
  InteriorOperator op;
  op.m = b.m;
  op.table = rows_to_subsets(values, b.m);
  return op;
}

TopoReport basis_conditions(const BasisFamily& b) {
  if (b.m == 0) throw Error("basis carrier must be non-empty");
  const auto subs = all_subsets(b.m);
  Model md = basis_model(b, subs);
  TopoReport rep;
  rep.verdicts.push_back(
      Claim("basis_cover", "forall x:X. exists i:B. Bm(x,i)", md.interp).run({}));
  rep.verdicts.push_back(Claim("basis_intersection",
                               "forall x:X. forall i:B. forall j:B. Bm(x,i) * Bm(x,j) -o "
                               "(exists k:B. Bm(x,k) * ((forall y:X. Bm(y,k) -o Bm(y,i)) & "
                               "(forall y:X. Bm(y,k) -o Bm(y,j))))",
                               md.interp)
                             .run({}));
  return rep;
}

bool is_basis(const BasisFamily& b) { return basis_conditions(b).ok(); }

// ---------------------------------------------------------------------------
// open sets

Collection opens_from_interior(const InteriorOperator& op) {
  validate_operator(op);
  const auto subs = all_subsets(op.m);
  Model md;
  carrier_sorts(md, op.m, subs);
  md.atom("I", {"X", "P"}, [&](const Tuple& t) { return op.table[t[1]][t[0]]; });
  return tabulate("forall x:X. mem(x,s) -o I(x,s)", md.interp, {{"s", "P"}});
}

InteriorOperator interior_from_opens(std::size_t m, const Collection& opens) {
  if (m == 0) throw Error("carrier must be non-empty");
  validate_collection(m, opens);
  const auto subs = all_subsets(m);
  Model md;
  carrier_sorts(md, m, subs);
  md.atom("O", {"P"}, [&](const Tuple& t) { return opens[t[0]]; });
  auto values = tabulate("exists t:P. O(t) * (forall y:X. mem(y,t) -o mem(y,s)) * mem(x,t)",
                         md.interp, {{"s", "P"}, {"x", "X"}});
  InteriorOperator op;
  op.m = m;
  op.table = rows_to_subsets(values, m);
  return op;
}

TopoReport roundtrip_check(const InteriorOperator& op) {
  const Collection opens = opens_from_interior(op);
  const InteriorOperator back = interior_from_opens(op.m, opens);
  const auto subs = all_subsets(op.m);
  Model md;
  carrier_sorts(md, op.m, subs);
  md.atom("I", {"X", "P"}, [&](const Tuple& t) { return op.table[t[1]][t[0]]; });
  md.atom("J", {"X", "P"}, [&](const Tuple& t) { return back.table[t[1]][t[0]]; });
  md.atom("O", {"P"}, [&](const Tuple& t) { return opens[t[0]]; });
  md.atom("OJ", {"P"}, [&](const Tuple& t) { return opens[subset_index(back.table[t[0]])]; });

  const SubsetSorts labels{{"P", op.m}};
  TopoReport rep;
  rep.verdicts.push_back(Claim("O1",
                               std::string("forall s:P. forall t:P. O(s) -o ") + kInclusionST +
                                   " * " + kInclusionTS + " -o O(t)",
                               md.interp)
                             .run(labels));
  rep.verdicts.push_back(Claim("O2", "forall s:P. OJ(s)", md.interp).run(labels));
  rep.verdicts.push_back(Claim("roundtrip",
                               "forall s:P. (forall x:X. I(x,s) -o J(x,s)) * "
                               "(forall x:X. J(x,s) -o I(x,s))",
                               md.interp)
                             .run(labels));
  return rep;
}

TopoReport union_of_opens_check(const InteriorOperator& op, std::size_t max_family) {
  if (max_family > 3) throw BudgetError("union_of_opens_check supports families of size <= 3");
  const Collection opens = opens_from_interior(op);
  const std::size_t m = op.m;
  const auto subs = all_subsets(m);
  Verdict agg = aggregate_verdict("union_of_opens");
  for (std::size_t k = 1; k <= max_family; ++k) {
    std::vector<std::size_t> pick(k, 0);
    Model md;
    md.sort("X", m);
    md.sort("A", k);
    md.atom("S", {"X", "A"}, [&](const Tuple& t) { return subs[pick[t[1]]][t[0]]; });
    md.atom("Uo", {"A"}, [&](const Tuple& t) { return opens[pick[t[0]]]; });
    md.atom("OU", {}, [&](const Tuple&) { return kRefuted; });
    PairProgram uni(parse_affine("exists a:A. S(x,a)"), md.interp, {{"x", "X"}});
    Claim claim("union_of_opens", "(forall a:A. Uo(a)) -o OU", md.interp);
    for_tuples(std::vector<std::size_t>(k, subs.size()), [&](const Tuple& t) {
      pick = t;
      md.refill("S", [&](const Tuple& u) { return subs[pick[u[1]]][u[0]]; });
      md.refill("Uo", [&](const Tuple& u) { return opens[pick[u[0]]]; });
      Subset3 u(m);
      for (std::size_t x = 0; x < m; ++x) {
        const std::array<std::size_t, 1> arg{x};
        u[x] = uni.eval(arg);
      }
      md.interp.set_value("OU", 0, opens[subset_index(u)]);
      std::vector<Subset3> fam;
      for (std::size_t i : pick) fam.push_back(subs[i]);
      absorb(agg, claim.run({}), "family " + family_code(fam));
    });
  }
  TopoReport rep;
  rep.verdicts.push_back(agg);
  return rep;
}

TopoReport closure_duality_check(const InteriorOperator& op) {
  validate_operator(op);
  const auto subs = all_subsets(op.m);
  Model md;
  carrier_sorts(md, op.m, subs);
  md.atom("cl", {"X", "P"}, [&](const Tuple& t) { return closure(op, subs[t[1]])[t[0]]; });
  md.atom("Ic", {"X", "P"}, [&](const Tuple& t) { return op(complement(subs[t[1]]))[t[0]]; });
  const auto closed = tabulate("forall x:X. cl(x,s) -o mem(x,s)", md.interp, {{"s", "P"}});
  const auto open = tabulate("forall x:X. ~mem(x,s) -o Ic(x,s)", md.interp, {{"s", "P"}});
  Verdict v;
  v.name = "closure_duality";
  v.instances = subs.size();
  for (std::size_t s = 0; s < subs.size(); ++s) {
    if (closed[s] == open[s]) continue;
    ++v.failures;
    if (v.pass) {
      v.pass = false;
      v.value = closed[s];
      v.counterexample = "s=" + subset_code(subs[s]) + " (closed " +
                         std::string(to_word(closed[s])) + ", complement open " +
                         std::string(to_word(open[s])) + ")";
    }
  }
  TopoReport rep;
  rep.verdicts.push_back(v);
  return rep;
}

// ---------------------------------------------------------------------------
// products

InteriorOperator product_interior(const InteriorOperator& x, const InteriorOperator& y,
                                  ProductFlavor flavor) {
  validate_operator(x);
  validate_operator(y);
  const std::size_t mx = x.m, my = y.m, mz = mx * my;
  if (mz > 4) throw BudgetError("product carriers are limited to 4 elements");
  const auto sx = all_subsets(mx), sy = all_subsets(my), sz = all_subsets(mz);
  Model md;
  md.sort("Z", mz);
  md.sort("PX", sx.size());
  md.sort("PY", sy.size());
  md.sort("PZ", sz.size());
  md.atom("mem", {"Z", "PZ"}, [&](const Tuple& t) { return sz[t[1]][t[0]]; });
  md.atom("IXz", {"Z", "PX"}, [&](const Tuple& t) { return x.table[t[1]][t[0] / my]; });
  md.atom("IYz", {"Z", "PY"}, [&](const Tuple& t) { return y.table[t[1]][t[0] % my]; });
  md.atom("MXz", {"Z", "PX"}, [&](const Tuple& t) { return sx[t[1]][t[0] / my]; });
  md.atom("MYz", {"Z", "PY"}, [&](const Tuple& t) { return sy[t[1]][t[0] % my]; });
  const std::string conn = flavor == ProductFlavor::Tensor ? " * " : " & ";
  auto values = tabulate("exists u:PX. exists v:PY. (IXz(z,u) * IYz(z,v)) * "
                         "(forall w:Z. MXz(w,u)" + conn + "MYz(w,v) -o mem(w,s))",
                         md.interp, {{"s", "PZ"}, {"z", "Z"}});
  InteriorOperator op;
  op.m = mz;
  op.table = rows_to_subsets(values, mz);
  return op;
}

TopoReport product_axiom_check(const InteriorOperator& x, const InteriorOperator& y,
                               ProductFlavor flavor) {
  const auto all = axioms_for(AxiomLevel::Full);
  const TopoReport rx = check_axioms(x, all), ry = check_axioms(y, all);
  const TopoReport rp = check_axioms(product_interior(x, y, flavor), all);
  TopoReport rep;
  for (Axiom a : all) {
    const std::string name = axiom_name(a);
    const Verdict& p = *rp.find(name);
    Verdict v;
    v.name = "preserves_" + name;
    v.value = p.value;
    v.informational = flavor == ProductFlavor::With && a == Axiom::I3;
    const bool premise = a == Axiom::I2 || (rx.find(name)->pass && ry.find(name)->pass);
    v.pass = !premise || p.pass;
    if (!p.pass) v.counterexample = p.counterexample;
    if (!v.pass) v.failures = 1;
    rep.verdicts.push_back(v);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// filters and compactness

namespace {

// X, P, mem, F(s), Fm(s,t) = F(s ⊠ t).
struct FilterModel {
  explicit FilterModel(std::size_t m_)
      : m(m_), subs(all_subsets(m_)), meets(subs.size() * subs.size()) {
    for (std::size_t s = 0; s < subs.size(); ++s) {
      for (std::size_t t = 0; t < subs.size(); ++t) {
        meets[s * subs.size() + t] = subset_index(mult_intersection(subs[s], subs[t]));
      }
    }
    carrier_sorts(md, m, subs);
    md.atom("F", {"P"}, [](const Tuple&) { return kRefuted; });
    md.atom("Fm", {"P", "P"}, [](const Tuple&) { return kRefuted; });
    const std::string w = std::to_string(whole_index(m));
    claim.emplace("filter",
                  std::string("!((forall s:P. forall t:P. F(s) -o ") + kInclusionST +
                      " -o F(t)) * F(" + w + ") * (forall s:P. forall t:P. F(s) * F(t) -o Fm(s,t)))",
                  md.interp);
  }

  PairValue value(const Filter3& f) {
    for (std::size_t s = 0; s < f.size(); ++s) md.interp.set_value("F", s, f[s]);
    for (std::size_t r = 0; r < meets.size(); ++r) md.interp.set_value("Fm", r, f[meets[r]]);
    return claim->run({}).value;
  }

  std::size_t m;
  std::vector<Subset3> subs;
  std::vector<std::size_t> meets;
  Model md;
  std::optional<Claim> claim;
};

const std::vector<Filter3>& cached_filters(std::size_t m) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<Filter3>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, enumerate_filters(m)).first;
  return it->second;
}

}  // namespace

PairValue filter_value(std::size_t m, const Filter3& f) {
  if (m == 0) throw Error("carrier must be non-empty");
  validate_collection(m, f);
  FilterModel fm(m);
  return fm.value(f);
}

bool is_filter(std::size_t m, const Filter3& f) { return filter_value(m, f).pos; }

std::vector<Filter3> enumerate_filters(std::size_t m) {
  if (m == 0 || m > 2) throw BudgetError("filter enumeration supports carriers of size 1 or 2");
  FilterModel fm(m);
  const std::size_t n = fm.subs.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<Filter3> out;
  Filter3 f(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = from_digit(static_cast<int>(c % 3));
      c /= 3;
    }
    if (fm.value(f).pos) out.push_back(f);
  }
  return out;
}

Filter3 filter_from_family(std::size_t m, std::span<const Subset3> family) {
  if (m == 0) throw Error("carrier must be non-empty");
  if (family.size() > 4) throw BudgetError("filter_from_family supports at most 4 sets");
  for (const auto& u : family) {
    if (u.size() != m) throw Error("family member has the wrong carrier size");
  }
  const auto subs = all_subsets(m);
  Model md;
  carrier_sorts(md, m, subs);
  md.sort("C", subset_count(family.size()));
  md.atom("Up", {"X", "C"}, [&](const Tuple& t) { return par_multiset(family, t[1], t[0]); });
  return tabulate("exists c:C. forall x:X. ~mem(x,s) -o Up(x,c)", md.interp, {{"s", "P"}});
}

namespace {

constexpr const char* kCompactText =
    "forall f:Fl. Fil(f) -o ~Fc(f,s) -o (exists x:X. mem(x,s) * !(forall t:P. F(f,t) -o cl(x,t)))";

Model compactness_model(const InteriorOperator& op, std::span<const Filter3> filters,
                        const std::vector<Subset3>& subs) {
  validate_operator(op);
  for (const auto& f : filters) validate_collection(op.m, f);
  Model md;
  carrier_sorts(md, op.m, subs);
  md.sort("Fl", filters.size());
  md.atom("Fil", {"Fl"}, [](const Tuple&) { return kProven; });
  md.atom("F", {"Fl", "P"}, [&](const Tuple& t) { return filters[t[0]][t[1]]; });
  md.atom("Fc", {"Fl", "P"},
          [&](const Tuple& t) { return filters[t[0]][subset_index(complement(subs[t[1]]))]; });
  md.atom("cl", {"X", "P"}, [&](const Tuple& t) { return closure(op, subs[t[1]])[t[0]]; });
  return md;
}

}  // namespace

PairValue compactness_value(const InteriorOperator& op, const Subset3& s,
                            std::span<const Filter3> filters) {
  if (s.size() != op.m) throw Error("subset has the wrong carrier size");
  const auto subs = all_subsets(op.m);
  Model md = compactness_model(op, filters, subs);
  PairProgram prog(parse_affine(kCompactText), md.interp, {{"s", "P"}});
  const std::array<std::size_t, 1> arg{subset_index(s)};
  return prog.eval(arg);
}

std::vector<PairValue> compactness_table(const InteriorOperator& op,
                                         std::span<const Filter3> filters) {
  const auto subs = all_subsets(op.m);
  Model md = compactness_model(op, filters, subs);
  return tabulate(kCompactText, md.interp, {{"s", "P"}});
}

bool is_compact_bruteforce(const InteriorOperator& op, const Subset3& s) {
  return compactness_value(op, s, cached_filters(op.m)).pos;
}

std::vector<InteriorOperator> operator_pool(std::size_t m, std::size_t random_count,
                                            std::uint64_t seed) {
  if (m == 0 || m > 3) throw BudgetError("operator pools support carriers of size 1 to 3");
  const auto subs = all_subsets(m);
  std::vector<InteriorOperator> out;
  std::set<std::vector<std::size_t>> seen;
  auto add = [&](const InteriorOperator& op) {
    std::vector<std::size_t> key;
    for (const auto& s : op.table) key.push_back(subset_index(s));
    if (seen.insert(key).second) out.push_back(op);
  };
  auto from_indices = [&](const Tuple& t) {
    InteriorOperator op;
    op.m = m;
    for (std::size_t i : t) op.table.push_back(subs[i]);
    return op;
  };
  if (m == 1) {
    for_tuples(std::vector<std::size_t>(subs.size(), subs.size()),
               [&](const Tuple& t) { add(from_indices(t)); });
    return out;
  }
  add(InteriorOperator::identity(m));
  for (const auto& c : subs) add(InteriorOperator::constant(m, c));
  for (std::size_t k = 0; k <= 2; ++k) {
    for_tuples(std::vector<std::size_t>(k, subs.size()), [&](const Tuple& t) {
      BasisFamily b{m, {}};
      for (std::size_t i : t) b.sets.push_back(subs[i]);
      add(basis_interior(b));
    });
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
  for (std::size_t r = 0; r < random_count; ++r) {
    Tuple t(subs.size());
    for (auto& i : t) i = pick(rng);
    add(from_indices(t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// compactness propositions

namespace {

struct CarrierData {
  std::size_t m;
  std::vector<Subset3> subs;
  std::vector<Filter3> filters;
  std::vector<InteriorOperator> ops;
  std::vector<std::vector<PairValue>> cpt;  // per operator, per subset
};

void closed_and_invariance(const CarrierData& d, TopoReport& rep) {
  const auto& subs = d.subs;
  const std::size_t n = subs.size();
  Model md;
  carrier_sorts(md, d.m, subs);
  md.atom("cl", {"X", "P"}, [](const Tuple&) { return kRefuted; });
  md.atom("cpt", {"P"}, [](const Tuple&) { return kRefuted; });
  md.atom("cptm", {"P", "P"}, [](const Tuple&) { return kRefuted; });
  md.atom("cptt", {"P", "P"}, [](const Tuple&) { return kRefuted; });
  const std::string w = std::to_string(whole_index(d.m));
  const std::string closed = "(forall x:X. cl(x,c) -o mem(x,c))";
  Claim inv("compact_invariance",
            std::string("forall s:P. forall t:P. cpt(s) -o ") + kInclusionST + " * " +
                kInclusionTS + " -o cpt(t)",
            md.interp);
  Claim add("closed_in_compact_additive",
            "forall s:P. forall c:P. cpt(s) -o " + closed + " -o (forall x:X. mem(x," + w +
                ") -o mem(x,c) + ~mem(x,c)) -o cptm(s,c)",
            md.interp);
  Claim mul("closed_in_compact_multiplicative",
            "forall s:P. forall c:P. cpt(s) -o " + closed +
                " -o !(forall x:X. mem(x,c) -o mem(x,c) * mem(x,c)) -o cptt(s,c)",
            md.interp);
  Verdict vi = aggregate_verdict("compact_invariance");
  Verdict va = aggregate_verdict("closed_in_compact_additive");
  Verdict vm = aggregate_verdict("closed_in_compact_multiplicative");
  const SubsetSorts labels{{"P", d.m}};
  for (std::size_t o = 0; o < d.ops.size(); ++o) {
    const auto& op = d.ops[o];
    const auto& cpt = d.cpt[o];
    md.refill("cl", [&](const Tuple& t) { return closure(op, subs[t[1]])[t[0]]; });
    md.refill("cpt", [&](const Tuple& t) { return cpt[t[0]]; });
    md.refill("cptm", [&](const Tuple& t) {
      return cpt[subset_index(meet(subs[t[0]], subs[t[1]]))];
    });
    md.refill("cptt", [&](const Tuple& t) {
      return cpt[subset_index(mult_intersection(subs[t[0]], subs[t[1]]))];
    });
    const std::string ctx = "m=" + std::to_string(d.m) + " int=" + operator_code(op);
    absorb(vi, inv.run(labels), ctx);
    absorb(va, add.run(labels), ctx);
    absorb(vm, mul.run(labels), ctx);
  }
  (void)n;
  rep.verdicts.push_back(vi);
  rep.verdicts.push_back(va);
  rep.verdicts.push_back(vm);
}

void finite_subcover(const CarrierData& d, std::size_t max_family, TopoReport& rep) {
  const auto& subs = d.subs;
  Verdict agg = aggregate_verdict("finite_subcover");
  Verdict lemma = aggregate_verdict("isfilter_lemma");
  const SubsetSorts labels{{"P", d.m}};
  FilterModel fm(d.m);
  for (std::size_t k = 0; k <= max_family; ++k) {
    Model md;
    carrier_sorts(md, d.m, subs);
    md.sort("A", k);
    md.sort("C", subset_count(k));
    md.atom("cpt", {"P"}, [](const Tuple&) { return kRefuted; });
    md.atom("IU", {"X", "A"}, [](const Tuple&) { return kRefuted; });
    md.atom("Up", {"X", "C"}, [](const Tuple&) { return kRefuted; });
    Claim claim("finite_subcover",
                "forall s:P. cpt(s) -o (forall x:X. mem(x,s) -o ?(exists a:A. IU(x,a))) -o "
                "(exists c:C. forall x:X. mem(x,s) -o Up(x,c))",
                md.interp);
    for_tuples(std::vector<std::size_t>(k, subs.size()), [&](const Tuple& t) {
      std::vector<Subset3> fam;
      for (std::size_t i : t) fam.push_back(subs[i]);
      md.refill("Up", [&](const Tuple& u) { return par_multiset(fam, u[1], u[0]); });
      const std::string fctx = "m=" + std::to_string(d.m) + " U=" + family_code(fam);
      {
        const Filter3 f = filter_from_family(d.m, fam);
        Verdict one;
        one.value = fm.value(f);
        one.pass = one.value.pos;
        if (!one.pass) {
          std::string code;
          for (PairValue v : f) code += to_char(v);
          one.counterexample = "F=" + code;
        }
        absorb(lemma, one, fctx);
      }
      for (std::size_t o = 0; o < d.ops.size(); ++o) {
        const auto& op = d.ops[o];
        md.refill("cpt", [&](const Tuple& u) { return d.cpt[o][u[0]]; });
        md.refill("IU", [&](const Tuple& u) { return op(fam[u[1]])[u[0]]; });
        absorb(agg, claim.run(labels), fctx + " int=" + operator_code(op));
      }
    });
  }
  rep.verdicts.push_back(lemma);
  rep.verdicts.push_back(agg);
}

void image_of_compact(const CarrierData& dx, const CarrierData& dy, Verdict& agg) {
  const std::size_t mx = dx.m, my = dy.m;
  Model md;
  carrier_sorts(md, mx, dx.subs);
  md.sort("Y", my);
  md.sort("Q", dy.subs.size());
  md.atom("memY", {"Y", "Q"}, [&](const Tuple& t) { return dy.subs[t[1]][t[0]]; });
  md.atom("pre", {"X", "Q"}, [](const Tuple&) { return kRefuted; });
  md.atom("preI", {"X", "Q"}, [](const Tuple&) { return kRefuted; });
  md.atom("Ipre", {"X", "Q"}, [](const Tuple&) { return kRefuted; });
  md.atom("cptX", {"P"}, [](const Tuple&) { return kRefuted; });
  md.atom("cptYimg", {"P"}, [](const Tuple&) { return kRefuted; });
  PairProgram image(
      parse_affine("forall t:Q. (forall x:X. mem(x,s) -o pre(x,t)) -o memY(y,t)"), md.interp,
      {{"s", "P"}, {"y", "Y"}});
  Claim claim("image_of_compact",
              "forall s:P. !(forall t:Q. forall x:X. preI(x,t) -o Ipre(x,t)) -o cptX(s) -o "
              "cptYimg(s)",
              md.interp);
  const SubsetSorts labels{{"P", mx}, {"Q", my}};
  for_tuples(std::vector<std::size_t>(mx, my), [&](const Tuple& f) {
    md.refill("pre", [&](const Tuple& t) { return dy.subs[t[1]][f[t[0]]]; });
    // f(s) is itself the table of a formula over (s, y).
    std::vector<std::size_t> img(dx.subs.size());
    for (std::size_t s = 0; s < dx.subs.size(); ++s) {
      Subset3 v(my);
      for (std::size_t y = 0; y < my; ++y) {
        const std::array<std::size_t, 2> args{s, y};
        v[y] = image.eval(args);
      }
      img[s] = subset_index(v);
    }
    // f^{-1}(t) per t.
    std::vector<Subset3> inv(dy.subs.size(), Subset3(mx));
    for (std::size_t t = 0; t < dy.subs.size(); ++t) {
      for (std::size_t x = 0; x < mx; ++x) inv[t][x] = dy.subs[t][f[x]];
    }
    std::string fcode;
    for (std::size_t x = 0; x < mx; ++x) fcode += std::to_string(f[x]);
    for (std::size_t ox = 0; ox < dx.ops.size(); ++ox) {
      const auto& opx = dx.ops[ox];
      md.refill("Ipre", [&](const Tuple& t) { return opx(inv[t[1]])[t[0]]; });
      md.refill("cptX", [&](const Tuple& t) { return dx.cpt[ox][t[0]]; });
      for (std::size_t oy = 0; oy < dy.ops.size(); ++oy) {
        const auto& opy = dy.ops[oy];
        md.refill("preI", [&](const Tuple& t) { return opy.table[t[1]][f[t[0]]]; });
        md.refill("cptYimg", [&](const Tuple& t) { return dy.cpt[oy][img[t[0]]]; });
        absorb(agg, claim.run(labels),
               "f=" + fcode + " intX=" + operator_code(opx) + " intY=" + operator_code(opy));
      }
    }
  });
}

}  // namespace

TopoReport check_compactness_props(const CompactnessOptions& options) {
  if (options.max_carrier == 0 || options.max_carrier > 2) {
    throw BudgetError("compactness checks support carriers of size 1 or 2");
  }
  if (options.max_family > 3) throw BudgetError("compactness checks support families of size <= 3");
  std::vector<CarrierData> data;
  for (std::size_t m = 1; m <= options.max_carrier; ++m) {
    CarrierData d{m, all_subsets(m), cached_filters(m),
                  operator_pool(m, options.random_operators, options.seed + m), {}};
    for (const auto& op : d.ops) d.cpt.push_back(compactness_table(op, d.filters));
    data.push_back(std::move(d));
  }

  TopoReport rep;
  Verdict lemma = aggregate_verdict("isfilter_lemma");
  Verdict inv = aggregate_verdict("compact_invariance");
  Verdict cover = aggregate_verdict("finite_subcover");
  Verdict add = aggregate_verdict("closed_in_compact_additive");
  Verdict mul = aggregate_verdict("closed_in_compact_multiplicative");
  auto merge = [](Verdict& into, const Verdict& part) {
    if (into.pass && !part.pass) {
      into.pass = false;
      into.value = part.value;
      into.counterexample = part.counterexample;
    }
    into.instances += part.instances;
    into.failures += part.failures;
  };
  for (const auto& d : data) {
    TopoReport part;
    finite_subcover(d, options.max_family, part);
    closed_and_invariance(d, part);
    merge(lemma, *part.find("isfilter_lemma"));
    merge(cover, *part.find("finite_subcover"));
    merge(inv, *part.find("compact_invariance"));
    merge(add, *part.find("closed_in_compact_additive"));
    merge(mul, *part.find("closed_in_compact_multiplicative"));
  }
  rep.verdicts = {lemma, inv, cover, add, mul};
  if (options.image) {
    Verdict img = aggregate_verdict("image_of_compact");
    for (const auto& dx : data) {
      for (const auto& dy : data) image_of_compact(dx, dy, img);
    }
    rep.verdicts.push_back(img);
  }
  return rep;
}

}  // namespace affinekit
