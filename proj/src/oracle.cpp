#include <array>
#include <functional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "affinekit/antithesis.hpp"
#include "affinekit/error.hpp"
#include "affinekit/semantics.hpp"

namespace affinekit {
namespace {

using F = AffineFormula;

// Byte code of one comparison: bit0 pair.pos, bit1 pair.neg, bit2 classical
// pos, bit3 classical neg. Agreement means the low and high halves coincide.
inline std::uint8_t encode(PairValue v, bool cp, bool cn) {
  return static_cast<std::uint8_t>(v.pos | (v.neg << 1) | (cp << 2) | (cn << 3));
}
inline bool agrees(std::uint8_t b) { return (b & 3) == (b >> 2); }

const std::array<std::function<F(F, F)>, 5> kBinary = {
    [](F a, F b) { return F::tensor(a, b); }, [](F a, F b) { return F::par(a, b); },
    [](F a, F b) { return F::with(a, b); },   [](F a, F b) { return F::plus(a, b); },
    [](F a, F b) { return F::lollipop(a, b); },
};

class Oracle {
 public:
  explicit Oracle(const OracleOptions& o) : opt_(o) {
    if (o.max_depth < 0 || o.max_depth > 3) throw BudgetError("oracle depth must be in 0..3");
    if (o.atom_count < 0 || o.atom_count > 2) throw BudgetError("oracle atom count must be in 0..2");
    if (o.carrier_size < 0 || o.carrier_size > 2) throw BudgetError("oracle carrier must be in 0..2");

    const bool unary_atoms = o.carrier_size > 0;
    const std::size_t width = unary_atoms ? static_cast<std::size_t>(o.carrier_size) : 1;
    if (unary_atoms) {
      model_.add_sort("S", width);
      free_ = {{"x", "S"}};
      envs_ = width;
    }
    for (int k = 0; k < o.atom_count; ++k) {
      std::string name(1, static_cast<char>('p' + k));
      names_.push_back(name);
      std::vector<SortName> sorts;
      if (unary_atoms) sorts.push_back("S");
      model_.add_atom(name, sorts, std::vector<PairValue>(width, kUndetermined));
      leaves_.push_back(unary_atoms ? F::atom(name, {"x"}) : F::atom(name));
    }
    leaves_.push_back(F::top());
    leaves_.push_back(F::bot());

    unary_ = {[](F a) { return F::lin_neg(a); }, [](F a) { return F::of_course(a); },
              [](F a) { return F::why_not(a); }};
    if (unary_atoms) {
      unary_.push_back([](F a) { return F::forall("x", "S", a); });
      unary_.push_back([](F a) { return F::exists("x", "S", a); });
    }

    cells_ = static_cast<std::size_t>(o.atom_count) * width;
    assignments_ = 1;
    for (std::size_t c = 0; c < cells_; ++c) assignments_ *= 3;
    entries_ = assignments_ * envs_;
  }

  OracleReport run() {
    report_.assignments = assignments_;
    report_.formulas = count_formulas(opt_.max_depth);

    if (opt_.max_depth == 0) {
      for (const auto& f : leaves_) check_explicit(f);
      return report_;
    }

    // Pool: every formula of depth < max_depth, evaluated explicitly.
    std::vector<F> pool = leaves_;
    for (int d = 1; d < opt_.max_depth; ++d) pool = grow(pool);
    std::vector<std::vector<std::uint8_t>> sigs;
    sigs.reserve(pool.size());
    for (const auto& f : pool) sigs.push_back(check_explicit(f));

    // Unary-rooted formulas at the top depth.
    for (const auto& f : pool) {
      for (const auto& u : unary_) check_explicit(u(f));
    }

    const std::size_t n = pool.size();
    if (kBinary.size() * n * n <= kExplicitBinaryLimit) {
      for (const auto& b : kBinary) {
        for (const auto& g : pool) {
          for (const auto& h : pool) check_explicit(b(g, h));
        }
      }
    } else {
      check_binary_by_class(pool, sigs);
      std::mt19937_64 rng(opt_.seed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      std::uniform_int_distribution<std::size_t> op(0, kBinary.size() - 1);
      for (std::size_t s = 0; s < opt_.random_samples; ++s) {
        const auto& b = kBinary[op(rng)];
        check_explicit(b(pool[pick(rng)], pool[pick(rng)]));
      }
    }
    return report_;
  }

 private:
  static constexpr std::size_t kExplicitBinaryLimit = 200000;

  std::uint64_t count_formulas(int depth) const {
    std::uint64_t c = leaves_.size();
    for (int d = 1; d <= depth; ++d) {
      c = leaves_.size() + unary_.size() * c + kBinary.size() * c * c;
    }
    return c;
  }

  std::vector<F> grow(const std::vector<F>& prev) const {
    std::vector<F> next = leaves_;
    next.reserve(leaves_.size() + unary_.size() * prev.size() +
                 kBinary.size() * prev.size() * prev.size());
    for (const auto& u : unary_) {
      for (const auto& f : prev) next.push_back(u(f));
    }
    for (const auto& b : kBinary) {
      for (const auto& g : prev) {
        for (const auto& h : prev) next.push_back(b(g, h));
      }
    }
    return next;
  }

  void load(std::size_t assignment) {
    const std::size_t width = cells_ / (names_.empty() ? 1 : names_.size());
    std::size_t a = assignment;
    for (const auto& name : names_) {
      for (std::size_t r = 0; r < width; ++r) {
        model_.set_value(name, r, from_digit(static_cast<int>(a % 3)));
        a /= 3;
      }
    }
  }

  std::string describe(std::size_t entry) {
    const std::size_t assignment = entry / envs_;
    load(assignment);
    std::string out;
    for (const auto& name : names_) {
      if (!out.empty()) out += ", ";
      const auto& values = model_.atom(name).values;
      out += name + "=";
      if (opt_.carrier_size > 0) out += "[";
      for (std::size_t r = 0; r < values.size(); ++r) {
        if (r) out += ",";
        out += to_word(values[r]);
      }
      if (opt_.carrier_size > 0) out += "]";
    }
    if (opt_.carrier_size > 0) out += "; x=" + std::to_string(entry % envs_);
    return out;
  }

  void record(const std::string& formula, std::size_t entry, std::uint8_t b) {
    if (report_.first_counterexample) return;
    report_.first_counterexample = OracleCounterexample{
        formula, describe(entry), PairValue{bool(b & 1), bool(b & 2)}, bool(b & 4), bool(b & 8)};
  }

  std::vector<std::uint8_t> check_explicit(const F& f) {
    const TranslationPair t = translate(f);
    PairProgram pp(f, model_, free_);
    ClassicalProgram cp(t.pos, model_, free_);
    ClassicalProgram cn(t.neg, model_, free_);
    std::vector<std::uint8_t> sig(entries_);
    bool bad = false;
    std::size_t first_bad = 0;
    for (std::size_t a = 0; a < assignments_; ++a) {
      load(a);
      for (std::size_t e = 0; e < envs_; ++e) {
        const std::size_t env[1] = {e};
        std::span<const std::size_t> values(env, free_.size());
        const std::uint8_t b = encode(pp.eval(values), cp.eval(values), cn.eval(values));
        const std::size_t i = a * envs_ + e;
        sig[i] = b;
        if (!agrees(b) && !bad) {
          bad = true;
          first_bad = i;
        }
      }
    }
    ++report_.explicit_formulas;
    report_.checks += entries_;
    if (bad) {
      ++report_.mismatches;
      record(render(f), first_bad, sig[first_bad]);
      load(0);
    }
    return sig;
  }

  // Binary-rooted formulas op(g, h) with g, h from the pool. Both evaluators
  // are compositional, so the result of op(g, h) on each (assignment,
  // environment) entry depends only on the entries of g and h there. Formulas
  // are grouped by their entry vector; each pair of classes is checked once
  // through the translated template op(a, b) on fresh propositional atoms.
  void check_binary_by_class(const std::vector<F>& pool,
                             const std::vector<std::vector<std::uint8_t>>& sigs) {
    struct Class {
      std::size_t rep;
      std::uint64_t count;
    };
    std::unordered_map<std::string, std::size_t> index;
    std::vector<Class> classes;
    std::vector<const std::vector<std::uint8_t>*> class_sig;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      std::string key(sigs[i].begin(), sigs[i].end());
      auto [it, fresh] = index.emplace(std::move(key), classes.size());
      if (fresh) {
        classes.push_back({i, 0});
        class_sig.push_back(&sigs[i]);
      }
      ++classes[it->second].count;
    }
    report_.classes = classes.size();

    Interpretation tm;
    tm.add_atom("a", {}, {kUndetermined});
    tm.add_atom("b", {}, {kUndetermined});
    const F a = F::atom("a");
    const F b = F::atom("b");

    for (const auto& op : kBinary) {
      const F templ = op(a, b);
      const TranslationPair t = translate(templ);
      PairProgram pp(templ, tm);
      ClassicalProgram cp(t.pos, tm);
      ClassicalProgram cn(t.neg, tm);
      // table[x][y]: outcome of the template when a carries entry byte x and b
      // carries y. The pair program reads the pair half, the classical
      // programs read the classical half of the same byte.
      std::array<std::array<std::uint8_t, 16>, 16> table{};
      for (int x = 0; x < 16; ++x) {
        for (int y = 0; y < 16; ++y) {
          tm.set_value("a", 0, {bool(x & 1), bool(x & 2)});
          tm.set_value("b", 0, {bool(y & 1), bool(y & 2)});
          const PairValue pv = pp.eval();
          tm.set_value("a", 0, {bool(x & 4), bool(x & 8)});
          tm.set_value("b", 0, {bool(y & 4), bool(y & 8)});
          table[x][y] = encode(pv, cp.eval(), cn.eval());
        }
      }

      for (std::size_t gi = 0; gi < classes.size(); ++gi) {
        const auto& sg = *class_sig[gi];
        for (std::size_t hi = 0; hi < classes.size(); ++hi) {
          const auto& sh = *class_sig[hi];
          const std::uint64_t members = classes[gi].count * classes[hi].count;
          report_.checks += members * entries_;
          for (std::size_t i = 0; i < entries_; ++i) {
            const std::uint8_t r = table[sg[i]][sh[i]];
            if (!agrees(r)) {
              report_.mismatches += members;
              record(render(op(pool[classes[gi].rep], pool[classes[hi].rep])), i, r);
              break;
            }
          }
        }
      }
    }
  }

  OracleOptions opt_;
  Interpretation model_;
  std::vector<FreeVar> free_;
  std::vector<std::string> names_;
  std::vector<F> leaves_;
  std::vector<std::function<F(F)>> unary_;
  std::size_t cells_ = 0;
  std::size_t assignments_ = 1;
  std::size_t envs_ = 1;
  std::size_t entries_ = 1;
  OracleReport report_;
};

}  // namespace

OracleReport equivalence_oracle(const OracleOptions& options) { return Oracle(options).run(); }

}  // namespace affinekit
