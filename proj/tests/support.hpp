#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "affinekit/formula.hpp"
#include "affinekit/heine_borel.hpp"
#include "affinekit/semantics.hpp"

namespace affinekit::testing {

// Random closed formulas over atoms p, q, r. With a carrier the atoms take one
// argument of sort S: the innermost bound variable, or a constant when none is
// in scope. Without a carrier atoms are propositional and quantifiers are off.
struct FormulaGen {
  std::mt19937_64& rng;
  int atoms = 2;
  std::size_t carrier = 0;
  bool folds = false;      // emit BigTensor / BigPar
  double leaf_bias = 0.1;  // chance to stop early below max depth

  AffineFormula gen(int depth) {
    std::vector<std::string> scope;
    return gen(depth, scope);
  }

  AffineFormula gen(int depth, std::vector<std::string>& scope) {
    if (depth <= 1 || coin(leaf_bias)) return leaf(scope);
    const int kinds = 8 + (carrier > 0 ? 2 : 0) + (folds ? 2 : 0);
    const int k = pick(kinds);
    switch (k) {
      case 0: return AffineFormula::tensor(gen(depth - 1, scope), gen(depth - 1, scope));
      case 1: return AffineFormula::par(gen(depth - 1, scope), gen(depth - 1, scope));
      case 2: return AffineFormula::with(gen(depth - 1, scope), gen(depth - 1, scope));
      case 3: return AffineFormula::plus(gen(depth - 1, scope), gen(depth - 1, scope));
      case 4: return AffineFormula::lollipop(gen(depth - 1, scope), gen(depth - 1, scope));
      case 5: return AffineFormula::lin_neg(gen(depth - 1, scope));
      case 6: return AffineFormula::of_course(gen(depth - 1, scope));
      case 7: return AffineFormula::why_not(gen(depth - 1, scope));
      default: break;
    }
    if (carrier > 0 && k < 10) {
      const std::string var = "x" + std::to_string(scope.size());
      scope.push_back(var);
      AffineFormula body = gen(depth - 1, scope);
      scope.pop_back();
      return k == 8 ? AffineFormula::forall(var, "S", body) : AffineFormula::exists(var, "S", body);
    }
    std::vector<AffineFormula> items;
    const int n = pick(4);
    for (int i = 0; i < n; ++i) items.push_back(gen(depth - 1, scope));
    return coin(0.5) ? AffineFormula::big_tensor(items) : AffineFormula::big_par(items);
  }

  AffineFormula leaf(const std::vector<std::string>& scope) {
    const int k = pick(atoms + 2);
    if (k == atoms) return AffineFormula::top();
    if (k == atoms + 1) return AffineFormula::bot();
    const std::string name(1, static_cast<char>('p' + k));
    if (carrier == 0) return AffineFormula::atom(name);
    std::string arg = scope.empty() ? std::to_string(pick(static_cast<int>(carrier)))
                                    : scope[pick(static_cast<int>(scope.size()))];
    return AffineFormula::atom(name, {arg});
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng); }
};

// Every atom gets a uniformly random disjoint value per row.
inline Interpretation random_interpretation(std::mt19937_64& rng, int atoms, std::size_t carrier) {
  Interpretation m;
  std::uniform_int_distribution<int> digit(0, 2);
  if (carrier > 0) m.add_sort("S", carrier);
  for (int k = 0; k < atoms; ++k) {
    const std::string name(1, static_cast<char>('p' + k));
    std::vector<PairValue> values(carrier > 0 ? carrier : 1);
    for (auto& v : values) v = from_digit(digit(rng));
    m.add_atom(name, carrier > 0 ? std::vector<SortName>{"S"} : std::vector<SortName>{}, values);
  }
  return m;
}

inline Rational random_rational(std::mt19937_64& rng, int span = 4, int max_den = 16) {
  const int den = std::uniform_int_distribution<int>(1, max_den)(rng);
  const int num = std::uniform_int_distribution<int>(-span * den, span * den)(rng);
  return Rational(num, den);
}

inline CoverProblem random_cover_problem(std::mt19937_64& rng, std::size_t max_family = 12) {
  CoverProblem p;
  p.a = random_rational(rng);
  p.b = random_rational(rng);
  if (std::bernoulli_distribution(0.9)(rng) && p.b < p.a) std::swap(p.a, p.b);
  const auto n = std::uniform_int_distribution<std::size_t>(0, max_family)(rng);
  for (std::size_t i = 0; i < n; ++i) {
    Rational q = random_rational(rng), r = random_rational(rng);
    if (std::bernoulli_distribution(0.85)(rng) && r < q) std::swap(q, r);
    p.family.push_back({q, r});
  }
  return p;
}

// Coverage of [a,b] decided at the finite endpoints inside [a,b] and the
// midpoints between consecutive ones: between two adjacent probe points no
// interval boundary occurs, so membership is constant there.
inline bool point_covered(const std::vector<OpenInterval>& family,
                          const std::vector<std::size_t>& use, const Rational& x) {
  return std::any_of(use.begin(), use.end(), [&](std::size_t i) {
    return family[i].q < ExtendedRational(x) && ExtendedRational(x) < family[i].r;
  });
}

inline bool brute_covered(const CoverProblem& p, const std::vector<std::size_t>& use) {
  if (p.b < p.a) return true;
  std::vector<Rational> pts{p.a, p.b};
  for (std::size_t i : use) {
    for (const auto& e : {p.family[i].q, p.family[i].r}) {
      if (e.finite() && p.a <= e.value() && e.value() <= p.b) pts.push_back(e.value());
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!point_covered(p.family, use, pts[i])) return false;
    if (i + 1 < pts.size() && !point_covered(p.family, use, midpoint(pts[i], pts[i + 1]))) {
      return false;
    }
  }
  return true;
}

inline bool brute_covered(const CoverProblem& p) {
  std::vector<std::size_t> all(p.family.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return brute_covered(p, all);
}

// Smallest number of intervals covering [a,b], by subset search.
inline std::optional<std::size_t> minimum_subcover(const CoverProblem& p) {
  const std::size_t n = p.family.size();
  std::optional<std::size_t> best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (best && size >= *best) continue;
    std::vector<std::size_t> use;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) use.push_back(i);
    }
    if (brute_covered(p, use)) best = size;
  }
  return best;
}

}  // namespace affinekit::testing
