#include "affinekit/subsets.hpp"

#include "affinekit/error.hpp"

namespace affinekit {

std::size_t subset_index(const Subset3& s) {
  std::size_t idx = 0;
  for (std::size_t i = s.size(); i-- > 0;) idx = idx * 3 + static_cast<std::size_t>(to_digit(s[i]));
  return idx;
}

Subset3 subset_from_index(std::size_t index, std::size_t m) {
  Subset3 s(m);
  for (std::size_t i = 0; i < m; ++i) {
    s[i] = from_digit(static_cast<int>(index % 3));
    index /= 3;
  }
  return s;
}

std::size_t subset_count(std::size_t m) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < m; ++i) n *= 3;
  return n;
}

std::string subset_code(const Subset3& s) {
  std::string out;
  for (auto v : s) out += to_char(v);
  return out;
}

Subset3 subset_from_code(std::string_view code) {
  Subset3 s;
  for (char c : code) {
    switch (c) {
      case 'p': s.push_back(kProven); break;
      case 'n': s.push_back(kRefuted); break;
      case 'u': s.push_back(kUndetermined); break;
      default: throw Error("invalid subset code '" + std::string(code) + "'");
    }
  }
  return s;
}

Subset3 whole(std::size_t m) { return Subset3(m, kProven); }
Subset3 nothing(std::size_t m) { return Subset3(m, kRefuted); }
Subset3 unknown(std::size_t m) { return Subset3(m, kUndetermined); }

namespace {

template <class Op>
Subset3 zip(const Subset3& u, const Subset3& v, Op op) {
  if (u.size() != v.size()) throw Error("subset carrier mismatch");
  Subset3 out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = op(u[i], v[i]);
  return out;
}

template <class Op>
Subset3 map(const Subset3& u, Op op) {
  Subset3 out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = op(u[i]);
  return out;
}

}  // namespace

Subset3 mult_union(const Subset3& u, const Subset3& v) {
  return zip(u, v, [](PairValue a, PairValue b) { return par(a, b); });
}
Subset3 mult_intersection(const Subset3& u, const Subset3& v) {
  return zip(u, v, [](PairValue a, PairValue b) { return tensor(a, b); });
}
Subset3 meet(const Subset3& u, const Subset3& v) {
  return zip(u, v, [](PairValue a, PairValue b) { return with(a, b); });
}
Subset3 join(const Subset3& u, const Subset3& v) {
  return zip(u, v, [](PairValue a, PairValue b) { return plus(a, b); });
}
Subset3 complement(const Subset3& u) {
  return map(u, [](PairValue a) { return negate(a); });
}
Subset3 of_course(const Subset3& u) {
  return map(u, [](PairValue a) { return of_course(a); });
}
Subset3 why_not(const Subset3& u) {
  return map(u, [](PairValue a) { return why_not(a); });
}

PairValue inclusion_value(const Subset3& u, const Subset3& v) {
  if (u.size() != v.size()) throw Error("subset carrier mismatch");
  PairValue acc = kProven;
  for (std::size_t i = 0; i < u.size(); ++i) {
    PairValue x = lollipop(u[i], v[i]);
    acc = {acc.pos && x.pos, acc.neg || x.neg};
  }
  return acc;
}

bool included(const Subset3& u, const Subset3& v) { return inclusion_value(u, v).pos; }

bool equivalent(const Subset3& u, const Subset3& v) { return included(u, v) && included(v, u); }

}  // namespace affinekit
