#include "cellx/lattice.hpp"

#include <algorithm>

#include "cellx/errors.hpp"

namespace cellx {

namespace {

void require_same_ring(const ChainComplex& x, const ChainComplex& a) {
  if (!(x.ring() == a.ring()))
    throw UsageError("ring mismatch: " + x.ring().to_string() + " vs " + a.ring().to_string());
}

std::string pair_text(const std::optional<Interval>& iv) {
  if (!iv) return "none";
  return "(" + std::to_string(iv->start) + "," + std::to_string(iv->span) + ")";
}

}  // namespace

std::optional<Interval> min_pair(const ChainComplex& x) {
  const auto d = decompose(x);
  if (d.intervals.empty()) return std::nullopt;
  return *std::min_element(d.intervals.begin(), d.intervals.end());
}

std::optional<int> bottom_degree(const ChainComplex& x) {
  const auto m = minimize(x).minimal;
  for (int n = 0; n < m.length(); ++n)
    if (m.rank(n) != 0) return n;
  return std::nullopt;
}

bool generator_relation(int i, int j, int i2, int j2) {
  return Interval{i, j} <= Interval{i2, j2};
}

Verdict is_cellular(const ChainComplex& x, const ChainComplex& a) {
  require_same_ring(x, a);
  Verdict v;
  v.min_pair_x = min_pair(x);
  v.min_pair_a = min_pair(a);
  if (!v.min_pair_x) {
    // Acyclic complexes are cellular over everything.
    v.holds = true;
    v.rule = "x-contractible";
  } else if (!v.min_pair_a) {
    // The class generated by 0 is exactly the acyclic complexes.
    v.holds = false;
    v.rule = "a-contractible";
  } else {
    v.holds = *v.min_pair_a <= *v.min_pair_x;
    v.rule = "lex";
  }
  return v;
}

Verdict is_acyclic_over(const ChainComplex& x, const ChainComplex& a) {
  require_same_ring(x, a);
  Verdict v;
  v.bottom_x = bottom_degree(x);
  v.bottom_a = bottom_degree(a);
  if (!v.bottom_x) {
    v.holds = true;
    v.rule = "x-contractible";
  } else if (!v.bottom_a) {
    v.holds = false;
    v.rule = "a-contractible";
  } else {
    v.holds = *v.bottom_x >= *v.bottom_a;
    v.rule = "support";
  }
  return v;
}

std::string explain(const Verdict& v) {
  if (v.rule == "x-contractible") return "X is contractible, so the relation holds for every A";
  if (v.rule == "a-contractible")
    return "A is contractible and X is not, so X is not in the class of acyclic complexes";
  if (v.rule == "lex")
    return "min_pair(A) = " + pair_text(v.min_pair_a) + (v.holds ? " <= " : " > ") +
           "min_pair(X) = " + pair_text(v.min_pair_x);
  return "bottom(X) = " + std::to_string(*v.bottom_x) + (v.holds ? " >= " : " < ") +
         "bottom(A) = " + std::to_string(*v.bottom_a);
}

}  // namespace cellx
