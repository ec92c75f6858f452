#include "pplateau/sunflower.hpp"

#include <algorithm>
#include <cmath>

namespace pplateau {

SunflowerScenario build_sunflower(const SunflowerSpec& spec) {
  const int k = spec.petals;
  if (k < 1) throw DomainError("sunflower needs at least one petal");
  if (static_cast<int>(spec.petal_phi.size()) != k)
    throw DomainError("sunflower: " + std::to_string(spec.petal_phi.size()) + " petal pairings given for " +
                      std::to_string(k) + " petals");
  if (!spec.petal_areas.empty() && static_cast<int>(spec.petal_areas.size()) != k)
    throw DomainError("sunflower: petal area count does not match petal count");
  if (!spec.arc_lengths.empty() && static_cast<int>(spec.arc_lengths.size()) != k)
    throw DomainError("sunflower: arc length count does not match petal count");
  for (int i : spec.dropped_arcs)
    if (i < 0 || i >= k) throw DomainError("sunflower: dropped arc index out of range");

  const Scalar inner = spec.inner_length ? *spec.inner_length : Scalar::inexact(2 * M_PI);
  const Scalar edge = inner / Scalar(k);
  auto positive = [](const Scalar& v, const char* what) {
    if (v.sign() <= 0) throw DomainError(std::string("sunflower: ") + what + " must be positive");
  };
  positive(spec.disk_area, "disk area");
  positive(inner, "inner circle length");

  ComplexBuilder builder(2);
  for (int i = 0; i < k; ++i) builder.add_cell(0, "v" + std::to_string(i + 1), Scalar(1));
  SunflowerScenario s;
  for (int i = 0; i < k; ++i) s.inner_edges.push_back(builder.add_cell(1, "e" + std::to_string(i + 1), edge, "inner"));
  for (int i = 0; i < k; ++i) {
    const Scalar len = spec.arc_lengths.empty() ? edge * Scalar::inexact(M_PI / 2) : spec.arc_lengths[i];
    positive(len, "arc length");
    s.arcs.push_back(builder.add_cell(1, "o" + std::to_string(i + 1), len, "arc"));
  }
  for (int i = 0; i < k; ++i) {
    const std::size_t tail = i;
    const std::size_t head = (i + 1) % k;
    for (std::size_t e : {s.inner_edges[i], s.arcs[i]}) {
      builder.add_face(1, e, head, 1);
      builder.add_face(1, e, tail, -1);
    }
  }
  s.disk = builder.add_cell(2, "D", spec.disk_area, "disk");
  for (int i = 0; i < k; ++i) {
    const Scalar area = spec.petal_areas.empty() ? Scalar(1) : spec.petal_areas[i];
    positive(area, "petal area");
    s.petal_cells.push_back(builder.add_cell(2, "P" + std::to_string(i + 1), area, "petal"));
  }
  for (int i = 0; i < k; ++i) {
    builder.add_face(2, s.disk, s.inner_edges[i], 1);
    builder.add_face(2, s.petal_cells[i], s.arcs[i], 1);
    builder.add_face(2, s.petal_cells[i], s.inner_edges[i], -1);
  }
  s.complex = builder.build();

  s.b = Chain(s.complex, 1);
  for (int i = 0; i < k; ++i) {
    s.b.set(s.inner_edges[i], -2);
    if (!spec.dropped_arcs.count(i)) s.b.set(s.arcs[i], 1);
  }
  // Spread ∂D(Φ) evenly over the inner edges; each arc then absorbs its
  // petal's pairing.
  s.phi = Cochain(s.complex, 1);
  const Scalar share = spec.disk_pairing / Scalar(k);
  for (int i = 0; i < k; ++i) {
    s.phi.set(s.inner_edges[i], share);
    s.phi.set(s.arcs[i], spec.petal_phi[i] + share);
  }
  s.petal_phi = spec.petal_phi;
  s.disk_pairing = spec.disk_pairing;
  s.dropped_arcs = spec.dropped_arcs;
  return s;
}

Chain SunflowerScenario::candidate(std::int64_t a, const std::vector<std::int64_t>& c) const {
  Chain t(complex, 2);
  t.set(disk, a);
  for (std::size_t i = 0; i < c.size(); ++i) t.set(petal_cells.at(i), c[i]);
  return t;
}

Problem SunflowerScenario::problem(const Integrand& h) const { return make_problem(b, phi, std::nullopt, h); }

PetalClasses classify_petals(const SunflowerScenario& s) {
  PetalClasses pc;
  for (int i = 0; i < s.petals(); ++i) {
    const int c = compare(s.petal_area(i), s.petal_phi[i]);
    (c < 0 ? pc.negatives : c == 0 ? pc.neutrals : pc.positives).push_back(i);
  }
  return pc;
}

Thresholds thresholds(const SunflowerScenario& s) {
  const PetalClasses pc = classify_petals(s);
  Scalar neg_sum, pos_sum;
  for (int i : pc.negatives)
    if (s.arc_present(i)) neg_sum += s.petal_area(i) - s.petal_phi[i];
  for (int i : pc.positives)
    if (s.arc_present(i)) pos_sum += s.petal_area(i) - s.petal_phi[i];
  const Scalar md = s.disk_area();
  return {-md + neg_sum, -md, md + pos_sum};
}

ClosedForm closed_form_solutions(const SunflowerScenario& s, const Integrand& h, std::size_t max_minimizers) {
  if (h.kind() != Integrand::Kind::identity)
    throw DomainError("closed-form sunflower solutions exist only for the identity integrand; use the solver");
  ClosedForm out;
  out.classes = classify_petals(s);
  out.lambdas = thresholds(s);
  const Thresholds& l = out.lambdas;
  const Scalar& d = s.disk_pairing;
  const int k = s.petals();

  if (d <= l.lambda_m2) out.regimes.push_back(-2);
  if (l.lambda_m2 <= d && d <= l.lambda_m1) out.regimes.push_back(-1);
  if (l.lambda_m1 <= d && (s.partial() || d <= l.lambda_0)) out.regimes.push_back(0);
  if (!s.partial() && d >= l.lambda_0) out.regimes.push_back(1);

  std::vector<int> free_neutrals;
  for (int i : out.classes.neutrals)
    if (s.arc_present(i)) free_neutrals.push_back(i);

  std::vector<Chain> family;
  for (int a : out.regimes) {
    if (a == -2) {
      family.push_back(s.candidate(-2, std::vector<std::int64_t>(k, 0)));
    } else if (a == 1) {
      family.push_back(s.candidate(1, std::vector<std::int64_t>(k, 1)));
    } else {
      std::vector<std::int64_t> c(k, 0);
      for (int i : out.classes.negatives)
        if (s.arc_present(i)) c[i] = 1;
      const std::size_t subsets = std::size_t{1} << free_neutrals.size();
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        auto ci = c;
        for (std::size_t j = 0; j < free_neutrals.size(); ++j)
          if (mask >> j & 1) ci[free_neutrals[j]] = 1;
        family.push_back(s.candidate(a, ci));
      }
    }
  }
  std::sort(family.begin(), family.end(), lex_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  Solution& sol = out.solution;
  sol.truncated = family.size() > max_minimizers;
  if (sol.truncated) family.resize(max_minimizers);
  sol.minimizers = std::move(family);
  sol.value = energy(sol.minimizers.front(), s.phi, h);
  return out;
}

}  // namespace pplateau
