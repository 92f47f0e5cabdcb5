#include "leadsolve/trd.hpp"

namespace leadsolve {

Game build_trd(const TrdSpec& spec) {
  if (spec.max_claim < 3) {
    throw StructuralError("max claim must be at least 3, got " + std::to_string(spec.max_claim));
  }
  const std::size_t size = static_cast<std::size_t>(spec.max_claim - kTrdMinClaim + 1);
  RatMatrix A(size, size), B(size, size);
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < size; ++r) {
    const long i = static_cast<long>(r) + kTrdMinClaim;
    labels.push_back(std::to_string(i));
    for (std::size_t c = 0; c < size; ++c) {
      const long j = static_cast<long>(c) + kTrdMinClaim;
      A(r, c) = i < j ? i + 2 : i == j ? i : j - 2;
      B(r, c) = j < i ? j + 2 : j == i ? j : i - 2;
    }
  }
  return Game(std::move(A), std::move(B), labels, labels, "TrD(" + std::to_string(spec.max_claim) + ")");
}

namespace {

TrdCce cce_on_diagonal(const Game& g, const std::vector<int>& claims) {
  RatMatrix z(g.m(), g.n());
  std::string desc;
  const Rational w(1, static_cast<long>(claims.size()));
  for (int c : claims) {
    z(trd_index(c), trd_index(c)) += w;
    desc += (desc.empty() ? "" : " + ") + w.str() + " (" + std::to_string(c) + "," + std::to_string(c) + ")";
  }
  return {desc, z, verify_cce(g, z)};
}

}  // namespace

TrdSolution solve_trd(const TrdSpec& spec, Player leader) {
  if (spec.max_claim > kTrdCapacity) {
    throw CapacityError("max claim " + std::to_string(spec.max_claim) + " exceeds the capacity limit " +
                        std::to_string(kTrdCapacity));
  }
  Game g = build_trd(spec);
  IesdsResult reduction = iesds(g);
  const NashSet equilibria = solve_nash(g, reduction);
  ReportOptions opts;
  opts.skip_degeneracy = true;
  opts.nash = &equilibria;
  LeaderReport report = leader_report(g, leader, opts);
  NashSet twisted = twisted_equilibria(g);
  AscResult asc = classify_asc(g, report.nash, twisted);
  AcoopResult acoop = classify_acoop(g, twisted);
  SaddleSet saddle = saddle_points(g, report.nash, twisted);
  NashSet nash = report.nash;
  TrdSolution s{g,           std::move(reduction),         std::move(nash), std::move(twisted), std::move(saddle),
                std::move(report), std::move(asc), std::move(acoop), {}};
  const int M = spec.max_claim;
  for (int gap : {2, 3}) {
    if (M - gap >= kTrdMinClaim) s.cce.push_back(cce_on_diagonal(g, {M, M - gap}));
  }
  s.cce.push_back(cce_on_diagonal(g, {M}));
  return s;
}

}  // namespace leadsolve
