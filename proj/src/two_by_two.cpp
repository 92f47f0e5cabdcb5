#include "leadsolve/two_by_two.hpp"

#include <algorithm>
#include <stdexcept>

namespace leadsolve {

const char* to_string(XlRelation r) {
  switch (r) {
    case XlRelation::Subset: return "subset";
    case XlRelation::Equal: return "equal";
    case XlRelation::ExistsOutside: return "exists-outside";
  }
  return "?";
}

const char* to_string(Prop6Case c) {
  switch (c) {
    case Prop6Case::A: return "A";
    case Prop6Case::B_i: return "B(i)";
    case Prop6Case::B_ii: return "B(ii)";
    case Prop6Case::B_iii: return "B(iii)";
  }
  return "?";
}

const char* to_string(FollowerVerdict v) {
  switch (v) {
    case FollowerVerdict::FollowerWorse: return "follower-worse";
    case FollowerVerdict::FollowerNotWorse: return "follower-not-worse";
    case FollowerVerdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

struct Entries {
  Rational a1, a2, a3, a4, b1, b2, b3, b4;
};

void require_2x2(const Game& g) {
  if (g.m() != 2 || g.n() != 2) {
    throw StructuralError("two_by_two: game is " + std::to_string(g.m()) + "x" + std::to_string(g.n()) +
                          ", expected 2x2");
  }
}

Entries entries(const Game& g) {
  require_2x2(g);
  const auto& A = g.A();
  const auto& B = g.B();
  return {A(0, 0), A(0, 1), A(1, 0), A(1, 1), B(0, 0), B(0, 1), B(1, 0), B(1, 1)};
}

std::optional<Rational> ratio_in_unit(const Rational& num, const Rational& den) {
  if (den.is_zero()) return std::nullopt;
  Rational r = num / den;
  if (r.sign() < 0 || r > Rational(1)) return std::nullopt;
  return r;
}

Rational row_mix(const RatMatrix& M, const Rational& t, std::size_t j) {
  return M(0, j) * (Rational(1) - t) + M(1, j) * t;
}

bool degenerate_for_I(const Entries& e) { return e.b1 == e.b2 || e.b3 == e.b4; }
bool degenerate_for_II(const Entries& e) { return e.a1 == e.a3 || e.a2 == e.a4; }

}  // namespace

Equalizers equalizers(const Game& g) {
  const Entries e = entries(g);
  Equalizers out;
  const Rational den_d = e.b1 - e.b2 + e.b4 - e.b3;
  out.d = ratio_in_unit(e.b1 - e.b2, den_d);
  if (out.d) {
    out.xd = MixedStrategy(Player::I, {Rational(1) - *out.d, *out.d});
    out.beta_d = (e.b1 * e.b4 - e.b2 * e.b3) / den_d;
  }
  out.c = ratio_in_unit(e.a1 - e.a3, e.a1 - e.a2 + e.a4 - e.a3);
  if (out.c) out.yc = MixedStrategy(Player::II, {Rational(1) - *out.c, *out.c});
  return out;
}

ClosedFormValues closed_form_values(const Game& g, Player leader) {
  const Game v = g.as_leader(leader);
  const Entries e = entries(v);
  const Rational p = e.b1 - e.b2;
  const Rational q = e.b3 - e.b4;
  ClosedFormValues out;
  if (p.is_zero() && q.is_zero()) {
    // Payoff equivalent columns: alpha^L is the leader's matrix game value.
    std::vector<Rational> ts{Rational(0), Rational(1)};
    if (auto t = ratio_in_unit(e.a1 - e.a2, e.a1 - e.a2 + e.a4 - e.a3)) ts.push_back(*t);
    bool first = true;
    for (const auto& t : ts) {
      Rational worst = std::min(row_mix(v.A(), t, 0), row_mix(v.A(), t, 1));
      if (first || worst > out.alpha_low) out.alpha_low = worst;
      first = false;
    }
    out.alpha_high = std::max({e.a1, e.a2, e.a3, e.a4});
    return out;
  }
  std::vector<Rational> pts{Rational(0), Rational(1)};
  if (auto d = ratio_in_unit(p, p - q)) pts.push_back(*d);
  bool have_low = false, have_high = false;
  for (std::size_t j = 0; j < 2; ++j) {
    std::vector<Rational> region;
    for (const auto& t : pts) {
      const Rational s = p + (q - p) * t;  // beta(x, t3) - beta(x, t4)
      if (j == 0 ? s.sign() >= 0 : s.sign() <= 0) region.push_back(t);
    }
    if (region.empty()) continue;
    const bool full = std::any_of(region.begin(), region.end(), [&](const Rational& t) { return t != region.front(); });
    for (const auto& t : region) {
      const Rational a = row_mix(v.A(), t, j);
      if (!have_high || a > out.alpha_high) out.alpha_high = a;
      have_high = true;
      if (full && (!have_low || a > out.alpha_low)) {
        out.alpha_low = a;
        have_low = true;
      }
    }
  }
  return out;
}

LemmaConditions lemma_conditions(const Game& g, Player leader) {
  const Game v = g.as_leader(leader);
  const Entries e = entries(v);
  LemmaConditions out;
  out.degenerate_for_leader = degenerate_for_I(e);
  const bool first_dominates = e.a1 > e.a3 && e.a2 > e.a4;
  const bool second_dominates = e.a3 > e.a1 && e.a4 > e.a2;
  out.ell1 = first_dominates || second_dominates;
  if (out.ell1) {
    const std::size_t r = first_dominates ? 0 : 1;
    if (v.B()(r, 0) != v.B()(r, 1)) {
      const std::size_t jN = v.B()(r, 0) > v.B()(r, 1) ? 0 : 1;
      out.alpha_N = v.A()(r, jN);
      out.ell2_evaluated = true;
      if (auto d = equalizers(v).d) {
        const Rational best = std::max(row_mix(v.A(), *d, 0), row_mix(v.A(), *d, 1));
        out.ell2 = best >= *out.alpha_N;
        out.ell2_strict = best > *out.alpha_N;
      }
    }
  }
  out.conclusion = !out.degenerate_for_leader && out.ell1 && out.ell2 ? XlRelation::ExistsOutside : XlRelation::Subset;
  return out;
}

Prop6Case proposition6_case(const Game& g) {
  const Entries e = entries(g);
  if (degenerate_for_I(e) || degenerate_for_II(e)) return Prop6Case::A;
  if (lemma_conditions(g, Player::I).conclusion == XlRelation::ExistsOutside) return Prop6Case::B_i;
  if (lemma_conditions(g, Player::II).conclusion == XlRelation::ExistsOutside) return Prop6Case::B_ii;
  return Prop6Case::B_iii;
}

FollowerComparison follower_comparison(const Game& g, Player leader) {
  const Entries e0 = entries(g);
  FollowerComparison out;
  if (degenerate_for_I(e0) || degenerate_for_II(e0)) return out;
  const LemmaConditions lemma = lemma_conditions(g, leader);
  if (!(lemma.ell1 && lemma.ell2)) return out;
  const Game v = g.as_leader(leader);
  std::vector<std::size_t> rows{0, 1}, cols{0, 1};
  if (v.A()(0, 0) > v.A()(1, 0)) {
    std::swap(rows[0], rows[1]);
    out.rows_swapped = true;
  }
  if (v.B()(rows[0], 0) < v.B()(rows[0], 1)) {
    std::swap(cols[0], cols[1]);
    out.cols_swapped = true;
  }
  const Entries e = entries(v.restricted(rows, cols));
  if (!(e.a3 > e.a1 && e.a4 > e.a2 && e.b1 > e.b2 && e.b3 < e.b4)) {
    throw std::logic_error("follower_comparison: canonical rearrangement failed");
  }
  const Rational beta_d = (e.b1 * e.b4 - e.b2 * e.b3) / (e.b1 + e.b4 - e.b2 - e.b3);
  out.beta_N = e.b4;
  out.beta_F = beta_d;
  out.v_B = std::min({e.b1, beta_d, e.b4});
  const bool worse = *out.beta_F < *out.beta_N;
  out.verdict = worse ? FollowerVerdict::FollowerWorse : FollowerVerdict::FollowerNotWorse;
  out.biconditional_holds = worse == (*out.v_B < *out.beta_N);
  out.unique = lemma.ell2_strict;
  return out;
}

GenericLeaderView generic_leader_view(const Game& g, Player leader, std::size_t enum_bound) {
  require_2x2(g);
  ReportOptions opts;
  opts.enum_bound = enum_bound;
  const LeaderReport report = leader_report(g, leader, opts);
  GenericLeaderView out;
  out.alpha_low = report.low.value;
  out.alpha_high = report.high.value;
  out.XL = commitment_optimal_set_2row(g, leader, report);

  // NE(X) membership only changes where the follower's best reply set does,
  // X^L membership at its interval ends; test those points and the midpoints.
  const Game v = g.as_leader(leader);
  std::vector<Rational> pts{Rational(0), Rational(1)};
  {
    const Rational p = v.B()(0, 0) - v.B()(0, 1);
    const Rational q = v.B()(1, 0) - v.B()(1, 1);
    if (auto t = ratio_in_unit(p, p - q)) pts.push_back(*t);
  }
  for (const auto& iv : out.XL) {
    pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t base = pts.size();
  for (std::size_t i = 0; i + 1 < base; ++i) pts.push_back((pts[i] + pts[i + 1]) / Rational(2));
  bool outside = false, equal = true;
  for (const auto& t : pts) {
    const bool in_xl = std::any_of(out.XL.begin(), out.XL.end(), [&](const WeightInterval& iv) { return iv.contains(t); });
    const bool in_ne = is_nash_strategy(g, MixedStrategy(leader, {Rational(1) - t, t}));
    outside = outside || (in_xl && !in_ne);
    equal = equal && in_xl == in_ne;
  }
  out.relation = outside ? XlRelation::ExistsOutside : equal ? XlRelation::Equal : XlRelation::Subset;

  if (out.relation == XlRelation::ExistsOutside && degenerate(g, enum_bound) == DegeneracyStatus::NonDegenerate &&
      report.nash.complete && report.nash.equilibria.size() == 1) {
    const auto& ne = report.nash.equilibria.front();
    out.beta_N = leader == Player::I ? ne.beta : ne.alpha;
    for (const auto& iv : out.XL) {
      for (const auto& t : {iv.lo, iv.hi}) {
        const Rational b = std::max(row_mix(v.B(), t, 0), row_mix(v.B(), t, 1));
        if (!out.beta_F || b < *out.beta_F) out.beta_F = b;
      }
    }
    out.follower = *out.beta_F < *out.beta_N ? FollowerVerdict::FollowerWorse : FollowerVerdict::FollowerNotWorse;
  }
  return out;
}

Prop6Case generic_case(const Game& g, const GenericLeaderView& I, const GenericLeaderView& II, std::size_t enum_bound) {
  if (degenerate_for(g, Player::I, enum_bound).degenerate() || degenerate_for(g, Player::II, enum_bound).degenerate()) {
    return Prop6Case::A;
  }
  if (I.relation == XlRelation::ExistsOutside) return Prop6Case::B_i;
  if (II.relation == XlRelation::ExistsOutside) return Prop6Case::B_ii;
  return Prop6Case::B_iii;
}

TwoByTwoReport analyze_two_by_two(const Game& g, std::size_t enum_bound) {
  require_2x2(g);
  TwoByTwoReport r;
  r.eq = equalizers(g);
  for (Player p : {Player::I, Player::II}) {
    TwoByTwoLeader& l = p == Player::I ? r.leader_I : r.leader_II;
    l.leader = p;
    l.closed = closed_form_values(g, p);
    l.lemma = lemma_conditions(g, p);
    l.follower = follower_comparison(g, p);
    l.generic = generic_leader_view(g, p, enum_bound);
  }
  r.prop6_case = proposition6_case(g);
  r.generic_prop6_case = generic_case(g, r.leader_I.generic, r.leader_II.generic, enum_bound);

  const XlRelation rel_I = r.leader_I.generic.relation;
  const XlRelation rel_II = r.leader_II.generic.relation;
  switch (r.prop6_case) {
    case Prop6Case::A:
    case Prop6Case::B_iii:
      r.claims_hold = rel_I != XlRelation::ExistsOutside && rel_II != XlRelation::ExistsOutside;
      break;
    case Prop6Case::B_i:
      r.claims_hold = rel_I == XlRelation::ExistsOutside && rel_II == XlRelation::Equal;
      break;
    case Prop6Case::B_ii:
      r.claims_hold = rel_II == XlRelation::ExistsOutside && rel_I == XlRelation::Equal;
      break;
  }

  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      r.agrees = false;
      r.disagreements.push_back(what);
    }
  };
  for (const TwoByTwoLeader* l : {&r.leader_I, &r.leader_II}) {
    const std::string who = std::string("leader ") + to_string(l->leader) + ": ";
    expect(l->closed.alpha_low == l->generic.alpha_low, who + "alpha^L");
    expect(l->closed.alpha_high == l->generic.alpha_high, who + "alpha^H");
    expect((l->lemma.conclusion == XlRelation::ExistsOutside) == (l->generic.relation == XlRelation::ExistsOutside),
           who + "X^L vs NE(X)");
    expect(l->follower.verdict == l->generic.follower, who + "follower verdict");
    expect(l->follower.biconditional_holds, who + "beta^F < beta^N iff v_B < beta^N");
  }
  expect(r.prop6_case == r.generic_prop6_case, "case label");
  expect(r.claims_hold, "case claims");
  return r;
}

}  // namespace leadsolve
