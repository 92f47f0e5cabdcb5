#include "leadsolve/report.hpp"

#include <algorithm>
#include <sstream>

namespace leadsolve {
namespace {

using Json = Document;

void put(Json& d, const std::string& key, const Rational& r) {
  d[key] = r.str();
  d[key + "_approx"] = r.to_double();
}

void put(Json& d, const std::string& key, const std::optional<Rational>& r) {
  if (r) {
    put(d, key, *r);
  } else {
    d[key] = nullptr;
    d[key + "_approx"] = nullptr;
  }
}

std::string opt_str(const std::optional<Rational>& r) { return r ? r->str() : "?"; }

std::string prefixed(const Game& g, Player p, std::size_t s) {
  return (p == Player::I ? "s" : "t") + g.label(p, s);
}

std::string player_value_name(Player p) { return p == Player::I ? "v_A" : "v_B"; }

Json labels_json(const Game& g, Player p, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (std::size_t s : idx) out.push_back(label_json(g.label(p, s)));
  return out;
}

Json all_labels(const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(label_json(l));
  return out;
}

Json strategy_json(const Game& g, const MixedStrategy& s) {
  Json d;
  d["player"] = to_string(s.owner());
  Json sup = Json::array();
  for (std::size_t i : s.support()) {
    Json e;
    e["strategy"] = label_json(g.label(s.owner(), i));
    put(e, "p", s[i]);
    sup.push_back(std::move(e));
  }
  d["support"] = std::move(sup);
  d["pure"] = s.is_pure();
  return d;
}

Json equilibrium_json(const Game& g, const NashEquilibrium& e) {
  Json d;
  d["x"] = strategy_json(g, e.x);
  d["y"] = strategy_json(g, e.y);
  put(d, "alpha", e.alpha);
  put(d, "beta", e.beta);
  return d;
}

Json game_json(const Game& g) {
  Json d;
  d["name"] = g.name();
  d["m"] = g.m();
  d["n"] = g.n();
  d["rows"] = all_labels(g.row_labels());
  d["cols"] = all_labels(g.col_labels());
  return d;
}

Json header(const std::string& command) {
  Json d;
  d["schema"] = kReportSchema;
  d["command"] = command;
  return d;
}

std::pair<std::optional<Rational>, std::optional<Rational>> beta_range(const NashSet& nash) {
  if (!nash.checked || nash.equilibria.empty()) return {};
  Rational lo = nash.equilibria.front().beta, hi = lo;
  for (const auto& e : nash.equilibria) {
    lo = std::min(lo, e.beta);
    hi = std::max(hi, e.beta);
  }
  return {lo, hi};
}

Json nash_json(const Game& g, const NashSet& nash) {
  Json d;
  d["checked"] = nash.checked;
  d["complete"] = nash.complete;
  d["method"] = to_string(nash.method);
  d["count"] = nash.equilibria.size();
  put(d, "alphaLow", nash.l);
  put(d, "alphaHigh", nash.h);
  auto [blo, bhi] = beta_range(nash);
  put(d, "betaLow", blo);
  put(d, "betaHigh", bhi);
  Json eqs = Json::array();
  for (const auto& e : nash.equilibria) eqs.push_back(equilibrium_json(g, e));
  d["equilibria"] = std::move(eqs);
  d["notes"] = nash.notes;
  return d;
}

Json witness_json(const Game& g, Player leader, const LeaderWitness& w) {
  const Player follower = opponent(leader);
  Json d;
  d["x"] = strategy_json(g, w.x);
  d["region"] = label_json(g.label(follower, w.region));
  d["jF"] = label_json(g.label(follower, w.follower));
  put(d, "alpha", w.leader_payoff);
  put(d, "betaF", w.follower_payoff);
  d["bestReplies"] = labels_json(g, follower, w.best_replies);
  d["tie"] = w.tie;
  return d;
}

Json witnesses_json(const Game& g, Player leader, const CommitmentValue& v) {
  Json out = Json::array();
  for (const auto& w : v.witnesses) out.push_back(witness_json(g, leader, w));
  return out;
}

// Leader fields shared by analyze and trd.
void add_leader_fields(Json& d, const Game& g, const LeaderReport& r) {
  const Player follower = opponent(r.leader);
  d["leader"] = to_string(r.leader);
  d["follower"] = to_string(follower);
  put(d, "alphaL", r.low.value);
  put(d, "alphaH", r.high.value);
  if (!r.low.witnesses.empty()) {
    const LeaderWitness& w = r.low.witnesses.front();
    d["xL"] = strategy_json(g, w.x);
    d["jF"] = label_json(g.label(follower, w.follower));
    put(d, "betaF", w.follower_payoff);
    d["tie"] = w.tie;
  }
  d["degeneracy"] = to_string(r.degeneracy);
  Json mm;
  put(mm, "value", r.maximin.value);
  mm["strategy"] = strategy_json(g, r.maximin.strategy);
  d["maximin"] = std::move(mm);
  put(d, "l", r.nash_l);
  put(d, "h", r.nash_h);
  d["witnessesL"] = witnesses_json(g, r.leader, r.low);
  d["witnessesH"] = witnesses_json(g, r.leader, r.high);
  Json D;
  D["members"] = labels_json(g, follower, r.d.members);
  D["weaklyDominated"] = labels_json(g, follower, r.d.weakly_dominated);
  D["covered"] = labels_json(g, follower, r.d.covered);
  D["matchesCovered"] = r.d.matches_covered;
  D["matchesWeakDominance"] = r.d.matches_weak_dominance;
  d["D"] = std::move(D);
  Json chain;
  chain["ok"] = r.chain_ok;
  chain["line"] = bound_chain_line(r);
  chain["failures"] = r.chain_failures;
  d["chain"] = std::move(chain);
  d["lpsSolved"] = r.low.lps_solved + r.high.lps_solved;
}

std::string witness_text(const Game& g, Player leader, const LeaderWitness& w) {
  const Player follower = opponent(leader);
  std::string s = "x = " + describe(g, w.x) + ", j^F = " + prefixed(g, follower, w.follower) +
                  ", payoffs (" + w.leader_payoff.str() + ", " + w.follower_payoff.str() + ")";
  if (w.tie) {
    s += ", tie: best replies {";
    for (std::size_t k = 0; k < w.best_replies.size(); ++k) {
      s += (k ? ", " : "") + prefixed(g, follower, w.best_replies[k]);
    }
    s += "}, inducing j^F needs an arbitrarily small shift";
  }
  return s;
}

std::string nash_text(const Game& g, const NashSet& nash, const std::string& indent) {
  std::ostringstream os;
  if (!nash.checked) {
    os << indent << "not enumerated (enumeration bound)\n";
    return os.str();
  }
  const std::size_t k = nash.equilibria.size();
  os << indent << k << (nash.complete ? "" : " extreme") << (k == 1 ? " equilibrium (" : " equilibria (")
     << (nash.complete ? "complete, " : "") << to_string(nash.method) << ")\n";
  for (const auto& e : nash.equilibria) {
    os << indent << "  (" << describe(g, e.x) << ", " << describe(g, e.y) << ") payoffs (" << e.alpha << ", "
       << e.beta << ")\n";
  }
  for (const auto& n : nash.notes) os << indent << "  note: " << n << "\n";
  return os.str();
}

std::string leader_text(const Game& g, const LeaderReport& r) {
  std::ostringstream os;
  const Player follower = opponent(r.leader);
  os << "maximin " << player_value_name(r.leader) << " = " << r.maximin.value << " at "
     << describe(g, r.maximin.strategy) << "\n";
  os << "chain: " << bound_chain_line(r) << "\n";
  if (!r.chain_ok) {
    for (const auto& f : r.chain_failures) os << "CHAIN VIOLATION: " << f << "\n";
  }
  os << "alpha^L = " << r.low.value << "\n";
  for (const auto& w : r.low.witnesses) os << "  " << witness_text(g, r.leader, w) << "\n";
  os << "alpha^H = " << r.high.value << "\n";
  for (const auto& w : r.high.witnesses) os << "  " << witness_text(g, r.leader, w) << "\n";
  os << "D = {";
  for (std::size_t k = 0; k < r.d.members.size(); ++k) {
    os << (k ? ", " : "") << prefixed(g, follower, r.d.members[k]);
  }
  os << "}\n";
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string opt_bool(const std::optional<bool>& b) { return b ? yes_no(*b) : "unchecked"; }

Json conditions_json(const SufficientConditions& c) {
  Json d;
  d["cond5"] = c.cond5;
  d["cond6"] = c.cond6;
  d["cond7"] = c.cond7 ? Json(*c.cond7) : Json(nullptr);
  d["condAlt"] = c.cond_alt ? Json(*c.cond_alt) : Json(nullptr);
  return d;
}

Json intervals_json(const std::vector<WeightInterval>& xs) {
  Json out = Json::array();
  for (const auto& iv : xs) {
    Json d;
    put(d, "lo", iv.lo);
    put(d, "hi", iv.hi);
    out.push_back(std::move(d));
  }
  return out;
}

std::string intervals_text(const std::vector<WeightInterval>& xs) {
  if (xs.empty()) return "{}";
  std::string s;
  for (const auto& iv : xs) {
    if (!s.empty()) s += " u ";
    s += iv.lo == iv.hi ? "{" + iv.lo.str() + "}" : "[" + iv.lo.str() + ", " + iv.hi.str() + "]";
  }
  return s;
}

Json two_by_two_leader_json(const TwoByTwoLeader& l) {
  Json d;
  d["leader"] = to_string(l.leader);
  Json closed;
  put(closed, "alphaL", l.closed.alpha_low);
  put(closed, "alphaH", l.closed.alpha_high);
  d["closedForm"] = std::move(closed);
  Json lemma;
  lemma["degenerateForLeader"] = l.lemma.degenerate_for_leader;
  lemma["ell1"] = l.lemma.ell1;
  lemma["ell2Evaluated"] = l.lemma.ell2_evaluated;
  lemma["ell2"] = l.lemma.ell2;
  lemma["ell2Strict"] = l.lemma.ell2_strict;
  put(lemma, "alphaN", l.lemma.alpha_N);
  lemma["conclusion"] = to_string(l.lemma.conclusion);
  d["lemma"] = std::move(lemma);
  Json f;
  f["verdict"] = to_string(l.follower.verdict);
  f["rowsSwapped"] = l.follower.rows_swapped;
  f["colsSwapped"] = l.follower.cols_swapped;
  put(f, "betaF", l.follower.beta_F);
  put(f, "betaN", l.follower.beta_N);
  put(f, "vB", l.follower.v_B);
  f["biconditionalHolds"] = l.follower.biconditional_holds;
  f["unique"] = l.follower.unique;
  d["follower"] = std::move(f);
  Json gen;
  put(gen, "alphaL", l.generic.alpha_low);
  put(gen, "alphaH", l.generic.alpha_high);
  gen["XL"] = intervals_json(l.generic.XL);
  gen["relation"] = to_string(l.generic.relation);
  gen["follower"] = to_string(l.generic.follower);
  put(gen, "betaF", l.generic.beta_F);
  put(gen, "betaN", l.generic.beta_N);
  d["generic"] = std::move(gen);
  return d;
}

Json cce_json(const Game& g, const CceCheck& c) {
  Json d;
  d["ok"] = c.ok;
  put(d, "valueI", c.value_I);
  put(d, "valueII", c.value_II);
  Json wI, wII;
  wI["strategy"] = label_json(g.label(Player::I, c.worst_I.strategy));
  put(wI, "gain", c.worst_I.gain);
  wII["strategy"] = label_json(g.label(Player::II, c.worst_II.strategy));
  put(wII, "gain", c.worst_II.gain);
  d["bestDeviationI"] = std::move(wI);
  d["bestDeviationII"] = std::move(wII);
  return d;
}

std::string cce_text(const Game& g, const CceCheck& c) {
  std::ostringstream os;
  os << (c.ok ? "CCE: yes" : "CCE: no") << ", values (" << c.value_I << ", " << c.value_II << ")"
     << ", best deviations " << prefixed(g, Player::I, c.worst_I.strategy) << " gains " << c.worst_I.gain << ", "
     << prefixed(g, Player::II, c.worst_II.strategy) << " gains " << c.worst_II.gain;
  return os.str();
}

}  // namespace

Document label_json(const std::string& label) {
  const bool numeric = !label.empty() && label.size() <= 15 &&
                       std::all_of(label.begin(), label.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
                       (label == "0" || label.front() != '0');
  if (numeric) return Document(std::stoll(label));
  return Document(label);
}

AnalyzeReport analyze(const Game& g, Player leader, const ReportOptions& opts) {
  AnalyzeReport r{leader_report(g, leader, opts), {}, {}};
  r.pure = check_pure_commitment_nash(g, r.leader);
  r.mixed = completely_mixed_improvement(g, r.leader, opts.enum_bound);
  return r;
}

std::string bound_chain_line(const LeaderReport& r) {
  std::ostringstream os;
  os << player_value_name(r.leader) << " = " << r.maximin.value << " <= l = " << opt_str(r.nash_l)
     << " <= h = " << opt_str(r.nash_h) << " <= ";
  switch (r.degeneracy) {
    case DegeneracyStatus::NonDegenerate:
      os << "alpha^L = alpha^H = " << r.high.value << "  [non-degenerate for the leader]";
      break;
    case DegeneracyStatus::Degenerate:
      os << "alpha^H = " << r.high.value << ";  l <= alpha^L = " << r.low.value
         << " <= alpha^H  [degenerate for the leader]";
      break;
    case DegeneracyStatus::Unchecked:
      os << "alpha^H = " << r.high.value << ";  l <= alpha^L = " << r.low.value
         << " <= alpha^H  [degeneracy unchecked]";
      break;
  }
  if (!r.nash.checked) os << "  [equilibria not enumerated]";
  if (!r.chain_ok) os << "  [VIOLATED]";
  return os.str();
}

Document to_document(const Game& g, const AnalyzeReport& r) {
  Json d = header("analyze");
  d["game"] = game_json(g);
  add_leader_fields(d, g, r.leader);
  d["nash"] = nash_json(g, r.leader.nash);

  Json pure;
  pure["verdict"] = to_string(r.pure.verdict);
  Json items = Json::array();
  const Player follower = opponent(r.leader.leader);
  for (const auto& it : r.pure.items) {
    Json e;
    e["leaderStrategy"] = label_json(g.label(r.leader.leader, it.leader_strategy));
    e["followerStrategy"] = label_json(g.label(follower, it.follower_strategy));
    e["nash"] = it.is_nash;
    items.push_back(std::move(e));
  }
  pure["items"] = std::move(items);
  d["pureCommitment"] = std::move(pure);

  Json mixed;
  mixed["verdict"] = to_string(r.mixed.verdict);
  mixed["reason"] = r.mixed.reason;
  if (r.mixed.equilibrium) {
    const Game view = g.as_leader(r.leader.leader);
    mixed["equilibrium"] = equilibrium_json(view, *r.mixed.equilibrium);
    mixed["j1"] = label_json(g.label(follower, r.mixed.j1));
    put(mixed, "alphaJ1", r.mixed.alpha_j1);
    mixed["followerIndifferent"] = r.mixed.follower_indifferent;
  }
  d["mixedImprovement"] = std::move(mixed);
  return d;
}

Document to_document(const Game& g, const NashSet& nash) {
  Json d = header("nash");
  d["game"] = game_json(g);
  d["nash"] = nash_json(g, nash);
  return d;
}

Document to_document(const Game& g, const ClassificationReport& r) {
  Json d = header("classify");
  d["game"] = game_json(g);
  d["conditionsI"] = conditions_json(r.player_I);
  d["conditionsII"] = conditions_json(r.player_II);
  Json wuc;
  wuc["verdict"] = to_string(r.wuc.verdict);
  wuc["method"] = r.wuc.method;
  if (r.wuc.witness) {
    const WucWitness& w = *r.wuc.witness;
    Json wj;
    wj["deviator"] = to_string(w.deviator);
    wj["first"] = strategy_json(g, w.first);
    wj["second"] = strategy_json(g, w.second);
    wj["other"] = strategy_json(g, w.other);
    put(wj, "ownFirst", w.own_first);
    put(wj, "ownSecond", w.own_second);
    put(wj, "oppFirst", w.opp_first);
    put(wj, "oppSecond", w.opp_second);
    wuc["witness"] = std::move(wj);
  } else {
    wuc["witness"] = nullptr;
  }
  d["wuc"] = std::move(wuc);
  Json asc;
  asc["verdict"] = to_string(r.asc.verdict);
  asc["note"] = r.asc.note;
  d["asc"] = std::move(asc);
  Json acoop;
  acoop["verdict"] = to_string(r.acoop.verdict);
  acoop["note"] = r.acoop.note;
  acoop["paretoOptimal"] = r.acoop.pareto_optimal ? equilibrium_json(g, *r.acoop.pareto_optimal) : Json(nullptr);
  d["acooperative"] = std::move(acoop);
  d["notes"] = r.notes;
  return d;
}

Document to_document(const Game& g, const TwoByTwoReport& r) {
  Json d = header("two-by-two");
  d["game"] = game_json(g);
  Json eq;
  put(eq, "d", r.eq.d);
  put(eq, "c", r.eq.c);
  put(eq, "betaD", r.eq.beta_d);
  eq["xd"] = r.eq.xd ? strategy_json(g, *r.eq.xd) : Json(nullptr);
  eq["yc"] = r.eq.yc ? strategy_json(g, *r.eq.yc) : Json(nullptr);
  d["equalizers"] = std::move(eq);
  d["leaderI"] = two_by_two_leader_json(r.leader_I);
  d["leaderII"] = two_by_two_leader_json(r.leader_II);
  d["case"] = to_string(r.prop6_case);
  d["genericCase"] = to_string(r.generic_prop6_case);
  d["claimsHold"] = r.claims_hold;
  d["agrees"] = r.agrees;
  d["disagreements"] = r.disagreements;
  return d;
}

Document to_document(const TrdSolution& s) {
  const Game& g = s.game;
  Json d = header("trd");
  d["maxClaim"] = std::stoll(g.row_labels().back());
  d["size"] = g.m();
  add_leader_fields(d, g, s.leader);
  Json ie;
  Json rounds = Json::array();
  for (const auto& round : s.iesds.rounds) {
    Json rr = Json::array();
    for (const auto& e : round) {
      Json x;
      x["player"] = to_string(e.player);
      x["strategy"] = label_json(g.label(e.player, e.strategy));
      rr.push_back(std::move(x));
    }
    rounds.push_back(std::move(rr));
  }
  ie["rounds"] = std::move(rounds);
  ie["survivorsI"] = labels_json(g, Player::I, s.iesds.surviving_rows);
  ie["survivorsII"] = labels_json(g, Player::II, s.iesds.surviving_cols);
  d["iesds"] = std::move(ie);
  d["nash"] = nash_json(g, s.nash);
  Json saddle;
  saddle["complete"] = s.saddle.complete;
  Json pts = Json::array();
  for (const auto& e : s.saddle.points) pts.push_back(equilibrium_json(g, e));
  saddle["points"] = std::move(pts);
  d["saddlePoints"] = std::move(saddle);
  d["twistedCount"] = s.twisted.equilibria.size();
  Json asc;
  asc["verdict"] = to_string(s.asc.verdict);
  asc["note"] = s.asc.note;
  d["asc"] = std::move(asc);
  Json acoop;
  acoop["verdict"] = to_string(s.acoop.verdict);
  acoop["note"] = s.acoop.note;
  d["acooperative"] = std::move(acoop);
  Json cce = Json::array();
  for (const auto& c : s.cce) {
    Json e = cce_json(g, c.check);
    e["distribution"] = c.description;
    cce.push_back(std::move(e));
  }
  d["cce"] = std::move(cce);
  return d;
}

Document to_document(const Game& g, const CceCheck& c) {
  Json d = header("verify-cce");
  d["game"] = game_json(g);
  d["cce"] = cce_json(g, c);
  return d;
}

std::string render_text(const Game& g, const AnalyzeReport& r) {
  std::ostringstream os;
  os << "game " << (g.name().empty() ? "(unnamed)" : g.name()) << " (" << g.m() << "x" << g.n()
     << "), leader " << to_string(r.leader.leader) << ", " << to_string(r.leader.degeneracy)
     << " for the leader\n";
  os << "Nash equilibria:\n" << nash_text(g, r.leader.nash, "  ");
  os << leader_text(g, r.leader);
  os << "pure commitment vs NE: " << to_string(r.pure.verdict) << "\n";
  os << "completely mixed NE improvement: " << to_string(r.mixed.verdict);
  if (r.mixed.verdict == MixedImprovementVerdict::Improvement) {
    os << " via " << prefixed(g, opponent(r.leader.leader), r.mixed.j1) << " with leader payoff "
       << r.mixed.alpha_j1 << (r.mixed.follower_indifferent ? ", follower indifferent" : "");
  } else if (!r.mixed.reason.empty()) {
    os << " (" << r.mixed.reason << ")";
  }
  os << "\n";
  return os.str();
}

std::string render_text(const Game& g, const NashSet& nash) {
  std::ostringstream os;
  os << "game " << (g.name().empty() ? "(unnamed)" : g.name()) << " (" << g.m() << "x" << g.n() << ")\n";
  os << "Nash equilibria:\n" << nash_text(g, nash, "  ");
  if (nash.checked) os << "alpha^N in [" << opt_str(nash.l) << ", " << opt_str(nash.h) << "]\n";
  return os.str();
}

std::string render_text(const Game& g, const ClassificationReport& r) {
  std::ostringstream os;
  os << "game " << (g.name().empty() ? "(unnamed)" : g.name()) << " (" << g.m() << "x" << g.n() << ")\n";
  for (Player p : {Player::I, Player::II}) {
    const auto& c = r.conditions(p);
    os << "leader " << to_string(p) << ": cond5 " << yes_no(c.cond5) << ", cond6 " << yes_no(c.cond6)
       << ", cond7 " << opt_bool(c.cond7) << ", alternative " << opt_bool(c.cond_alt) << "\n";
  }
  os << "wuc: " << to_string(r.wuc.verdict) << " (" << r.wuc.method << ")\n";
  if (r.wuc.witness) {
    const WucWitness& w = *r.wuc.witness;
    os << "  player " << to_string(w.deviator) << " moves " << describe(g, w.second) << " -> "
       << describe(g, w.first) << " against " << describe(g, w.other) << ": own " << w.own_second << " -> "
       << w.own_first << ", opponent " << w.opp_second << " -> " << w.opp_first << "\n";
  }
  os << "asc: " << to_string(r.asc.verdict) << (r.asc.note.empty() ? "" : " (" + r.asc.note + ")") << "\n";
  os << "a-cooperative: " << to_string(r.acoop.verdict)
     << (r.acoop.note.empty() ? "" : " (" + r.acoop.note + ")") << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string render_text(const Game& g, const TwoByTwoReport& r) {
  std::ostringstream os;
  os << "game " << (g.name().empty() ? "(unnamed)" : g.name()) << " (2x2)\n";
  os << "equalizers: d = " << opt_str(r.eq.d) << ", c = " << opt_str(r.eq.c) << ", beta^d = "
     << opt_str(r.eq.beta_d) << "\n";
  for (const TwoByTwoLeader* l : {&r.leader_I, &r.leader_II}) {
    os << "leader " << to_string(l->leader) << ": alpha^L = " << l->closed.alpha_low
       << ", alpha^H = " << l->closed.alpha_high << (l->lemma.degenerate_for_leader ? " (degenerate)" : "")
       << "\n";
    os << "  l1 " << yes_no(l->lemma.ell1) << ", l2 "
       << (l->lemma.ell2_evaluated ? yes_no(l->lemma.ell2) : std::string("not evaluated"))
       << ", X^L vs NE(X): " << to_string(l->lemma.conclusion) << " (generic " << to_string(l->generic.relation)
       << ", X^L = " << intervals_text(l->generic.XL) << ")\n";
    os << "  follower: " << to_string(l->follower.verdict);
    if (l->follower.beta_F) os << ", beta^F = " << *l->follower.beta_F;
    if (l->follower.beta_N) os << ", beta^N = " << *l->follower.beta_N;
    if (l->follower.v_B) os << ", v_B = " << *l->follower.v_B;
    os << "\n";
  }
  os << "case " << to_string(r.prop6_case) << " (generic " << to_string(r.generic_prop6_case) << "), claims "
     << (r.claims_hold ? "hold" : "FAIL") << ", pipelines " << (r.agrees ? "agree" : "DISAGREE") << "\n";
  for (const auto& s : r.disagreements) os << "  disagreement: " << s << "\n";
  return os.str();
}

std::string render_text(const TrdSolution& s) {
  const Game& g = s.game;
  std::ostringstream os;
  os << "Traveler's Dilemma, claims " << g.row_labels().front() << ".." << g.row_labels().back() << " ("
     << g.m() << "x" << g.n() << "), leader " << to_string(s.leader.leader) << "\n";
  os << "iesds: " << s.iesds.rounds.size() << " rounds, survivors (";
  for (std::size_t i = 0; i < s.iesds.surviving_rows.size(); ++i) {
    os << (i ? " " : "") << g.label(Player::I, s.iesds.surviving_rows[i]);
  }
  os << "; ";
  for (std::size_t j = 0; j < s.iesds.surviving_cols.size(); ++j) {
    os << (j ? " " : "") << g.label(Player::II, s.iesds.surviving_cols[j]);
  }
  os << ")\n";
  for (std::size_t k = 0; k < s.iesds.rounds.size(); ++k) {
    os << "  round " << k + 1 << ":";
    for (const auto& e : s.iesds.rounds[k]) os << " " << to_string(e.player) << ":" << g.label(e.player, e.strategy);
    os << "\n";
  }
  os << "Nash equilibria:\n" << nash_text(g, s.nash, "  ");
  os << "saddle points: " << s.saddle.points.size() << (s.saddle.complete ? "" : " (incomplete)") << "\n";
  os << "asc: " << to_string(s.asc.verdict) << ", a-cooperative: " << to_string(s.acoop.verdict) << "\n";
  os << leader_text(g, s.leader);
  for (const auto& c : s.cce) os << c.description << ": " << cce_text(g, c.check) << "\n";
  return os.str();
}

std::string render_text(const Game& g, const CceCheck& c) { return cce_text(g, c) + "\n"; }

}  // namespace leadsolve
