#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "leadsolve/classify.hpp"
#include "leadsolve/commitment.hpp"
#include "leadsolve/equilibria.hpp"
#include "leadsolve/io.hpp"
#include "leadsolve/report.hpp"
#include "leadsolve/trd.hpp"
#include "leadsolve/two_by_two.hpp"

namespace {

using namespace leadsolve;

// An analysis the tool declines to run as requested (exit 1).
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string game_path;
  std::string z_path;
  std::string leader = "I";
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  int max_claim = 100;
  std::size_t enum_bound = kDefaultEnumBound;
  bool skip_degeneracy = false;
};

Player leader_of(const Flags& f) { return f.leader == "II" ? Player::II : Player::I; }

void emit(const Flags& f, const Document& doc, const std::string& text) {
  if (f.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

void run_analyze(const Flags& f) {
  const Game g = load_game(f.game_path);
  ReportOptions opts;
  opts.enum_bound = f.enum_bound;
  opts.skip_degeneracy = f.skip_degeneracy;
  const AnalyzeReport r = analyze(g, leader_of(f), opts);
  emit(f, to_document(g, r), render_text(g, r));
}

void run_nash(const Flags& f) {
  const Game g = load_game(f.game_path);
  const NashSet nash = solve_nash(g, f.enum_bound);
  if (!nash.checked) {
    throw Refusal("equilibria: m + n = " + std::to_string(g.m() + g.n()) + " after iesds exceeds the enumeration bound " +
                  std::to_string(f.enum_bound) + "; raise --enum-bound to override");
  }
  emit(f, to_document(g, nash), render_text(g, nash));
}

void run_classify(const Flags& f) {
  const Game g = load_game(f.game_path);
  ClassifyOptions opts;
  opts.enum_bound = f.enum_bound;
  opts.wuc.seed = f.seed;
  const ClassificationReport r = classify(g, opts);
  emit(f, to_document(g, r), render_text(g, r));
}

void run_two_by_two(const Flags& f) {
  const Game g = load_game(f.game_path);
  if (g.m() != 2 || g.n() != 2) {
    throw Refusal("two_by_two: " + f.game_path + " is " + std::to_string(g.m()) + "x" + std::to_string(g.n()) +
                  ", the closed forms need a 2x2 game");
  }
  const TwoByTwoReport r = analyze_two_by_two(g, f.enum_bound);
  emit(f, to_document(g, r), render_text(g, r));
}

void run_trd(const Flags& f) {
  const TrdSolution s = solve_trd(TrdSpec{f.max_claim}, leader_of(f));
  emit(f, to_document(s), render_text(s));
}

void run_verify_cce(const Flags& f) {
  const Game g = load_game(f.game_path);
  const RatMatrix z = load_matrix(f.z_path);
  const CceCheck c = verify_cce(g, z);
  emit(f, to_document(g, c), render_text(g, c));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact leadership and commitment analysis of bimatrix games"};
  app.require_subcommand(1);
  Flags f;

  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", f.json, "Print the report document as JSON"); };
  auto bound_flag = [&](CLI::App* c) {
    c->add_option("--enum-bound", f.enum_bound, "Bound on m + n for exponential enumerations")
        ->check(CLI::PositiveNumber);
  };
  auto leader_flag = [&](CLI::App* c) {
    c->add_option("--leader", f.leader, "Leading player")->check(CLI::IsMember({"I", "II"}));
  };
  auto game_arg = [&](CLI::App* c) { c->add_option("game", f.game_path, "Game file")->required(); };

  CLI::App* analyze = app.add_subcommand("analyze", "Commitment values, equilibria and the bound chain");
  game_arg(analyze);
  leader_flag(analyze);
  json_flag(analyze);
  bound_flag(analyze);
  analyze->add_flag("--skip-degeneracy", f.skip_degeneracy, "Do not test the leader for degeneracy");

  CLI::App* nash = app.add_subcommand("nash", "Nash equilibria");
  game_arg(nash);
  json_flag(nash);
  bound_flag(nash);

  CLI::App* cls = app.add_subcommand("classify", "Sufficient conditions and wuc / asc / a-cooperative");
  game_arg(cls);
  json_flag(cls);
  bound_flag(cls);
  cls->add_option("--seed", f.seed, "Seed for sampled wuc triples");

  CLI::App* two = app.add_subcommand("two-by-two", "Closed-form analysis of a 2x2 game");
  game_arg(two);
  json_flag(two);
  bound_flag(two);

  CLI::App* trd = app.add_subcommand("trd", "Traveler's Dilemma");
  trd->add_option("--max", f.max_claim, "Largest claim M (claims 2..M)");
  leader_flag(trd);
  json_flag(trd);

  CLI::App* cce = app.add_subcommand("verify-cce", "Check a distribution over profiles for a CCE");
  game_arg(cce);
  cce->add_option("z", f.z_path, "Distribution file (matrix of rational tokens)")->required();
  json_flag(cce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "leadsolve: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const std::string where = "leadsolve " + app.get_subcommands().front()->get_name() + ": ";
  try {
    if (analyze->parsed()) run_analyze(f);
    if (nash->parsed()) run_nash(f);
    if (cls->parsed()) run_classify(f);
    if (two->parsed()) run_two_by_two(f);
    if (trd->parsed()) run_trd(f);
    if (cce->parsed()) run_verify_cce(f);
  } catch (const Refusal& e) {
    std::cerr << where << e.what() << "\n";
    return 1;
  } catch (const CapacityError& e) {
    std::cerr << where << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << where << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << where << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << where << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
