// Command-line driver for the dnalg library: braid word algebra, closures,
// bracket/Jones invariants, rational tangles, genome rearrangement
// distances, recombination series, the bundled knot table, and the
// reproduction suite.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include "dnalg/coxeter.hpp"
#include "dnalg/genome.hpp"
#include "dnalg/jones.hpp"
#include "dnalg/knot_table.hpp"
#include "dnalg/recombination.hpp"
#include "dnalg/reproduce.hpp"
#include "dnalg/svg.hpp"
#include "dnalg/tangle_solve.hpp"
#include "dnalg/tl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace dnalg;
using nlohmann::json;

namespace {

std::vector<std::int64_t> parse_int_list(const std::string &text) {
  std::vector<std::int64_t> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    out.push_back(std::stoll(tok, &pos));
    if (pos != tok.size()) throw TangleError("bad integer '" + tok + "'");
  }
  if (out.empty()) throw TangleError("empty integer list");
  return out;
}

std::vector<int> parse_small_int_list(const std::string &text) {
  std::vector<int> out;
  for (auto v : parse_int_list(text)) out.push_back(static_cast<int>(v));
  return out;
}

json key_json(const JonesKey &key) {
  json polys = json::array();
  for (const auto &p : key.polys) polys.push_back(p.str());
  return polys;
}

json id_json(const Identification &id) {
  json j;
  j["found"] = id.found;
  j["name"] = id.str();
  j["crossings"] = id.crossings;
  j["components"] = id.components;
  j["jones"] = key_json(id.key);
  return j;
}

GeneratorSet parse_gens(const std::string &spec) {
  if (spec == "all") return GeneratorSet::all();
  if (spec == "terminus") return GeneratorSet::terminus_fixing();
  if (spec == "terminus-sym") return GeneratorSet::terminus_symmetric();
  if (spec == "swap2") return GeneratorSet::adjacent_pair_unsigned();
  if (spec.rfind("maxlen=", 0) == 0) return GeneratorSet::max_length(std::stoi(spec.substr(7)));
  throw GenomeError("unknown generator set '" + spec + "'");
}

void print_series(std::ostream &os, const std::vector<ProductReport> &series,
                  const std::string &format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto &r : series) {
      json j;
      j["round"] = r.round;
      j["word"] = r.word.str();
      j["components"] = r.components;
      j["identification"] = id_json(r.id);
      j["marked_status"] = r.marked_status;
      arr.push_back(j);
    }
    os << arr.dump(2) << "\n";
  } else {
    for (const auto &r : series) {
      os << "round " << r.round << ": " << r.id.str() << " (" << r.components
         << (r.components == 1 ? " component" : " components");
      if (r.marked_status != "not-marked") os << ", marks " << r.marked_status;
      os << ")\n";
    }
  }
}

int run(int argc, char **argv) {
  CLI::App app{"braid, tangle, and genome rearrangement toolkit"};
  app.require_subcommand(1);
  std::string format = "text";

  // ---- braid ---------------------------------------------------------------
  auto *braid = app.add_subcommand("braid", "generator word algebra");
  braid->require_subcommand(1);
  std::string word_text;
  int strands = 4;
  bool affine = false;
  std::size_t edit_pos = 0;
  std::string edit_mode = "swap";
  auto add_word_opts = [&](CLI::App *cmd, bool positional = true) {
    if (positional) cmd->add_option("word", word_text, "generator word, e.g. \"s1 s2^-1 e3\"");
    cmd->add_option("--n", strands, "strand count")->required();
    cmd->add_flag("--affine", affine, "allow the affine letter x1");
  };
  auto *b_simplify = braid->add_subcommand("simplify", "free reduction");
  add_word_opts(b_simplify);
  auto *b_invert = braid->add_subcommand("invert", "inverse word");
  add_word_opts(b_invert);
  auto *b_mirror = braid->add_subcommand("mirror", "flip all crossing signs");
  add_word_opts(b_mirror);
  auto *b_perm = braid->add_subcommand("perm", "underlying permutation");
  add_word_opts(b_perm);
  auto *b_typeb = braid->add_subcommand("typeb", "type-B quotient and length");
  add_word_opts(b_typeb);
  auto *b_edit = braid->add_subcommand("edit", "single-crossing edit");
  add_word_opts(b_edit);
  b_edit->add_option("--pos", edit_pos, "0-based letter position")->required();
  b_edit->add_option("--mode", edit_mode, "swap or smooth")
      ->check(CLI::IsMember({"swap", "smooth"}));

  // ---- closure -------------------------------------------------------------
  auto *closure = app.add_subcommand("closure", "close a word into a diagram");
  bool use_plat = false, use_trace = false, with_marks = false;
  closure->add_option("word", word_text, "generator word");
  closure->add_option("--n", strands, "strand count")->required();
  closure->add_flag("--plat", use_plat, "plat closure");
  closure->add_flag("--trace", use_trace, "trace closure");
  closure->add_flag("--marks", with_marks, "label bottom arcs 0 and 1 with L and U");
  closure->add_option("--format", format, "text, json, or svg")
      ->check(CLI::IsMember({"text", "json", "svg"}));

  // ---- invariant -----------------------------------------------------------
  auto *invariant = app.add_subcommand("invariant", "bracket and Jones invariants");
  invariant->require_subcommand(1);
  std::string plat_word, trace_word;
  bool have_plat = false, have_trace = false;
  auto add_closure_opts = [&](CLI::App *cmd) {
    cmd->add_option("--plat", plat_word, "word for plat closure")
        ->trigger_on_parse()
        ->each([&](const std::string &) { have_plat = true; });
    cmd->add_option("--trace", trace_word, "word for trace closure")
        ->trigger_on_parse()
        ->each([&](const std::string &) { have_trace = true; });
    cmd->add_option("--n", strands, "strand count")->required();
    cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto *i_bracket = invariant->add_subcommand("bracket", "Kauffman bracket");
  add_closure_opts(i_bracket);
  auto *i_jones = invariant->add_subcommand("jones", "orientation-class Jones values");
  add_closure_opts(i_jones);
  auto *i_identify = invariant->add_subcommand("identify", "table lookup");
  add_closure_opts(i_identify);

  // ---- tangle --------------------------------------------------------------
  auto *tangle = app.add_subcommand("tangle", "rational tangles");
  tangle->require_subcommand(1);
  std::string vector_text, products_text;
  std::int64_t twist_r = 1, max_entry = 5;
  int max_len = 3, rounds = 4;
  auto *t_fraction = tangle->add_subcommand("fraction", "Conway fraction of a twist vector");
  t_fraction->add_option("vector", vector_text, "comma-separated twists, e.g. \"2,3,2\"")
      ->required();
  auto *t_closure = tangle->add_subcommand("closure", "identify the numerator closure");
  t_closure->add_option("vector", vector_text, "comma-separated twists")->required();
  t_closure->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  auto *t_solve = tangle->add_subcommand("solve", "search for the substrate tangle");
  t_solve
      ->add_option("--products", products_text,
                   "comma-separated product names, first round first")
      ->required();
  t_solve->add_option("--r", twist_r, "twists added per round");
  t_solve->add_option("--max-len", max_len, "twist vector length bound");
  t_solve->add_option("--max-entry", max_entry, "twist entry magnitude bound");

  // ---- genome --------------------------------------------------------------
  auto *genome = app.add_subcommand("genome", "circular genome rearrangement");
  genome->require_subcommand(1);
  std::string genome_a, genome_b, gens_spec = "all", typeb_text, affine_text;
  bool unsigned_genome = false;
  auto *g_distance = genome->add_subcommand("distance", "inversion distance by BFS");
  g_distance->add_option("from", genome_a, "genome, e.g. \"1,-4,-3,-2,5,6*\"")->required();
  g_distance->add_option("to", genome_b, "target genome")->required();
  g_distance->add_option("--gens", gens_spec,
                         "all, maxlen=L, terminus, terminus-sym, or swap2");
  g_distance->add_flag("--unsigned", unsigned_genome, "unsigned regions");
  auto *g_canonical = genome->add_subcommand("canonical", "dihedral canonical form");
  g_canonical->add_option("genome", genome_a, "genome text")->required();
  g_canonical->add_flag("--unsigned", unsigned_genome, "unsigned regions");
  auto *g_length = genome->add_subcommand("length", "Coxeter length");
  g_length->add_option("--typeb", typeb_text, "signed permutation, e.g. \"-1,2,3\"");
  g_length->add_option("--affine", affine_text, "affine window, e.g. \"2,1,3\"");
  auto *g_breakpoint = genome->add_subcommand("breakpoint", "cycle lower bound");
  g_breakpoint->add_option("from", genome_a, "signed permutation")->required();
  g_breakpoint->add_option("to", genome_b, "signed permutation")->required();

  // ---- recombine -----------------------------------------------------------
  auto *recombine = app.add_subcommand("recombine", "processive recombination series");
  recombine->require_subcommand(1);
  std::string system_name = "tn3", substrate_text, prefix_text = "s2";
  int parity_k = 2, parity_imax = 6;
  auto *r_run = recombine->add_subcommand("run", "bundled system series");
  r_run->add_option("--system", system_name, "tn3, tn3-alt, gin, xer, or cre");
  r_run->add_option("--rounds", rounds, "number of rounds");
  r_run->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto *r_parity = recombine->add_subcommand("parity", "parity table");
  r_parity->add_option("--k", parity_k, "crossing parameter");
  r_parity->add_option("--imax", parity_imax, "rounds per family");
  auto *r_custom = recombine->add_subcommand("custom", "user-specified system");
  r_custom->add_option("--substrate", substrate_text, "substrate word")->required();
  r_custom->add_option("--prefix", prefix_text, "one generator added per round");
  r_custom->add_option("--rounds", rounds, "number of rounds");
  r_custom->add_option("--n", strands, "strand count");
  r_custom->add_flag("--marks", with_marks, "track the marked bottom arcs");
  r_custom->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // ---- table ---------------------------------------------------------------
  auto *table = app.add_subcommand("table", "bundled knot table");
  table->require_subcommand(1);
  std::string out_path;
  auto *tb_build = table->add_subcommand("build", "rebuild and emit JSON");
  tb_build->add_option("--out", out_path, "output file (stdout when absent)");
  table->add_subcommand("verify", "self-verification");
  table->add_subcommand("print", "text listing");

  // ---- reproduce -----------------------------------------------------------
  auto *reproduce = app.add_subcommand("reproduce", "run the full reproduction suite");
  bool corrupt = false;
  reproduce->add_flag("--corrupt-table", corrupt,
                      "fault injection: the table check must fail, others pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    // prints help on --help (exit 0) or the offending flag on usage errors
    return app.exit(e) == 0 ? 0 : 2;
  }

  auto the_word = [&]() { return GenWord::parse(word_text, strands, affine); };

  if (*b_simplify) {
    std::cout << the_word().free_reduce().str() << "\n";
  } else if (*b_invert) {
    std::cout << the_word().invert().str() << "\n";
  } else if (*b_mirror) {
    std::cout << the_word().mirror().str() << "\n";
  } else if (*b_perm) {
    Permutation p = underlying_permutation(the_word());
    for (int i = 0; i < p.size(); ++i) std::cout << (i ? "," : "") << p.images()[i];
    std::cout << "\n";
  } else if (*b_typeb) {
    SignedPermutation p = quotient_to_typeB(the_word());
    for (int i = 0; i < p.size(); ++i) std::cout << (i ? "," : "") << p.images()[i];
    std::cout << "  length " << typeB_length(p) << "\n";
  } else if (*b_edit) {
    auto mode = edit_mode == "swap" ? GenWord::EditMode::Swap : GenWord::EditMode::Smooth;
    std::cout << the_word().edit_crossing(edit_pos, mode).str() << "\n";
  } else if (*closure) {
    if (use_plat == use_trace) throw DiagramError("choose exactly one of --plat and --trace");
    Closure c = use_plat ? Closure::Plat : Closure::Trace;
    GenWord w = the_word();
    PlatMarks marks;
    if (with_marks) {
      marks.bottom[0] = "L";
      marks.bottom[1] = "U";
    }
    PlanarDiagram d = close_word(w, c, with_marks ? &marks : nullptr);
    if (format == "svg") {
      std::cout << emit_svg(w, c, with_marks ? &marks : nullptr);
    } else if (format == "json") {
      std::cout << pd_json(d) << "\n";
    } else {
      std::cout << d.component_count() << " components, " << d.crossing_count()
                << " crossings\n";
      if (with_marks) std::cout << "marks " << marked_status(d) << "\n";
    }
  } else if (*i_bracket || *i_jones || *i_identify) {
    if (have_plat == have_trace)
      throw DiagramError("choose exactly one of --plat and --trace");
    Closure c = have_plat ? Closure::Plat : Closure::Trace;
    GenWord w = GenWord::parse(have_plat ? plat_word : trace_word, strands);
    if (*i_bracket) {
      std::cout << kauffman_bracket(w, c).str() << "\n";
    } else {
      PlanarDiagram d = close_word(w, c);
      JonesKey key = jones_key(d, kauffman_bracket(w, c));
      if (*i_jones) {
        if (format == "json")
          std::cout << key_json(key).dump(2) << "\n";
        else
          std::cout << key.str() << "\n";
      } else {
        Identification id = identify_key(d.component_count(), key);
        if (format == "json")
          std::cout << id_json(id).dump(2) << "\n";
        else if (id.found)
          std::cout << id.str() << "\n";
        else
          std::cout << "unclassified: " << id.components << " components, jones " << key.str()
                    << "\n";
      }
    }
  } else if (*t_fraction) {
    std::cout << RationalTangle(parse_int_list(vector_text)).fraction().str() << "\n";
  } else if (*t_closure) {
    RationalTangle t(parse_int_list(vector_text));
    PlanarDiagram d = numerator_closure(t);
    Identification id = identify_diagram(d);
    if (format == "json") {
      json j = id_json(id);
      j["fraction"] = t.fraction().str();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "fraction " << t.fraction().str() << ": " << id.str() << "\n";
    }
  } else if (*t_solve) {
    std::vector<std::string> observed;
    std::istringstream is(products_text);
    std::string tok;
    while (std::getline(is, tok, ',')) observed.push_back(tok);
    auto cands = solve_processive(observed, twist_r, max_len, max_entry);
    if (cands.empty()) {
      std::cout << "no tangle within bound reproduces the series\n";
    } else {
      for (const auto &c : cands)
        std::cout << c.tangle.str() << "  fraction " << c.fraction.str() << "\n";
    }
  } else if (*g_distance) {
    CircularGenome a = CircularGenome::parse(genome_a, !unsigned_genome);
    CircularGenome b = CircularGenome::parse(genome_b, !unsigned_genome);
    auto d = distance_bfs(a, b, parse_gens(gens_spec));
    if (d)
      std::cout << *d << "\n";
    else
      std::cout << "unreachable\n";
  } else if (*g_canonical) {
    std::cout << dihedral_canonical(CircularGenome::parse(genome_a, !unsigned_genome)).str()
              << "\n";
  } else if (*g_length) {
    if (typeb_text.empty() == affine_text.empty())
      throw GenomeError("choose exactly one of --typeb and --affine");
    if (!typeb_text.empty())
      std::cout << typeB_length(SignedPermutation(parse_small_int_list(typeb_text))) << "\n";
    else
      std::cout << affine_length(AffinePermutation(parse_small_int_list(affine_text))) << "\n";
  } else if (*g_breakpoint) {
    SignedPermutation a(parse_small_int_list(genome_a)), b(parse_small_int_list(genome_b));
    std::cout << breakpoint_cycle_bound(a, b) << "\n";
  } else if (*r_run) {
    print_series(std::cout, processive_series(find_system(system_name), rounds), format);
  } else if (*r_parity) {
    for (const auto &r : parity_report(parity_k, parity_imax))
      std::cout << "k=" << r.k << " i=" << r.i << " "
                << (r.even_family ? "even" : "odd ") << " family: " << r.components
                << (r.components == 1 ? " component " : " components")
                << (r.even_family ? "" : " marks " + r.marked_status)
                << (r.matches_claim ? "  [ok]" : "  [VIOLATION]") << "\n";
  } else if (*r_custom) {
    RecombinationSystem sys("custom", GenWord::parse(substrate_text, strands),
                            GenWord::parse_letter(prefix_text), with_marks);
    print_series(std::cout, processive_series(sys, rounds), format);
  } else if (*tb_build) {
    std::string js = knot_table_json(build_knot_table());
    if (out_path.empty()) {
      std::cout << js;
    } else {
      std::ofstream out(out_path);
      if (!out) throw TangleError("cannot open '" + out_path + "'");
      out << js;
      std::cout << "wrote " << out_path << "\n";
    }
  } else if (table->got_subcommand("verify")) {
    std::string err = verify_table(knot_table());
    if (!err.empty()) {
      std::cerr << "table verification failed: " << err << "\n";
      return 1;
    }
    std::cout << "table verified: " << knot_table().size() << " entries\n";
  } else if (table->got_subcommand("print")) {
    for (const auto &e : knot_table())
      std::cout << e.full_name() << ": " << e.crossings << " crossings, " << e.components
                << (e.components == 1 ? " component" : " components") << ", jones "
                << e.key.str() << "\n";
  } else if (*reproduce) {
    auto results = run_reproduction(corrupt);
    int failed = print_reproduction(std::cout, results);
    if (failed) return 1;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
