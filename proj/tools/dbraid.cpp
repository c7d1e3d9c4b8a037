// dbraid: divisor braid group computations on the command line.
//
// Subcommands: centre, normalize, toric, tables, nctorus.
// Exit codes: 0 success, 2 invalid input, 3 structural failure,
// 4 cross-check or table disagreement.

#include "dbraid/braid.hpp"
#include "dbraid/centre.hpp"
#include "dbraid/nctorus.hpp"
#include "dbraid/scheme.hpp"
#include "dbraid/serialize.hpp"
#include "dbraid/tables.hpp"
#include "dbraid/toric.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dbraid;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_structural = 3;
constexpr int exit_disagreement = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::malformed_input, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(errc::malformed_input, path + ": " + e.what());
  }
}

// scheme files: JSON when the first non-space byte is '{', terse text otherwise
NegativeColourScheme load_scheme(const std::string& path, std::vector<std::string>* names) {
  std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return scheme_from_json(parse_json(text, path), names);
  return scheme_from_text(text);
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

struct Options {
  std::string format = "text";
  std::string data_dir = DBRAID_DATA_DIR;
  long long seed = 0;  // reserved for randomized property commands
};

void emit(const Options& opt, const json& payload, const std::string& text) {
  if (opt.format == "json")
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

std::string centre_text(const NegativeColourScheme& s, const FgAbGroup& g) {
  std::ostringstream out;
  out << "colours " << s.r << ", edges " << s.edges.size() << "\n";
  out << "rank " << g.rank() << ", " << group_to_text(g) << "\n";
  if (g.finite()) out << "order " << g.torsion_order() << "\n";
  return out.str();
}

int cmd_centre(const Options& opt, const NegativeColourScheme& s, bool crosscheck,
               bool list_characters) {
  if (!s.very_composite())
    std::cerr << "warning: scheme is not very composite (some k < 2); the braid-group "
                 "reading of the centre is outside the proven range\n";
  FgAbGroup g = centre_group(s);
  json payload = group_to_json(g);
  std::string text = centre_text(s, g);
  int code = exit_ok;
  if (crosscheck) {
    TorsionCheckReport rep = cross_check_torsion(s);
    payload["crosscheck"] = crosscheck_to_json(rep);
    text += std::string("crosscheck ") + (rep.agree ? "agree" : "DISAGREE") + " (exponent " +
            rep.exponent_used.str() + ")\n";
    if (!rep.agree) code = exit_disagreement;
  }
  if (list_characters) {
    json chars = json::array();
    std::ostringstream ct;
    for (const TorusCharacter& chi : characters(g)) {
      chars.push_back(character_to_json(g, chi));
      ct << "character (";
      for (std::size_t i = 0; i < chi.residues.size(); ++i)
        ct << (i ? " " : "") << chi.residues[i];
      ct << ")\n";
    }
    payload["characters"] = std::move(chars);
    text += ct.str();
  }
  emit(opt, payload, text);
  return code;
}

int cmd_normalize(const Options& opt, const std::string& scheme_path, int genus,
                  const std::string& word_text, const std::string& equal_text,
                  const std::string& words_file) {
  std::vector<std::string> warnings;
  NegativeColourScheme s = load_scheme(scheme_path, nullptr);
  BraidContext ctx = make_context(s, genus, &warnings);

  if (!words_file.empty()) {  // one word per line
    std::istringstream lines(read_file(words_file));
    json payload = json::array();
    std::ostringstream text;
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      NormalForm nf = normal_form(ctx, parse_word(line, ctx, &warnings));
      payload.push_back(normal_form_to_json(ctx, nf));
      text << "M = " << nf.homology << " central =";
      for (const auto& c : nf.central) text << " " << c;
      text << "\n";
    }
    print_warnings(warnings);
    emit(opt, payload, text.str());
    return exit_ok;
  }

  BraidWord w = parse_word(word_text, ctx, &warnings);
  NormalForm nf = normal_form(ctx, w);
  print_warnings(warnings);
  json payload = normal_form_to_json(ctx, nf);
  std::ostringstream text;
  text << "M = " << nf.homology << "\ncentral =";
  for (const auto& c : nf.central) text << " " << c;
  text << "\n";
  if (!equal_text.empty()) {
    BraidWord v = parse_word(equal_text, ctx, nullptr);
    bool eq = words_equal(ctx, w, v);
    payload["equal"] = eq;
    text << "equal " << (eq ? "true" : "false") << "\n";
  }
  emit(opt, payload, text.str());
  return exit_ok;
}

int cmd_toric(const Options& opt, const std::string& polytope_path, const std::vector<int>& chops,
              const std::vector<long long>& degrees, bool crosscheck, bool list_characters) {
  std::vector<std::string> warnings;
  DelzantIncidence p = polytope_from_json(parse_json(read_file(polytope_path), polytope_path));
  for (int v : chops) p = chop_vertex(p, v, &warnings);
  print_warnings(warnings);
  auto edges = facet_graph(p);

  if (degrees.empty()) {
    NegativeColourScheme graph_only =
        validate_scheme(p.facets, edges, std::vector<Int>(p.facets, Int(1)));
    GraphAnalysis an = analyze_graph(graph_only);
    json payload;
    payload["facets"] = p.facets;
    payload["vertices"] = p.vertices;
    json ej = json::array();
    for (const auto& e : edges) ej.push_back({e.first, e.second});
    payload["edges"] = std::move(ej);
    payload["components"] = an.components.size();
    payload["bipartite_components"] = an.bipartite_count;
    std::ostringstream text;
    text << "facets " << p.facets << ", vertices " << p.vertices << "\nedges:";
    for (const auto& e : edges) text << " {" << e.first << "," << e.second << "}";
    text << "\ncomponents " << an.components.size() << ", bipartite " << an.bipartite_count
         << "\n";
    emit(opt, payload, text.str());
    return exit_ok;
  }

  std::vector<Int> deg;
  for (long long k : degrees) deg.emplace_back(k);
  NegativeColourScheme s = assign_degrees(edges, p.facets, deg);
  return cmd_centre(opt, s, crosscheck, list_characters);
}

int cmd_tables(const Options& opt, const std::string& which) {
  std::string fixture_path = opt.data_dir + "/tables/" + which + ".json";
  json fixture = parse_json(read_file(fixture_path), fixture_path);
  std::string poly_path = opt.data_dir + "/polytopes/" + fixture.at("polytope").get<std::string>();
  DelzantIncidence base = polytope_from_json(parse_json(read_file(poly_path), poly_path));
  TableSpec spec = load_table(fixture, base);
  TableReport report = run_table(spec);

  json payload;
  payload["table"] = report.name;
  payload["all_match"] = report.all_match;
  payload["searched"] = report.searched;
  json perms = json::object();
  for (const auto& [name, perm] : report.permutations) perms[name] = perm;
  payload["permutations"] = std::move(perms);
  json rows = json::array();
  std::ostringstream text;
  text << "table " << report.name << "\n";
  for (const auto& [name, perm] : report.permutations) {
    text << "labelling " << name << ":";
    for (int v : perm) text << " " << v;
    text << "\n";
  }
  for (const TableRowResult& r : report.rows) {
    json row;
    row["graph"] = r.graph;
    json kj = json::array();
    for (const auto& k : r.row.k) kj.push_back(int_to_json(k));
    row["k"] = std::move(kj);
    json cf = json::array(), ef = json::array();
    for (const auto& d : r.computed) cf.push_back(int_to_json(d));
    for (const auto& d : r.row.factors) ef.push_back(int_to_json(d));
    row["computed"] = std::move(cf);
    row["expected"] = std::move(ef);
    row["rank"] = r.computed_rank;
    row["match"] = r.match;
    if (r.formula_order) row["formula_order"] = int_to_json(*r.formula_order);
    row["torsion_order"] = int_to_json(r.group_order);
    if (r.row.printed) {
      json pf = json::array();
      for (const auto& d : *r.row.printed) pf.push_back(int_to_json(d));
      row["published"] = std::move(pf);
    }
    if (!r.row.note.empty()) row["note"] = r.row.note;
    rows.push_back(std::move(row));

    text << (r.match ? "  ok   " : "  FAIL ") << r.graph << " k=(";
    for (std::size_t i = 0; i < r.row.k.size(); ++i) text << (i ? "," : "") << r.row.k[i];
    text << ") rank " << r.computed_rank << " torsion";
    if (r.computed.empty()) text << " trivial";
    for (const auto& d : r.computed) text << " Z_" << d;
    if (r.formula_order) {
      text << "  [formula order " << *r.formula_order;
      if (*r.formula_order != r.group_order) text << ", actual " << r.group_order;
      text << "]";
    }
    if (r.row.printed) {
      text << "  [published:";
      for (const auto& d : *r.row.printed) text << " Z_" << d;
      text << " - see note]";
    }
    text << "\n";
    if (!r.row.note.empty()) text << "         note: " << r.row.note << "\n";
  }
  if (!spec.formula_note.empty()) {
    payload["formula_note"] = spec.formula_note;
    text << "note: " << spec.formula_note << "\n";
  }
  payload["rows"] = std::move(rows);
  text << (report.all_match ? "all rows match\n" : "MISMATCH\n");
  emit(opt, payload, text.str());
  return report.all_match ? exit_ok : exit_disagreement;
}

int cmd_nctorus(const Options& opt, const std::string& scheme_path, int genus,
                const std::string& character_arg, const std::string& angles_arg, bool all_chars,
                int projectors_k) {
  json payload;
  std::ostringstream text;
  if (projectors_k > 0) {
    json checks = json::array();
    double worst = 0;
    for (int k = 1; k <= projectors_k; ++k) {
      ProjectorReport rep = verify_projectors(k);
      worst = std::max(worst, rep.max_error);
      checks.push_back({{"k", k}, {"max_error", rep.max_error}});
    }
    payload["projectors"] = std::move(checks);
    text << "projector identities for k = 1.." << projectors_k << ": max deviation " << worst
         << "\n";
  }
  if (!scheme_path.empty()) {
    NegativeColourScheme s = load_scheme(scheme_path, nullptr);
    if (!s.very_composite())
      std::cerr << "warning: scheme is not very composite (some k < 2); the braid-group "
                   "reading is outside the proven range\n";
    CentrePresentation pres = centre_presentation(s);
    std::vector<TorusCharacter> chis;
    if (all_chars) {
      chis = characters(pres.group);
    } else {
      TorusCharacter chi;
      chi.residues.assign(pres.group.invariant_factors().size(), Int(0));
      chi.angles.assign(pres.group.rank(), Rat(0));
      if (!character_arg.empty()) {
        std::istringstream in(character_arg);
        std::string tok;
        std::size_t i = 0;
        while (std::getline(in, tok, ',')) {
          if (i >= chi.residues.size())
            throw Error(errc::context_mismatch, "more residues than torsion factors");
          chi.residues[i] = mod_floor(Int(tok), pres.group.invariant_factors()[i]);
          ++i;
        }
      }
      if (!angles_arg.empty()) {
        std::istringstream in(angles_arg);
        std::string tok;
        std::size_t i = 0;
        while (std::getline(in, tok, ',')) {
          if (i >= chi.angles.size())
            throw Error(errc::context_mismatch, "more angles than free coordinates");
          chi.angles[i] = mod_one(rat_from_string(tok, "angles"));  // rational points only
          ++i;
        }
      }
      chis.push_back(std::move(chi));
    }
    json list = json::array();
    for (const TorusCharacter& chi : chis) {
      NCTorusParams params = nc_parameters(pres, genus, chi);
      list.push_back(nc_params_to_json(pres.group, params));
    }
    payload["factors"] = std::move(list);
    payload["transform"] = [&] {
      json rows = json::array();
      for (std::size_t i = 0; i < pres.group.to_canonical.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < pres.group.to_canonical.cols(); ++j)
          row.push_back(int_to_json(pres.group.to_canonical(i, j)));
        rows.push_back(std::move(row));
      }
      return rows;
    }();  // records the torsion/free splitting used
    text << "emitted " << chis.size() << " noncommutative factor(s) of dimension "
         << 2 * genus * s.r << "\n";
    for (const TorusCharacter& chi : chis) {
      NCTorusParams params = nc_parameters(pres, genus, chi);
      text << "character (";
      for (std::size_t i = 0; i < chi.residues.size(); ++i) text << (i ? " " : "") << chi.residues[i];
      text << "): theta =\n";
      for (const auto& row : params.theta) {
        text << "  ";
        for (const auto& x : row) text << rat_to_string(x) << " ";
        text << "\n";
      }
    }
  }
  emit(opt, payload, text.str());
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisor braid groups: centres, normal forms, toric graphs, reference tables"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--data", opt.data_dir, "data directory (tables, polytopes)");
  app.add_option("--seed", opt.seed, "seed reserved for randomized property commands");

  std::string scheme_path, polytope_path, word_text, equal_text, which_table;
  std::string character_arg, angles_arg, words_file, toric_action;
  int genus = 0, projectors_k = 0;
  bool crosscheck = false, list_characters = false, all_chars = false;
  std::vector<int> chops;
  std::vector<long long> degrees;

  app.fallthrough();  // lets the global options appear after subcommand arguments

  CLI::App* centre = app.add_subcommand("centre", "structure of the centre of a scheme");
  centre->fallthrough();
  centre->add_option("scheme", scheme_path, "scheme file (JSON or terse text)")->required();
  centre->add_flag("--crosscheck", crosscheck, "verify torsion through the degree-N kernel route");
  centre->add_flag("--characters", list_characters, "list the torsion characters");

  CLI::App* normalize = app.add_subcommand("normalize", "normal form of a braid word");
  normalize->fallthrough();
  normalize->add_option("scheme", scheme_path)->required();
  normalize->add_option("--genus", genus, "surface genus")->required();
  normalize->add_option("word", word_text, "word, e.g. \"a[1,1] b[1,2]^3\"");
  normalize->add_option("--equal", equal_text, "second word; print whether the two are equal");
  normalize->add_option("--words", words_file, "file of words, one per line");

  CLI::App* toric = app.add_subcommand("toric", "facet graph of a polytope, with optional chops");
  toric->fallthrough();
  toric->add_option("polytope", polytope_path, "polytope JSON")->required();
  toric->add_option("action", toric_action, "graph (default) or chop")
      ->check(CLI::IsMember({"graph", "chop"}));
  toric->add_option("--chop,--vertex", chops, "vertex to chop (repeatable, applied in order)");
  toric->add_option("--degrees", degrees, "one degree per facet; pipes into the centre");
  toric->add_flag("--crosscheck", crosscheck);
  toric->add_flag("--characters", list_characters);

  CLI::App* tables = app.add_subcommand("tables", "recompute a reference table");
  tables->fallthrough();
  tables->add_option("which", which_table, "pentagon | tree | fig10")
      ->required()
      ->check(CLI::IsMember({"pentagon", "tree", "fig10"}));

  CLI::App* nctorus = app.add_subcommand("nctorus", "noncommutative torus parameters");
  nctorus->fallthrough();
  nctorus->add_option("scheme", scheme_path);
  nctorus->add_option("--genus", genus, "surface genus");
  nctorus->add_option("--character", character_arg, "comma-separated torsion residues");
  nctorus->add_option("--angles", angles_arg, "comma-separated rational angles p/q");
  nctorus->add_flag("--all", all_chars, "emit every torsion character");
  nctorus->add_option("--projectors", projectors_k, "verify projector identities for 1..k");

  CLI11_PARSE(app, argc, argv);

  try {
    if (centre->parsed()) {
      std::vector<std::string> names;
      NegativeColourScheme s = load_scheme(scheme_path, &names);
      if (!names.empty()) {
        std::cerr << "colour indices:";
        for (std::size_t i = 0; i < names.size(); ++i)
          std::cerr << " " << names[i] << "=" << i + 1;
        std::cerr << "\n";
      }
      return cmd_centre(opt, s, crosscheck, list_characters);
    }
    if (normalize->parsed()) {
      if (word_text.empty() && words_file.empty())
        throw dbraid::Error(dbraid::errc::malformed_input, "normalize needs a word or --words");
      return cmd_normalize(opt, scheme_path, genus, word_text, equal_text, words_file);
    }
    if (toric->parsed()) {
      if (toric_action == "chop" && chops.empty())
        throw dbraid::Error(dbraid::errc::malformed_input, "chop needs --vertex");
      return cmd_toric(opt, polytope_path, chops, degrees, crosscheck, list_characters);
    }
    if (tables->parsed()) return cmd_tables(opt, which_table);
    if (nctorus->parsed())
      return cmd_nctorus(opt, scheme_path, genus, character_arg, angles_arg, all_chars,
                         projectors_k);
  } catch (const dbraid::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.structural() ? exit_structural : exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_ok;
}
