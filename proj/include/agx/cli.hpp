#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "agx/families.hpp"
#include "agx/io.hpp"
#include "agx/wordproblem.hpp"

namespace agx {

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) fail("IoError", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail("IoError", "cannot write '" + path + "'");
  file << text;
}

// Digits for small alphabets, dot-separated letters otherwise.
inline Word parse_letters(const std::string& text, int q) {
  Word w;
  if (text.find('.') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, '.')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        fail("BadWord", "word letters must be nonnegative integers");
      w.push_back(std::stoi(item));
    }
  } else {
    w = word_from_digits(text);
  }
  check_letters(w, q);
  return w;
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      fail("UnsupportedParameter", "expected a comma-separated list of integers");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) fail("UnsupportedParameter", "expected at least one integer");
  return out;
}

}  // namespace detail

// Whole CLI behind one function so tests can drive it with plain streams.
// Exit codes: 0 success, 1 domain error (JSON on err), 2 usage error.
inline int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"finite invertible transducers: actions, classification, and orbit graphs"};
  app.name("agx");
  app.require_subcommand(1);

  std::string input, out_path, csv_path, dot_path;
  std::string word_text, other_text, pre_text, per_text, prefix_text, family_text;
  std::string lengths_text = "2,4,8";
  int level = 0, radius = 0, rmax = 0, depth = 0, max_order = 128;
  int depth_cap = kDefaultNucleusDepthCap, size_cap = kDefaultNucleusSizeCap;
  long long ball_cap = kDefaultBallCap;
  int samples = 0;
  std::uint64_t seed = 0;

  auto add_input = [&](CLI::App* c) {
    c->add_option("input", input, "automaton JSON document, '-' for stdin")->required();
  };
  auto add_json_out = [&](CLI::App* c) {
    c->add_option("-o,--json", out_path, "write the JSON result to PATH, '-' for stdout");
  };

  CLI::App* c_validate = app.add_subcommand("validate", "check an automaton document");
  add_input(c_validate);
  add_json_out(c_validate);

  CLI::App* c_minimize = app.add_subcommand("minimize", "merge behaviorally equal states");
  add_input(c_minimize);
  add_json_out(c_minimize);

  CLI::App* c_classify = app.add_subcommand("classify", "cycle structure and activity degree");
  add_input(c_classify);
  add_json_out(c_classify);

  CLI::App* c_nucleus = app.add_subcommand("nucleus", "search for a finite contraction core");
  add_input(c_nucleus);
  add_json_out(c_nucleus);
  c_nucleus->add_option("--depth-cap", depth_cap, "restriction depth budget");
  c_nucleus->add_option("--size-cap", size_cap, "candidate set budget");

  CLI::App* c_word = app.add_subcommand("wordproblem", "decide triviality or equality of words");
  add_input(c_word);
  add_json_out(c_word);
  c_word->add_option("--word", word_text, "comma-separated generators, '-' prefix inverts")
      ->required();
  c_word->add_option("--other", other_text, "second word; compare instead of testing triviality");

  CLI::App* c_order = app.add_subcommand("order", "smallest trivial power of a word");
  add_input(c_order);
  add_json_out(c_order);
  c_order->add_option("--word", word_text, "comma-separated generators")->required();
  c_order->add_option("--max", max_order, "largest exponent to try");

  CLI::App* c_schreier = app.add_subcommand("schreier", "action graph on all words of one length");
  add_input(c_schreier);
  add_json_out(c_schreier);
  c_schreier->add_option("--level", level, "word length")->required();
  c_schreier->add_option("--dot", dot_path, "write DOT to PATH, '-' for stdout");

  CLI::App* c_ball = app.add_subcommand("ball", "orbit ball around an eventually periodic word");
  add_input(c_ball);
  add_json_out(c_ball);
  c_ball->add_option("--pre", pre_text, "preperiod digits (may be empty)");
  c_ball->add_option("--per", per_text, "period digits")->required();
  c_ball->add_option("--radius", radius, "ball radius")->required();
  c_ball->add_option("--size-cap", ball_cap, "vertex budget");
  c_ball->add_option("--dot", dot_path, "write DOT to PATH, '-' for stdout");

  CLI::App* c_growth = app.add_subcommand("growth", "orbit ball sizes for radii 0..rmax");
  add_input(c_growth);
  add_json_out(c_growth);
  c_growth->add_option("--pre", pre_text, "preperiod digits (may be empty)");
  c_growth->add_option("--per", per_text, "period digits")->required();
  c_growth->add_option("--rmax", rmax, "largest radius")->required();
  c_growth->add_option("--size-cap", ball_cap, "vertex budget");
  c_growth->add_option("--csv", csv_path, "write 'r,gamma' rows to PATH, '-' for stdout");

  CLI::App* c_paths = app.add_subcommand("paths", "count diagram paths avoiding the trivial state");
  add_input(c_paths);
  add_json_out(c_paths);
  c_paths->add_option("--depth", depth, "path length")->required();

  CLI::App* c_probe = app.add_subcommand("probe", "layered-restriction depth probe");
  add_input(c_probe);
  add_json_out(c_probe);
  c_probe->add_option("--lengths", lengths_text, "comma-separated word lengths");
  c_probe->add_option("--depth", depth, "depth budget per word")->default_val(16);
  c_probe->add_option("--samples", samples, "words per length; 0 enumerates all");
  c_probe->add_option("--seed", seed, "sampling seed");
  c_probe->add_option("--csv", csv_path, "write probe rows to PATH, '-' for stdout");

  CLI::App* c_sphere = app.add_subcommand("sphere", "distinct restrictions of short words");
  add_input(c_sphere);
  add_json_out(c_sphere);
  c_sphere->add_option("--prefix", prefix_text, "restriction point (digits, may be empty)");
  c_sphere->add_option("--radius", radius, "largest word length")->required();
  c_sphere->add_option("--size-cap", size_cap, "element budget")->default_val(512);

  CLI::App* c_family = app.add_subcommand("family", "emit a built-in automaton");
  add_json_out(c_family);
  c_family->add_option("spec", family_text, "adding | omega:BITS | hanoi:K | nonpoly_b")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  auto deliver = [&](const json& doc) {
    if (!out_path.empty()) {
      detail::write_output(out_path, doc.dump(2) + "\n", out);
      return;
    }
    if (csv_path.empty() && dot_path.empty()) out << doc.dump(2) << "\n";
  };
  auto load = [&] { return automaton_from_json(parse_json_text(detail::read_input(input, in))); };
  auto load_valid = [&] {
    Automaton a = load();
    require_valid(a);
    return a;
  };

  int rc = 0;
  try {
    if (app.got_subcommand(c_validate)) {
      Automaton a = load();
      ValidationReport rep = validate_automaton(a);
      (void)a;
      deliver(validation_report_to_json(rep));
      if (!rep.valid) {
        err << json{{"error", "InvalidAutomaton"},
                    {"message", "document is well-formed but not an invertible automaton"}}
                   .dump()
            << "\n";
        rc = 1;
      }
    } else if (app.got_subcommand(c_minimize)) {
      deliver(automaton_to_json(minimize(load_valid())));
    } else if (app.got_subcommand(c_classify)) {
      deliver(classification_to_json(classify(load_valid())));
    } else if (app.got_subcommand(c_nucleus)) {
      deliver(nucleus_result_to_json(nucleus(load_valid(), depth_cap, size_cap)));
    } else if (app.got_subcommand(c_word)) {
      Automaton a = load_valid();
      GroupWord g = GroupWord::parse(word_text, a.names);
      json doc;
      doc["word"] = g.format(a.names);
      if (c_word->count("--other")) {
        GroupWord h = GroupWord::parse(other_text, a.names);
        doc["other"] = h.format(a.names);
        doc["equal"] = are_equal(a, g, h);
      } else {
        doc["trivial"] = is_trivial(a, g);
      }
      deliver(doc);
    } else if (app.got_subcommand(c_order)) {
      Automaton a = load_valid();
      GroupWord g = GroupWord::parse(word_text, a.names);
      auto k = order_probe(a, g, max_order);
      deliver(json{{"word", g.format(a.names)},
                   {"max_order", max_order},
                   {"order", k ? json(*k) : json()}});
    } else if (app.got_subcommand(c_schreier)) {
      Automaton a = load_valid();
      LevelGraph g = schreier_level_graph(a, level);
      if (!dot_path.empty()) detail::write_output(dot_path, graph_to_dot(g, a.alphabet), out);
      json doc;
      doc["level"] = level;
      doc["graph"] = graph_to_json(g, a.alphabet);
      doc["metrics"] = metrics_to_json(graph_metrics(g));
      deliver(doc);
    } else if (app.got_subcommand(c_ball)) {
      Automaton a = load_valid();
      if (per_text.empty()) fail("BadWord", "the period must be nonempty");
      EpWord w = EpWord::make(detail::parse_letters(pre_text, a.alphabet),
                              detail::parse_letters(per_text, a.alphabet));
      OrbitalGraph g = orbital_ball(a, w, radius, ball_cap);
      if (!dot_path.empty()) detail::write_output(dot_path, graph_to_dot(g, a.alphabet), out);
      json doc;
      doc["radius"] = radius;
      doc["graph"] = graph_to_json(g, a.alphabet);
      doc["metrics"] = metrics_to_json(graph_metrics(g));
      deliver(doc);
    } else if (app.got_subcommand(c_growth)) {
      Automaton a = load_valid();
      if (per_text.empty()) fail("BadWord", "the period must be nonempty");
      EpWord w = EpWord::make(detail::parse_letters(pre_text, a.alphabet),
                              detail::parse_letters(per_text, a.alphabet));
      GrowthSeries series = growth_series(a, w, rmax, ball_cap);
      if (!csv_path.empty()) detail::write_output(csv_path, growth_to_csv(series), out);
      deliver(growth_to_json(series));
    } else if (app.got_subcommand(c_paths)) {
      Automaton a = load_valid();
      deliver(json{{"n", depth}, {"count", activity_path_count(a, depth).str()}});
    } else if (app.got_subcommand(c_probe)) {
      Automaton a = load_valid();
      ProbeTable table =
          probe_weak_contraction(a, detail::parse_int_list(lengths_text), depth, samples, seed);
      if (!csv_path.empty()) detail::write_output(csv_path, probe_table_to_csv(table), out);
      deliver(probe_table_to_json(table));
    } else if (app.got_subcommand(c_sphere)) {
      Automaton a = load_valid();
      SymmetricClosure sc = symmetric_closure(a);
      WordProblem wp(sc);
      Word prefix = detail::parse_letters(prefix_text, a.alphabet);
      auto elems = restriction_sphere(sc, wp, prefix, radius, size_cap);
      json list = json::array();
      for (const auto& e : elems) list.push_back(sc.format(e));
      deliver(json{{"prefix", word_to_string(prefix, a.alphabet)},
                   {"max_length", radius},
                   {"count", elems.size()},
                   {"elements", list}});
    } else if (app.got_subcommand(c_family)) {
      deliver(automaton_to_json(build_family(family_text)));
    }
  } catch (const Error& e) {
    err << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace agx
