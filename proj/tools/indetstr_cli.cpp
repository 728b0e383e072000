// Command-line surface over the library.  Exit codes: 0 on success (yes/no
// verdicts are answers, not errors), 1 on domain errors (infeasible array,
// non-regular input, cap exceeded), 2 on usage or input-parse errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "indetstr/indetstr.hpp"

namespace {

using namespace indetstr;

std::string read_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// "-" means standard input for inline string/array arguments.
std::string arg_text(const std::string& arg) {
  return arg == "-" ? read_stream(std::cin) : arg;
}

// Graph arguments are file paths (or "-" for standard input).
std::string file_text(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read file: " + path);
  return read_stream(in);
}

struct Options {
  bool words = false;
  CliqueCaps caps;
  int max_sigma = Alphabet::kDefaultMaxSigma;

  TextMode mode() const {
    return words ? TextMode::words : TextMode::compact;
  }
  IndetString string_of(const std::string& arg) const {
    return parse_string(arg_text(arg), {mode(), max_sigma});
  }
  IntArray array_of(const std::string& arg) const {
    return parse_int_array(arg_text(arg));
  }
  LabelledGraph graph_of(const std::string& arg) const {
    EdgeList el = parse_edge_list(file_text(arg));
    return LabelledGraph(el.n, std::move(el.edges));
  }
};

void print_clique(const std::vector<int>& c) {
  for (std::size_t k = 0; k < c.size(); ++k)
    std::cout << (k ? " " : "") << c[k];
  std::cout << '\n';
}

void print_cover_and_string(const LabelledGraph& g, const Options& opt) {
  CliqueCover cover = independent_cliques_exact(g, opt.caps);
  std::cout << "sigma " << cover.sigma << '\n';
  for (std::size_t k : cover.independent) print_clique(cover.all_mc[k]);
  std::cout << format_string(string_from_graph(g, opt.caps), opt.mode())
            << '\n';
}

void add_subcommands(CLI::App& app, Options& opt) {
  app.add_flag("--words", opt.words,
               "read and write strings as whitespace-separated tokens");
  app.add_option("--max-n", opt.caps.max_n,
                 "vertex cap for maximal-clique enumeration");
  app.add_option("--max-exact-n", opt.caps.max_exact_n,
                 "vertex cap for the exact cover search");
  app.add_option("--max-cliques", opt.caps.max_exact_cliques,
                 "clique-count cap for the exact cover search");
  app.add_option("--max-sigma", opt.max_sigma,
                 "largest symbol id accepted when parsing strings");

  auto* pa = app.add_subcommand("prefix-array",
                                "prefix array of an indeterminate string");
  auto pa_arg = std::make_shared<std::string>();
  pa->add_option("string", *pa_arg, "string, or - for stdin")->required();
  pa->callback([&opt, pa_arg] {
    std::cout << format_int_array(compute_prefix_array(opt.string_of(*pa_arg)))
              << '\n';
  });

  auto* fe = app.add_subcommand("feasible",
                                "is the array a candidate prefix array?");
  auto fe_arg = std::make_shared<std::string>();
  fe->add_option("array", *fe_arg, "integer array, or - for stdin")
      ->required();
  fe->callback([&opt, fe_arg] {
    std::cout << (is_feasible(opt.array_of(*fe_arg)) ? "yes" : "no") << '\n';
  });

  auto* re = app.add_subcommand(
      "regular", "can a regular string realize this prefix array?");
  auto re_arg = std::make_shared<std::string>();
  re->add_option("array", *re_arg, "feasible array, or - for stdin")
      ->required();
  re->callback([&opt, re_arg] {
    RegularityResult r = regularity(opt.array_of(*re_arg));
    std::cout << (r.regular ? "yes" : "no") << '\n';
    for (const auto& comp : r.components) print_clique(comp);
  });

  auto* as = app.add_subcommand(
      "assign", "lexicographically least regular string for the array");
  auto as_arg = std::make_shared<std::string>();
  as->add_option("array", *as_arg, "regular feasible array, or - for stdin")
      ->required();
  as->callback([&opt, as_arg] {
    AssignResult r = assign(opt.array_of(*as_arg));
    std::cout << format_string(r.string, opt.mode()) << '\n'
              << "t " << r.t << '\n';
  });

  auto* wi = app.add_subcommand(
      "witness", "indeterminate string realizing any feasible array");
  auto wi_arg = std::make_shared<std::string>();
  wi->add_option("array", *wi_arg, "feasible array, or - for stdin")
      ->required();
  wi->callback([&opt, wi_arg] {
    std::cout << format_string(witness_string(opt.array_of(*wi_arg)),
                               TextMode::words)
              << '\n';
  });

  auto* pg = app.add_subcommand("prefix-graph",
                                "edges the array forces between positions");
  auto pg_arg = std::make_shared<std::string>();
  auto pg_kind = std::make_shared<int>(0);  // 1 positive, 2 negative, 3 augmented
  pg->add_option("array", *pg_arg, "feasible array, or - for stdin")
      ->required();
  auto* fpos = pg->add_flag_callback(
      "--positive", [pg_kind] { *pg_kind = 1; }, "matches forced to hold");
  auto* fneg = pg->add_flag_callback(
      "--negative", [pg_kind] { *pg_kind = 2; }, "mismatches forced to hold");
  auto* faug = pg->add_flag_callback(
      "--augmented", [pg_kind] { *pg_kind = 3;
      }, "negative edges plus border records on vertex n+1");
  fpos->excludes(fneg, faug);
  fneg->excludes(faug);
  pg->callback([&opt, pg_arg, pg_kind] {
    if (*pg_kind == 0)
      throw CLI::ValidationError(
          "prefix-graph", "one of --positive/--negative/--augmented needed");
    IntArray y = opt.array_of(*pg_arg);
    if (*pg_kind == 3) {
      AugmentedPrefixGraph a = augment(y);
      std::vector<Edge> all = a.base.e_minus;
      all.insert(all.end(), a.extra_minus.begin(), a.extra_minus.end());
      std::sort(all.begin(), all.end());
      std::cout << format_edge_list(a.base.n + 1, all);
      return;
    }
    PrefixGraph g = build_prefix_graph(y);
    std::cout << format_edge_list(g.n,
                                  *pg_kind == 1 ? g.e_plus : g.e_minus);
  });

  auto* rc = app.add_subcommand(
      "reconstruct", "prefix array whose negative edges are the given list");
  auto rc_arg = std::make_shared<std::string>();
  auto rc_n = std::make_shared<int>(0);
  rc->add_option("edge-file", *rc_arg, "edge list file, or - for stdin")
      ->required();
  rc->add_option("--n", *rc_n,
                 "array length (defaults to the edge-list header)");
  rc->callback([&opt, rc_arg, rc_n] {
    EdgeList el = parse_edge_list(file_text(*rc_arg));
    int n = *rc_n > 0 ? *rc_n : el.n;
    std::cout << format_int_array(reconstruct_prefix_array(n, el.edges))
              << '\n';
  });

  auto* ag = app.add_subcommand("assoc-graph",
                                "graph of pairwise matching positions");
  auto ag_arg = std::make_shared<std::string>();
  ag->add_option("string", *ag_arg, "string, or - for stdin")->required();
  ag->callback([&opt, ag_arg] {
    LabelledGraph g = associated_graph(opt.string_of(*ag_arg));
    std::cout << format_edge_list(g.order(), g.edges());
  });

  auto* mc = app.add_subcommand("maximal-cliques",
                                "all maximal cliques, one per line");
  auto mc_arg = std::make_shared<std::string>();
  mc->add_option("graph-file", *mc_arg, "edge list file, or - for stdin")
      ->required();
  mc->callback([&opt, mc_arg] {
    for (const auto& c : maximal_cliques(opt.graph_of(*mc_arg), opt.caps))
      print_clique(c);
  });

  auto* ma = app.add_subcommand(
      "min-alphabet",
      "fewest symbols realizing the string's (or graph's) match structure");
  auto ma_arg = std::make_shared<std::string>();
  auto ma_graph = std::make_shared<std::string>();
  ma->add_option("string", *ma_arg, "string, or - for stdin");
  ma->add_option("--graph", *ma_graph, "edge list file instead of a string");
  ma->callback([&opt, ma_arg, ma_graph] {
    if (ma_arg->empty() == ma_graph->empty())
      throw CLI::ValidationError("min-alphabet",
                                 "need a string or --graph, not both");
    LabelledGraph g = ma_graph->empty()
                          ? associated_graph(opt.string_of(*ma_arg))
                          : opt.graph_of(*ma_graph);
    print_cover_and_string(g, opt);
  });

  auto* lc = app.add_subcommand(
      "label-cliques", "search-free I/D/U labelling of the maximal cliques");
  auto lc_arg = std::make_shared<std::string>();
  lc->add_option("graph-file", *lc_arg, "edge list file, or - for stdin")
      ->required();
  lc->callback([&opt, lc_arg] {
    CliqueLabelling lab =
        independent_cliques_heuristic(opt.graph_of(*lc_arg), opt.caps);
    for (std::size_t c = 0; c < lab.all_mc.size(); ++c) {
      std::cout << static_cast<char>(lab.labels[c]) << ' ';
      print_clique(lab.all_mc[c]);
    }
  });

  auto* in = app.add_subcommand(
      "indet", "positions every realization must make indeterminate");
  auto in_arg = std::make_shared<std::string>();
  in->add_option("array", *in_arg, "feasible array, or - for stdin")
      ->required();
  in->callback([&opt, in_arg] {
    for (const auto& [i, w] : indet_positions(opt.array_of(*in_arg)))
      std::cout << i << " (r=" << w.r << ",s=" << w.s << ")\n";
  });

  auto* er = app.add_subcommand("essentially-regular",
                                "is matching transitive on this string?");
  auto er_arg = std::make_shared<std::string>();
  er->add_option("string", *er_arg, "string, or - for stdin")->required();
  er->callback([&opt, er_arg] {
    std::cout << (is_essentially_regular(opt.string_of(*er_arg)) ? "yes"
                                                                 : "no")
              << '\n';
  });

  auto* en = app.add_subcommand("enumerate",
                                "all feasible arrays of a given length");
  auto en_n = std::make_shared<int>(0);
  auto en_reg = std::make_shared<bool>(false);
  en->add_option("--n", *en_n, "array length")->required();
  en->add_flag("--regular-only", *en_reg,
               "only arrays realizable by regular strings");
  en->callback([en_n, en_reg] {
    for_each_feasible(*en_n, [&](const IntArray& y) {
      if (!*en_reg || is_regular(y))
        std::cout << format_int_array(y) << '\n';
    });
  });

  auto* ru = app.add_subcommand(
      "ruler", "shortest string whose least realization needs t symbols");
  auto ru_t = std::make_shared<int>(0);
  ru->add_option("--t", *ru_t, "alphabet size, >= 1")->required();
  ru->callback([&opt, ru_t] {
    std::cout << format_string(ruler_string(*ru_t), opt.mode()) << '\n';
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prefix arrays, prefix graphs, and indeterminate strings"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name
  Options opt;
  add_subcommands(app, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help exits 0; real usage errors exit 2
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
    return 2;
  } catch (const not_regular_error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what()
              << " (try `witness` for an indeterminate realization)\n";
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid-argument: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
