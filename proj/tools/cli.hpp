#pragma once
// Command-line front end. Exit codes: 0 success, 1 domain error, 2 malformed input.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <visikit/visikit.hpp>

namespace visikit::cli {

struct Options {
  int k = 0;
  bool k_given = false;
  std::uint64_t seed = 1;
  std::string input;
  std::string output;
  std::string format = "json";
  std::string kind = "cyl";
  std::vector<Length> lengths;
  std::vector<std::size_t> pair;
  std::size_t n = 0;
  std::size_t j = 0;
  std::size_t steps = 0;
  bool force = false;
  bool exhaustive = false;
  std::string family;
  std::size_t max_n = 0;
  std::size_t random_count = 1000;
};

class Runner {
public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"visikit: semi-bar k-visibility graphs and convex quasiplanar drawings"};
    app.require_subcommand(1);
    build(app);
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return 2;
    }
    try {
      action_();
      return exit_code_;
    } catch (const SchemaError& e) {
      err_ << "error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return 1;
    }
  }

private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  Options o_;
  std::function<void()> action_;
  int exit_code_ = 0;

  // -- option helpers -------------------------------------------------------

  void add_k(CLI::App* sub) {
    sub->add_option("--k", o_.k, "visibility / quasiplanarity parameter")
        ->check(CLI::NonNegativeNumber)
        ->each([this](const std::string&) { o_.k_given = true; });
  }
  void add_io(CLI::App* sub, const char* input_names = "-i,--input") {
    sub->add_option(input_names, o_.input, "JSON input file ('-' or omitted: stdin)");
    sub->add_option("-o,--output", o_.output, "write the result here instead of stdout");
    sub->add_option("--format", o_.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  }
  void add_arrangement(CLI::App* sub) {
    add_k(sub);
    sub->add_option("--kind", o_.kind, "flat or cyl (with --lengths)")->check(CLI::IsMember({"flat", "cyl"}));
    sub->add_option("--lengths", o_.lengths, "comma-separated bar lengths")->delimiter(',');
    add_io(sub, "-i,--input,--arrangement");
  }

  CLI::App* command(CLI::App& app, const char* name, const char* help, std::function<void()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([this, fn = std::move(fn)] { action_ = fn; });
    return sub;
  }

  // -- input ----------------------------------------------------------------

  Json load_json() {
    if (o_.input.empty() || o_.input == "-") {
      const std::string text{std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
      return parse_json_text(text);
    }
    return parse_json_text(read_text_file(o_.input));
  }

  template <typename T>
  static void require_valid(const T& object, const char* what) {
    const auto problems = validate(object);
    if (!problems.empty()) throw SchemaError(std::string("invalid ") + what + ": " + problems.front());
  }

  Arrangement load_arrangement() {
    Arrangement a;
    if (!o_.lengths.empty()) {
      if (o_.kind == "flat") a = FlatArrangement{o_.lengths, o_.k};
      else a = CylArrangement{o_.lengths, o_.k};
    } else {
      a = parse_arrangement(load_json());
      if (o_.k_given) std::visit([&](auto& x) { x.k = o_.k; }, a);
    }
    std::visit([](const auto& x) { require_valid(x, "arrangement"); }, a);
    return a;
  }

  CylArrangement load_cyl() {
    const Arrangement a = load_arrangement();
    if (!std::holds_alternative<CylArrangement>(a)) throw Error("a cylindrical arrangement is required");
    return std::get<CylArrangement>(a);
  }

  FlatArrangement load_flat() {
    if (!o_.lengths.empty()) o_.kind = "flat";
    const Arrangement a = load_arrangement();
    if (!std::holds_alternative<FlatArrangement>(a)) throw Error("a flat arrangement is required");
    return std::get<FlatArrangement>(a);
  }

  ConvexDrawing load_drawing() {
    ConvexDrawing d = parse_drawing(load_json());
    require_valid(d, "drawing");
    return d;
  }

  Graph load_graph() {
    Graph g = parse_graph(load_json());
    require_valid(g, "graph");
    return g;
  }

  // -- output ---------------------------------------------------------------

  void emit(const Json& j) {
    const std::string text = o_.format == "tsv" ? to_tsv(j) : j.dump(2) + "\n";
    if (o_.output.empty()) out_ << text;
    else write_text_file(o_.output, text);
  }

  // -- subcommands ----------------------------------------------------------

  void build(CLI::App& app) {
    auto* vis = command(app, "visibility", "k-visibility graph of an arrangement", [this] {
      const Arrangement a = load_arrangement();
      emit(std::visit([](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, FlatArrangement>) return to_json(flat_visibility(x));
        else return to_json(cyl_visibility(x));
      }, a));
    });
    add_arrangement(vis);

    auto* oracle = command(app, "oracle", "brute-force sightline test for one pair", [this] {
      const Arrangement a = load_arrangement();
      if (o_.pair.size() != 2) throw SchemaError("--pair expects i,j");
      const bool visible = std::visit([&](const auto& x) { return sightline_oracle(x, o_.pair[0], o_.pair[1]); }, a);
      Json j;
      j["pair"] = o_.pair;
      j["visible"] = visible;
      emit(j);
    });
    add_arrangement(oracle);
    oracle->add_option("--pair", o_.pair, "i,j")->delimiter(',')->required();

    auto* cq = command(app, "check-quasiplanar", "look for k+2 pairwise crossing edges", [this] {
      const ConvexDrawing d = load_drawing();
      const auto witness = find_pairwise_crossing(d, static_cast<std::size_t>(o_.k) + 2);
      Json j;
      j["k"] = o_.k;
      j["quasiplanar"] = !witness.has_value();
      if (witness) j["witness"] = to_json(ConvexDrawing{d.n, *witness})["edges"];
      emit(j);
    });
    add_k(cq);
    add_io(cq, "-i,--input,--drawing");

    auto* cm = command(app, "check-maximal", "is the drawing edge-maximal (k+2)-quasiplanar", [this] {
      const ConvexDrawing d = load_drawing();
      Json j;
      j["k"] = o_.k;
      j["maximal"] = is_maximal(d, o_.k);
      emit(j);
    });
    add_k(cm);
    add_io(cm, "-i,--input,--drawing");

    auto* comp = command(app, "complete", "maximal completion of a quasiplanar drawing", [this] {
      emit(to_json(maximal_completion(load_drawing(), o_.k)));
    });
    add_k(comp);
    add_io(comp, "-i,--input,--drawing");

    auto* jp = command(app, "jpairs", "all j-pairs of n points in convex position", [this] {
      const std::size_t n = o_.n != 0 ? o_.n : load_drawing().n;
      Json j;
      j["n"] = n;
      j["j"] = o_.j;
      j["pairs"] = to_json(ConvexDrawing{n, j_pairs(n, o_.j)})["edges"];
      emit(j);
    });
    jp->add_option("--n", o_.n, "number of points (otherwise taken from --input)");
    jp->add_option("--j", o_.j, "level")->required();
    add_io(jp, "-i,--input,--drawing");

    auto* me = command(app, "max-edges", "extremal edge count", [this] {
      Json j;
      j["n"] = o_.n;
      j["k"] = o_.k;
      j["max_edges"] = max_edges(static_cast<long long>(o_.n), o_.k);
      emit(j);
    });
    me->add_option("--n", o_.n, "vertex count")->required()->check(CLI::PositiveNumber);
    add_k(me);
    add_io(me);

    auto* dg = command(app, "degeneracy", "degeneracy and minimum-degree elimination order", [this] {
      const Degeneracy d = degeneracy(load_graph());
      Json j;
      j["degeneracy"] = d.value;
      j["order"] = d.order;
      emit(j);
    });
    add_io(dg, "-i,--input,--graph,--drawing");

    auto* col = command(app, "color", "greedy coloring along the degeneracy order", [this] {
      const Graph g = load_graph();
      const auto coloring = greedy_color(g, degeneracy(g).order);
      Json j;
      j["colors"] = color_count(coloring);
      j["coloring"] = coloring;
      emit(j);
    });
    add_io(col, "-i,--input,--graph,--drawing");

    auto* emb = command(app, "embed", "convex geometric drawing of a cylindrical arrangement", [this] {
      emit(to_json(embed(load_cyl())));
    });
    add_arrangement(emb);

    auto* pl = command(app, "peel", "cylindrical arrangement from a maximal degenerate drawing", [this] {
      const PeelResult r = peel(load_drawing(), o_.k, PeelOptions{o_.force});
      Json j = to_json(r.trace);
      if (o_.force) j["reproduces_input"] = r.reproduces_input;
      emit(j);
    });
    add_k(pl);
    add_io(pl, "-i,--input,--drawing");
    pl->add_flag("--force", o_.force, "peel without the maximality check");

    auto* fp = command(app, "flat-peel", "flat arrangement from a maximal planar drawing", [this] {
      emit(to_json(flat_peel(load_drawing()).trace));
    });
    add_io(fp, "-i,--input,--drawing");

    auto* cu = command(app, "curl", "place a flat arrangement on the cylinder", [this] {
      emit(to_json(curl(load_flat())));
    });
    add_arrangement(cu);

    auto* cp = command(app, "curl-preserves", "does curling keep the visibility graph", [this] {
      const FlatArrangement r = load_flat();
      Json j;
      j["preserves"] = curl_preserves(r);
      j["literal"] = curl_condition_is_literal(r);
      emit(j);
    });
    add_arrangement(cp);

    auto* ct = command(app, "cut", "flatten a cylinder between its two longest bars", [this] {
      emit(to_json(cut(load_cyl())));
    });
    add_arrangement(ct);

    auto* gen = command(app, "gen", "generate an instance family", [this] { generate(); });
    gen->add_option("--family", o_.family, "random | k-complete | counterexample | forced-peel")
        ->required()
        ->check(CLI::IsMember({"random", "k-complete", "counterexample", "forced-peel"}));
    gen->add_option("--n", o_.n, "bar count (random)");
    gen->add_option("--seed", o_.seed, "seed (random)");
    gen->add_option("--kind", o_.kind, "flat or cyl (random)")->check(CLI::IsMember({"flat", "cyl"}));
    add_k(gen);
    add_io(gen);

    auto* fpa = command(app, "forced-peel-analysis", "which peel steps have a single choice", [this] {
      const ConvexDrawing d = load_drawing();
      const ForcedPeelReport r = forced_peel_analysis(d, o_.k, o_.steps, ForcedPeelOptions{o_.exhaustive});
      Json j;
      j["k"] = o_.k;
      j["steps"] = r.steps_checked;
      j["forced"] = r.forced;
      j["all_forced"] = r.all_forced;
      j["forced_prefix"] = r.forced_prefix;
      j["first_unforced_eligible"] = r.first_unforced_eligible;
      j["longest_nonadjacent"] = r.longest_nonadjacent;
      j["arrangement"] = to_json(r.arrangement);
      if (r.exhaustive) {
        j["orders_explored"] = r.orders_explored;
        j["truncated"] = r.truncated;
        j["every_order_forced"] = r.every_order_forced;
        j["every_order_nonadjacent"] = r.every_order_nonadjacent;
        j["orders_with_adjacent_longest"] = r.orders_with_adjacent_longest;
        j["every_order_reproduces"] = r.every_order_reproduces;
      }
      emit(j);
    });
    add_k(fpa);
    add_io(fpa, "-i,--input,--drawing");
    fpa->add_option("--steps", o_.steps, "number of leading steps to examine")->required();
    fpa->add_flag("--exhaustive", o_.exhaustive, "walk every valid peel order");

    auto* svg_cmd = command(app, "export-svg", "write an SVG figure", [this] {
      const Json j = load_json();
      if (o_.output.empty()) throw SchemaError("--output is required");
      if (j.is_object() && j.contains("kind")) {
        const Arrangement a = parse_arrangement(j);
        std::visit([&](const auto& x) { require_valid(x, "arrangement"); export_svg(x, o_.output); }, a);
      } else {
        const ConvexDrawing d = parse_drawing(j);
        require_valid(d, "drawing");
        export_svg(d, o_.output);
      }
      out_ << "wrote " << o_.output << "\n";
    });
    svg_cmd->add_option("-i,--input", o_.input, "arrangement or drawing JSON");
    svg_cmd->add_option("-o,--output", o_.output, "SVG path")->required();

    auto* ver = command(app, "verify", "run the acceptance sweeps", [this] { verify(); });
    ver->add_option("--max-n", o_.max_n, "cap on exhaustive sizes (default: VISIKIT_MAX_N or 8)");
    ver->add_option("--random-count", o_.random_count, "number of random instances");
    ver->add_option("--seed", o_.seed, "seed for the random instances");
  }

  void generate() {
    if (o_.family == "random") {
      if (o_.n == 0) throw SchemaError("--n is required for the random family");
      Json j = o_.kind == "flat" ? to_json(random_flat(o_.n, o_.k, o_.seed)) : to_json(random_cyl(o_.n, o_.k, o_.seed));
      j["seed"] = o_.seed;
      emit(j);
    } else if (o_.family == "k-complete") {
      emit(to_json(complete_graph_arrangement(o_.k)));
    } else if (o_.family == "counterexample") {
      emit(to_json(quasiplanar_counterexample(o_.k)));
    } else {
      emit(to_json(forced_peel_family(o_.k)));
    }
  }

  void verify() {
    std::size_t cap = 8;
    if (const char* env = std::getenv("VISIKIT_MAX_N")) {
      try {
        cap = static_cast<std::size_t>(std::stoul(env));
      } catch (const std::exception&) {
        throw SchemaError("VISIKIT_MAX_N: expected a positive integer");
      }
    }
    if (o_.max_n != 0) cap = o_.max_n;
    VerifyConfig config = VerifyConfig{}.capped(cap);
    config.random_count = o_.random_count;
    if (o_.seed != 1) config.seed = o_.seed;
    bool all = true;
    for (const CriterionResult& r : run_acceptance(config)) {
      out_ << format_result(r) << "\n";
      all = all && r.passed;
    }
    exit_code_ = all ? 0 : 1;
  }
};

inline int run(int argc, const char* const* argv, std::istream& in = std::cin, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  return Runner(in, out, err).run(argc, argv);
}

} // namespace visikit::cli
