#include "cli.hpp"

#include "render.hpp"

#include <chromgf/genfunc.hpp>
#include <chromgf/graph.hpp>
#include <chromgf/oracle.hpp>
#include <chromgf/states.hpp>
#include <chromgf/transfer.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>

namespace chromgf::cli {

namespace {

struct Options {
  std::string graph_path;
  std::string connector_path;
  int grid_width = 0;
  std::string format = "text";
  int order = 4;
  bool no_empty_term = false;
  std::string z_name = "z";
  bool verbose = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  Graph graph;
  Connector connector;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Input load_input(const Options& opt, bool need_connector) {
  try {
    if (opt.grid_width > 0) return {path_graph(opt.grid_width), monogamy_connector(opt.grid_width)};
    if (opt.graph_path.empty()) throw UsageError("one of --graph or --grid-width is required");
    Graph g = [&] {
      try {
        return parse_graph_text(read_file(opt.graph_path));
      } catch (const ParseError& e) {
        throw UsageError(opt.graph_path + ": " + e.what());
      }
    }();
    if (!need_connector || opt.connector_path.empty()) {
      const int m = g.vertex_count();
      return {std::move(g), monogamy_connector(m)};
    }
    Connector c = [&] {
      try {
        return parse_connector_text(read_file(opt.connector_path));
      } catch (const ParseError& e) {
        throw UsageError(opt.connector_path + ": " + e.what());
      }
    }();
    if (c.vertex_count() != g.vertex_count()) {
      throw UsageError("connector has m=" + std::to_string(c.vertex_count()) + " but graph has m=" +
                       std::to_string(g.vertex_count()));
    }
    return {std::move(g), std::move(c)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

render::Format to_format(const std::string& name) {
  static const std::map<std::string, render::Format> kFormats{
      {"text", render::Format::kText}, {"latex", render::Format::kLatex}, {"json", render::Format::kJson}};
  return kFormats.at(name);
}

EmptyTerm convention(const Options& opt) { return opt.no_empty_term ? EmptyTerm::kOmitted : EmptyTerm::kIncluded; }

void progress(const Options& opt, std::ostream& err, const std::string& msg) {
  if (opt.verbose) err << "[chromgf] " << msg << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chromatic-polynomial generating functions of layered graphs"};
  app.name("chromgf");
  app.require_subcommand(1, 1);

  Options opt;
  const std::vector<std::string> kFormatNames{"text", "latex", "json"};

  auto add_graph_inputs = [&](CLI::App* sub, bool with_connector) {
    auto* graph = sub->add_option("--graph", opt.graph_path, "Layer graph file ('m <n>' then 'e <u> <v>' lines)");
    auto* grid = sub->add_option("--grid-width", opt.grid_width, "Use the path graph on m vertices, joined vertex-to-vertex")
                     ->check(CLI::PositiveNumber);
    graph->excludes(grid);
    if (with_connector) {
      sub->add_option("--connector", opt.connector_path, "Connector file ('m <n>' then 'p <a> <b>' lines)")
          ->excludes(grid);
    }
    return grid;
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(kFormatNames));
    sub->add_flag("-v,--verbose", opt.verbose, "Progress messages on stderr");
  };

  auto* states_cmd = app.add_subcommand("states", "List canonical colouring states of the layer graph");
  add_graph_inputs(states_cmd, false);
  add_common(states_cmd);

  auto* matrix_cmd = app.add_subcommand("matrix", "Print the symbolic transfer matrix");
  add_graph_inputs(matrix_cmd, true);
  add_common(matrix_cmd);

  auto* gf_cmd = app.add_subcommand("gf", "Rational generating function for a graph and connector");
  add_graph_inputs(gf_cmd, true);
  add_common(gf_cmd);

  auto* grid_cmd = app.add_subcommand("grid", "Generating function for grid graphs of width m");
  auto* grid_opt = add_graph_inputs(grid_cmd, false);
  grid_cmd->add_option("width", opt.grid_width, "Grid width m")->check(CLI::PositiveNumber)->excludes(grid_opt);
  add_common(grid_cmd);

  auto* series_cmd = app.add_subcommand("series", "Chromatic polynomials of the first layered graphs");
  add_graph_inputs(series_cmd, true);
  add_common(series_cmd);
  series_cmd->add_option("--order", opt.order, "Highest power of z (default 4)")->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Check the series against brute-force colouring counts");
  add_graph_inputs(verify_cmd, true);
  add_common(verify_cmd);
  verify_cmd->add_option("--order", opt.order, "Number of layers to check (default 4)")->check(CLI::PositiveNumber);

  for (auto* sub : {gf_cmd, grid_cmd, series_cmd}) {
    sub->add_flag("--no-empty-term", opt.no_empty_term, "Drop the z^0 = 1 term");
  }
  for (auto* sub : {gf_cmd, grid_cmd}) {
    sub->add_option("--z-name", opt.z_name, "Symbol printed for the series variable");
  }

  std::vector<const char*> argv{"chromgf"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "chromgf: " << e.what() << '\n';
    return kUsageError;
  }

  const render::Format fmt = to_format(opt.format);
  const render::Symbols symbols{opt.z_name, "c"};
  CLI::App* cmd = app.get_subcommands().front();

  std::optional<Input> input;
  try {
    input = load_input(opt, cmd != states_cmd && cmd != grid_cmd);
  } catch (const UsageError& e) {
    err << "chromgf: " << e.what() << '\n';
    return kUsageError;
  }
  const Graph& g = input->graph;
  const Connector& c = input->connector;
  progress(opt, err, "m=" + std::to_string(g.vertex_count()) + ", " + std::to_string(g.edges().size()) +
                         " edges, " + std::to_string(c.pairs().size()) + " connector pairs");

  try {
    if (cmd == states_cmd) {
      const auto states = enumerate_states(g);
      progress(opt, err, std::to_string(states.size()) + " states");
      out << render::states(states, fmt);
    } else if (cmd == matrix_cmd) {
      const TransferMatrix tm = transfer_matrix(g, c);
      progress(opt, err, std::to_string(tm.size()) + "x" + std::to_string(tm.size()) + " transfer matrix");
      out << render::matrix(tm, fmt);
    } else if (cmd == gf_cmd || cmd == grid_cmd) {
      const GenFunc gf = generating_function(g, c, convention(opt));
      progress(opt, err, "denominator z-degree " + std::to_string(gf.value.den().z_degree()));
      out << render::ratfunc(gf.value, fmt, symbols);
    } else if (cmd == series_cmd) {
      const GenFunc gf = generating_function(g, c, convention(opt));
      const auto coeffs = series_coefficients(gf.value, opt.order);
      out << render::series(coeffs, opt.no_empty_term ? 1 : 0, fmt);
    } else if (cmd == verify_cmd) {
      const VerificationReport rep = verify_series(g, c, opt.order);
      out << render::report(rep, fmt);
      return rep.passed() ? kOk : kVerificationFailed;
    }
  } catch (const std::exception& e) {
    err << "chromgf: " << e.what() << '\n';
    return kComputationError;
  }
  return kOk;
}

}  // namespace chromgf::cli
