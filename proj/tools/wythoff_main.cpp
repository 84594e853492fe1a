#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "wythoff/cli.hpp"

namespace {

bool parse_bool(const std::string& text) {
  if (text == "true" || text == "1" || text == "p1") return true;
  if (text == "false" || text == "0" || text == "p0") return false;
  throw CLI::ValidationError("pass", "expected true or false, got '" + text + "'");
}

// Runs `fn` against --out when given, stdout otherwise.
template <typename Fn>
int with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) return fn(std::cout);
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open " << path << " for writing\n";
    return 2;
  }
  return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace wythoff;
  CLI::App app{"Perfect play and claim verification for Wythoff's game with a one-time pass"};
  app.require_subcommand(1);

  std::size_t window = cli::kDefaultWindow;
  std::string out_path;

  const std::map<std::string, cli::TableFormat> formats{{"csv", cli::TableFormat::Csv},
                                                        {"json", cli::TableFormat::Json}};
  cli::TableFormat format = cli::TableFormat::Csv;
  std::string import_path;
  auto* table = app.add_subcommand("table", "Build the Grundy table and export it");
  table->add_option("-n,--window", window, "Window size N")->check(CLI::PositiveNumber);
  table->add_option("--format", format, "csv or json")->transform(CLI::CheckedTransformer(formats));
  table->add_option("--out", out_path, "Output file (default stdout)");
  table->add_option("--import", import_path, "Re-export an existing CSV/JSON table instead of building one");

  bool json = false;
  auto* verify = app.add_subcommand("verify", "Check every claim against the brute-force oracle");
  verify->add_option("-n,--window", window, "Window size N (>= 8)")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "Emit the report as JSON");
  verify->add_option("--out", out_path, "Output file (default stdout)");

  Coord x = 0;
  Coord y = 0;
  std::string pass_text = "true";
  auto* eval = app.add_subcommand("eval", "Grundy values, P/N class and winning move of one state");
  eval->add_option("x", x, "Column")->required();
  eval->add_option("y", y, "Row")->required();
  eval->add_option("pass", pass_text, "Whether the pass is still available (true/false)");
  eval->add_option("-n,--window", window, "Window size N")->check(CLI::PositiveNumber);

  const std::map<std::string, Layer> layers{{"classic", Layer::Classic}, {"pass", Layer::Pass}};
  Layer which = Layer::Classic;
  bool overlay = false;
  auto* plot = app.add_subcommand("plot", "SVG scatter of the P-positions");
  plot->add_option("which", which, "classic or pass")->transform(CLI::CheckedTransformer(layers));
  plot->add_option("-n,--window", window, "Window size N")->check(CLI::PositiveNumber);
  plot->add_flag("--overlay", overlay, "With 'pass', draw the classical P-positions underneath");
  plot->add_option("--out", out_path, "Output SVG file (default stdout)");

  std::uint64_t seed = 0;
  const std::map<std::string, Opponent> policies{{"random", Opponent::Random}, {"optimal", Opponent::Optimal}};
  Opponent policy = Opponent::Random;
  auto* play = app.add_subcommand("play", "Engine playout from a start state; prints the record as JSON lines");
  play->add_option("x", x, "Column")->required();
  play->add_option("y", y, "Row")->required();
  play->add_option("pass", pass_text, "Whether the pass is available at the start (true/false)");
  play->add_option("--seed", seed, "Seed for the random opponent");
  play->add_option("--policy", policy, "Opponent: random or optimal")->transform(CLI::CheckedTransformer(policies));
  play->add_option("-n,--window", window, "Window size N")->check(CLI::PositiveNumber);
  play->add_option("--out", out_path, "Output file (default stdout)");

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve = app.add_subcommand("serve", "Start the HTTP service");
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "Bind address");
  serve->add_option("-n,--window", window, "Window size N")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (table->parsed()) {
      return with_output(out_path, [&](std::ostream& out) {
        if (import_path.empty()) return cli::cmd_table(window, format, out);
        std::ifstream in(import_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read " + import_path);
        std::ostringstream text;
        text << in.rdbuf();
        return cli::cmd_table_import(text.str(), format, out);
      });
    }
    if (verify->parsed()) {
      return with_output(out_path, [&](std::ostream& out) { return cli::cmd_verify(window, json, out); });
    }
    if (eval->parsed()) return cli::cmd_eval(x, y, parse_bool(pass_text), window, std::cout);
    if (plot->parsed()) {
      return with_output(out_path, [&](std::ostream& out) { return cli::cmd_plot(window, which, overlay, out); });
    }
    if (play->parsed()) {
      return with_output(out_path, [&](std::ostream& out) {
        return cli::cmd_play(x, y, parse_bool(pass_text), seed, policy, window, out, std::cerr);
      });
    }
    if (serve->parsed()) return cli::cmd_serve(port, window, host, std::cerr);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
