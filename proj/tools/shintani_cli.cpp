#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "shintani/cli.hpp"

int main(int argc, char** argv) {
  using namespace shintani::cli;
  CLI::App app{"Shintani cocycle and p-adic pseudo-measure toolkit"};
  RunConfig cfg;
  std::string input_path, out_path;
  app.add_option("--command", cfg.command, "pair | vh | moments | cocycle")
      ->required()
      ->check(CLI::IsMember({"pair", "vh", "moments", "cocycle"}));
  app.add_option("--input", input_path, "input JSON file ('-' for stdin)")->required();
  app.add_option("--p", cfg.p, "prime");
  app.add_option("--M", cfg.M, "level");
  app.add_option("--n", cfg.n, "dimension");
  app.add_option("--precision", cfg.precision, "p-adic digits");
  app.add_option("--degree", cfg.degree, "truncation degree");
  app.add_option("--bound", cfg.bound, "q-expansion bound");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--trials", cfg.trials, "number of random trials");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_flag("--corrupt-sign", cfg.corrupt_sign, "flip the sign of one cocycle term");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kSchema;
  }

  std::stringstream buf;
  if (input_path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "cannot read " << input_path << "\n";
      return kSchema;
    }
    buf << in.rdbuf();
  }
  cfg.input = buf.str();

  const auto result = run(cfg);
  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  if (!result.output.empty()) {
    if (out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path);
      out << result.output;
      if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return kOther;
      }
    }
  }
  return result.exit_code;
}
