#include <iostream>

#include <CLI11.hpp>

#include "wpb/cli.hpp"
#include "wpb/io.hpp"

int main(int argc, char** argv) {
  wpb::cli::RunConfig c;
  CLI::App app{"Weighted poset block metric spaces: weights, codes and isometry groups"};
  app.add_option("command", c.command, "Command to run")->required()->check(CLI::IsMember(wpb::cli::commands()));
  app.add_option("--poset", c.poset_path, "Poset JSON {\"s\", \"covers\"}");
  app.add_option("--labeling", c.labeling_path, "Labeling JSON {\"k\"} (default all ones)");
  app.add_option("--alphabet", c.alphabet_path, "Alphabet JSON {\"m\"}");
  app.add_option("--weight", c.weight_path, "Weight JSON {\"builtin\"} or {\"table\"} (default hamming)");
  app.add_option("--vector", c.vector_path, "Vector JSON {\"coords\"}");
  app.add_option("--vector2", c.vector2_path, "Second vector for distance");
  app.add_option("--code", c.code_path, "Code JSON {\"codewords\"} or {\"generator\"}");
  app.add_option("--function", c.function_path, "Function table JSON {\"t\", \"map\"}");
  app.add_option("--matrix", c.matrix_path, "Matrix JSON {\"rows\"}");
  app.add_option("--radius", c.radius, "Ball radius");
  app.add_option("--t", c.t, "Head length for perfect-construct");
  app.add_option("--generate", c.generate, "identity | random (perfect-construct without --function)")
      ->check(CLI::IsMember({"identity", "random"}));
  app.add_option("--budget", c.budget, "Max vectors to enumerate");
  app.add_option("--matrix-budget", c.matrix_budget, "Max candidate matrices");
  app.add_option("--seed", c.seed, "Seed for randomized fixtures");
  app.add_flag("--pretty", c.pretty, "Indent the JSON report");
  app.add_flag("--list", c.list, "Include full element lists");
  app.add_flag("--exhaustive", c.exhaustive, "Scan all m^(n^2) matrices in isometry-group");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    const wpb::io::Json doc{{"error", {{"code", "usage"}, {"message", e.what()}, {"witness", wpb::io::Json::array()}}}};
    std::cout << doc.dump() << '\n';
    return 1;
  }
  return wpb::cli::run(c, std::cout);
}
