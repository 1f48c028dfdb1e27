#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "stickel/cli.hpp"

int main(int argc, char** argv) {
  using stickel::cli::Command;
  CLI::App app{"stickel: Stickelberger maps, A_G, Galois orbits and Steinitz class bounds"};
  app.require_subcommand(1);

  Command cmd;
  std::string output;
  std::string table;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", cmd.group_spec,
                    "abelian:n1,n2 | metacyclic:pa,q,r | perm:deg:(1 2),(1 2 3) | A x B");
    sub->add_option("--format", cmd.format, "json or text")->capture_default_str();
    sub->add_option("--output", output, "write the report to a file");
    sub->add_option("--table", table, "character table JSON document");
  };

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"group", "group order, exponent, classes and Sylow-2 type"},
      {"theta", "Theta of a virtual character in class-sum form"},
      {"ag", "Z-basis of A_G and its index in R_G"},
      {"sg", "HNF basis of the Stickelberger module"},
      {"bound", "Steinitz class bound factors"},
      {"compare-long", "Kummer-case exponent against Long's exact exponent"},
      {"verify", "run the invariant suite"},
      {"ingest", "validate a character table document"},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    const std::string name = s.name;
    if (name == "theta") sub->add_option("--char", cmd.char_spec, "regular | trivial | irr:i | coeffs:a,b,...");
    if (name == "bound") sub->add_option("--kappa", cmd.kappa_spec, "full | trivial | gens=a,b");
    if (name == "verify") {
      sub->add_option("--seed", cmd.seed, "sampling seed")->capture_default_str();
      sub->add_option("--samples", cmd.samples, "random virtual characters")->capture_default_str();
    }
    sub->callback([&cmd, name] { cmd.subcommand = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!table.empty()) cmd.table_path = table;
  if (!output.empty()) cmd.output_path = output;

  const auto res = stickel::cli::run(cmd);
  if (cmd.output_path) {
    std::ofstream out(*cmd.output_path);
    if (!out) {
      std::cerr << "cannot write " << *cmd.output_path << "\n";
      return 1;
    }
    out << res.text;
  } else {
    std::cout << res.text;
  }
  return res.exit_code;
}
