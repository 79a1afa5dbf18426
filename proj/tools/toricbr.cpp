#include "toric/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using toric::cli::Format;
  toric::cli::Options opt;
  std::string format = "text";

  CLI::App app{"Brauer groups and related invariants of toric varieties"};
  app.require_subcommand(1);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", opt.timing, "Report elapsed time");

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("fan", opt.path, "Fan file (JSON)")->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", opt.timing, "Report elapsed time");
    return sub;
  };
  add("validate", "Check the fan axioms");
  add("invariants", "Pic, Cl, SF and U ranks, singular cones, nu");
  add("brauer", "Brauer group")->add_flag("--emit-cocycles", opt.emit_cocycles, "Emit monomial 2-cocycles");
  add("resolve", "Smooth subdivision")->add_option("--output,-o", opt.output, "Write the resolved fan here");
  CLI::App* cech = add("cech", "Cech cohomology of SF, U or W");
  cech->add_option("--sheaf", opt.sheaf, "sf, u or w");
  cech->add_option("--degree,-p", opt.degree, "Degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : toric::cli::kUsage;
  }
  opt.command = app.get_subcommands().front()->get_name();
  opt.format = format == "json" ? Format::Json : Format::Text;

  toric::cli::Outcome o = toric::cli::run(opt);
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}
