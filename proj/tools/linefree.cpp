#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace linefree::cli;
  CLI::App app{"Classify plane line arrangements as free, nearly free or neither"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandOptions opt;
  std::map<std::string, OutputFormat> formats{{"human", OutputFormat::Human},
                                              {"json", OutputFormat::Json},
                                              {"csv", OutputFormat::Csv},
                                              {"markdown", OutputFormat::Markdown}};
  app.add_option("--format", opt.format, "Output format: human, json, csv or markdown")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->option_text("human|json|csv|markdown");
  std::uint64_t modulus = 0;
  auto* mod_opt = app.add_option("--modulus", modulus,
                                 "Prime for the modular prefilter (results are still certified exactly)");
  int max_degree = 0;
  auto* deg_opt = app.add_option("--max-degree", max_degree, "Largest syzygy degree searched (default d)");
  app.add_option("--threads", opt.threads, "Worker threads, 0 = all cores")->capture_default_str();

  std::string path;
  std::optional<std::string> entry;
  auto* analyze = app.add_subcommand("analyze", "Print d, t-vector, mu and the simplicial flag");
  analyze->add_option("path", path, "Catalogue file, builtin:table1 or builtin:fixtures")->required();
  analyze->add_option("entry", entry, "Entry name (default: all entries)");
  auto* screen = app.add_subcommand("screen", "Discriminant screen for every entry");
  screen->add_option("path", path, "Catalogue file, builtin:table1 or builtin:fixtures")->required();
  auto* classify = app.add_subcommand("classify", "Exact classification of entries with coordinates");
  classify->add_option("path", path, "Catalogue file, builtin:table1 or builtin:fixtures")->required();
  classify->add_option("entry", entry, "Entry name (default: all entries)");
  app.add_subcommand("table", "Reproduce the table of sporadic simplicial arrangements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_code::parse_error;
  }
  if (*mod_opt) opt.modulus = modulus;
  if (*deg_opt) opt.max_degree = max_degree;

  if (*analyze) return cmd_analyze(path, entry, opt, std::cout, std::cerr);
  if (*screen) return cmd_screen(path, opt, std::cout, std::cerr);
  if (*classify) return cmd_classify(path, entry, opt, std::cout, std::cerr);
  return cmd_table(opt, std::cout, std::cerr);
}
