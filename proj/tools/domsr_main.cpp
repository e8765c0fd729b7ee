#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "domsr/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"domsr: finite-model laboratory for domain semirings"};
  app.require_subcommand(1);

  domsr::cli::CheckArgs check_args;
  auto* check = app.add_subcommand("check", "parse an algebra and run law suites");
  check->add_option("file", check_args.file, "algebra or graph file");
  check->add_option("--builtin", check_args.builtin, "built-in structure name");
  check->add_option("--rel", check_args.rel, "relation algebra over an m-point universe (1..3)");
  check->add_option("--laws", check_args.laws_csv, "comma-separated law or group names");
  check->add_option("--suite", check_args.suite, "coincidence | quantale | derived");
  check->add_option("--dom-via", check_args.dom_via,
                    "install a dom map computed from the order: top | inf");
  check->add_flag("--exhaustive", check_args.exhaustive, "disable sampling on large models");

  domsr::cli::SearchArgs search_args;
  auto* search = app.add_subcommand("search", "enumerate small models for a law query");
  search->add_option("--satisfy", search_args.satisfy_csv, "laws every model must pass");
  search->add_option("--violate", search_args.violate_csv, "laws every model must fail");
  search->add_option("--max-size", search_args.max_size, "carrier bound (1..6)");
  search->add_option("--limit", search_args.limit, "stop after this many models");
  search->add_flag("--iso-reject", search_args.iso_reject, "emit one model per isomorphism class");
  search->add_flag("--exhaustive", search_args.exhaustive, "disable sampling on large models");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return domsr::cli::run_check(check_args, std::cout);
  return domsr::cli::run_search(search_args, std::cout);
}
