#include <iostream>

#include <CLI11.hpp>

#include "gamma4/census.hpp"

#ifndef GAMMA4_DATA_DIR
#define GAMMA4_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
  using namespace gamma4;
  CLI::App app{"Non-orientable 4-genus census: Goeritz obstructions and band-move certificates"};
  app.require_subcommand(1);

  const std::filesystem::path data = GAMMA4_DATA_DIR;
  CensusConfig cfg;
  cfg.knots_file = data / "knots10.csv";
  cfg.known_file = data / "known.csv";
  cfg.certificates_file = data / "certs.json";
  std::string expect, out_path, order = "decreasing";
  std::uint64_t node_cap = cfg.embed.node_cap;

  auto add_data_opts = [&](CLI::App* sub) {
    sub->add_option("--knots", cfg.knots_file, "knot table (name,pd_code,signature,arf,determinant,slice,alternating)")
        ->check(CLI::ExistingFile);
    sub->add_option("--known", cfg.known_file, "known gamma4 values (name,gamma4)")->check(CLI::ExistingFile);
    sub->add_option("--certs", cfg.certificates_file, "certificate ledger (JSON)")->check(CLI::ExistingFile);
    sub->add_option("--node-cap", node_cap, "lattice search node cap")->check(CLI::PositiveNumber);
    sub->add_option("--order", order, "basis order for the lattice search")
        ->check(CLI::IsMember({"decreasing", "increasing"}));
  };

  auto* census = app.add_subcommand("census", "run the full pipeline and write a JSON report");
  add_data_opts(census);
  census->add_option("--expect", expect, "expected values (JSON)")->check(CLI::ExistingFile);
  census->add_option("--out", out_path, "report path");
  census->add_option("--jobs", cfg.jobs, "worker threads (default: OpenMP default)")->check(CLI::PositiveNumber);

  std::string knot_name;
  auto* knot = app.add_subcommand("knot", "print the full derivation for one knot");
  knot->add_option("name", knot_name, "knot name, e.g. 10_9")->required();
  add_data_opts(knot);

  std::string gram_file;
  std::size_t target_rank = 0;
  auto* emb = app.add_subcommand("embed", "decide whether a definite Gram matrix embeds in (Z^N, -Id)");
  emb->add_option("--gram", gram_file, "Gram matrix, one row of integers per line")
      ->required()
      ->check(CLI::ExistingFile);
  emb->add_option("--target-rank", target_rank, "N")->required();
  emb->add_option("--node-cap", node_cap, "search node cap")->check(CLI::PositiveNumber);
  emb->add_option("--order", order, "basis order")->check(CLI::IsMember({"decreasing", "increasing"}));

  CLI11_PARSE(app, argc, argv);
  cfg.embed.node_cap = node_cap;
  cfg.embed.order = order == "increasing" ? BasisOrder::IncreasingNorm : BasisOrder::DecreasingNorm;
  if (!expect.empty()) cfg.expected_file = expect;
  if (!out_path.empty()) cfg.output = out_path;

  try {
    if (*census) return cmd_census(cfg, std::cout);
    if (*knot) return cmd_knot(knot_name, cfg, std::cout);
    if (*emb) return cmd_embed(gram_file, target_rank, cfg.embed, std::cout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
