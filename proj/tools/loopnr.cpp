// loopnr command-line tool: check, analyze, decompose, hom, generate, catalog.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "loopnr/commands.hpp"

namespace {

struct BoundFlags {
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> max_subloops;
  std::optional<std::size_t> max_families;
  std::optional<unsigned> threads;

  // Environment first, then flags on top.
  loopnr::Limits resolve() const {
    auto limits = loopnr::Limits::from_env();
    if (max_n) limits.max_n = *max_n;
    if (max_subloops) limits.max_subloops = *max_subloops;
    if (max_families) limits.max_families = *max_families;
    if (threads) limits.threads = *threads == 0 ? 1 : *threads;
    return limits;
  }
};

int finish(const loopnr::CommandResult& r) {
  std::fwrite(r.out.data(), 1, r.out.size(), stdout);
  std::fwrite(r.err.data(), 1, r.err.size(), stderr);
  std::fflush(stdout);
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite loops, loop near-rings and rings: validation, locality, radicals, decompositions"};
  app.require_subcommand(1);
  app.fallthrough();

  BoundFlags bounds;
  app.add_option("--max-n", bounds.max_n, "Largest structure any analysis accepts");
  app.add_option("--max-subloops", bounds.max_subloops, "Largest subloop / N-subloop lattice");
  app.add_option("--max-families", bounds.max_families, "Cap on enumerated idempotent families");
  app.add_option("--threads", bounds.threads, "Worker threads for the parallel scans");

  std::string target;

  auto* check = app.add_subcommand("check", "Validate a structure file against its declared kind");
  check->add_option("path", target, "Structure file (JSON or text)")->required();

  loopnr::AnalyzeOptions analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "Report units, idempotents, subloops, locality and radical");
  analyze->add_option("structure", target, "Structure file or generator spec")->required();
  analyze->add_flag("--subloops", analyze_opts.subloops, "Subloop and N-subloop lattices");
  analyze->add_flag("--local", analyze_opts.local, "Locality, decided two independent ways");
  analyze->add_flag("--radical", analyze_opts.radical, "Jacobson radical, computed two ways");
  analyze->add_flag("--idempotents", analyze_opts.idempotents, "Units and idempotents");
  analyze->add_flag("--text", analyze_opts.text, "Human-readable output");
  analyze->add_flag("--timing", analyze_opts.timing, "Append wall-clock timing (outside the report hash)");

  loopnr::DecomposeOptions decompose_opts;
  auto* decompose = app.add_subcommand("decompose", "Canonical primitive idempotent family of a ring");
  decompose->add_option("structure", target, "Structure file or generator spec")->required();
  decompose->add_flag("--verify-uniqueness", decompose_opts.verify_uniqueness,
                      "Enumerate every primitive family and match them up to isomorphism");
  decompose->add_flag("--text", decompose_opts.text, "Human-readable output");

  loopnr::HomOptions hom_opts;
  std::string hom_target, map_file;
  auto* hom = app.add_subcommand("hom", "Validate a homomorphism given by an element map");
  hom->add_option("source", target, "Source structure file or spec")->required();
  hom->add_option("target", hom_target, "Target structure file or spec")->required();
  hom->add_option("map", map_file, "Map file: JSON array or whitespace-separated images")->required();
  hom->add_flag("--transfer", hom_opts.transfer, "Compare locality of the source and of the image");
  hom->add_flag("--text", hom_opts.text, "Human-readable output");

  auto* gen = app.add_subcommand("generate", "Print a generated structure as a JSON structure file");
  gen->add_option("spec", target, "Generator spec, e.g. cyclic:6, matrix:cyclic:2,2, m0:nonassoc5")->required();

  bool catalog_text = false;
  auto* cat = app.add_subcommand("catalog", "List the bundled named structures");
  cat->add_flag("--text", catalog_text, "Tab-separated output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : loopnr::kExitParse;
  }

  const auto limits = bounds.resolve();
  if (check->parsed()) return finish(loopnr::cmd_check(target, limits));
  if (analyze->parsed()) return finish(loopnr::cmd_analyze(target, analyze_opts, limits));
  if (decompose->parsed()) return finish(loopnr::cmd_decompose(target, decompose_opts, limits));
  if (hom->parsed()) return finish(loopnr::cmd_hom(target, hom_target, map_file, hom_opts, limits));
  if (gen->parsed()) return finish(loopnr::cmd_generate(target, limits));
  return finish(loopnr::cmd_catalog(catalog_text));
}
