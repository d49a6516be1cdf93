// lab: run experiments, generate corpora, list the catalog.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "projlab/error.hpp"
#include "projlab/lab/corpus.hpp"
#include "projlab/lab/experiment.hpp"

namespace {

constexpr int kClean = 0;
constexpr int kViolation = 1;
constexpr int kConfigError = 2;

std::optional<std::uint64_t> env_cap() {
  const char* raw = std::getenv("LAB_CAP");
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t pos = 0;
    const std::string text(raw);
    const unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size() || text[0] == '-' || v == 0) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw projlab::ConfigError("LAB_CAP", std::string("expected a positive integer, got '") + raw + "'");
  }
}

void list_experiments() {
  for (const auto& info : projlab::lab::experiment_catalog()) {
    std::cout << info.name << "  " << info.summary << '\n';
    for (const auto& p : info.params) {
      std::cout << "    " << p.name << " = " << p.default_value << "  (" << p.help << ")\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact incidence and projection experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> cap;
  std::string out;
  unsigned jobs = 1;
  app.add_option("--seed", seed, "master seed, overrides the config");
  app.add_option("--out", out, "report path (run) or output directory (corpus)");
  app.add_option("--cap", cap, "enumeration cap in points")->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string config_path;
  auto* run = app.add_subcommand("run", "run an experiment config");
  run->add_option("config", config_path, "experiment config file")->required();

  std::string spec_path;
  auto* corpus = app.add_subcommand("corpus", "generate a corpus from a spec file");
  corpus->add_option("spec", spec_path, "corpus spec file")->required();

  auto* list = app.add_subcommand("list-experiments", "print the experiment catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kClean : kConfigError;
  }

  try {
    if (list->parsed()) {
      list_experiments();
      return kClean;
    }
    if (corpus->parsed()) {
      auto spec = projlab::lab::read_corpus_spec(spec_path);
      if (seed) spec.seed = *seed;
      if (!out.empty()) spec.output_dir = out;
      const auto written = projlab::lab::write_corpus(spec);
      std::cout << "wrote " << written.size() << " files to " << spec.output_dir << '\n';
      return kClean;
    }
    auto config = projlab::lab::read_experiment_config(config_path);
    if (seed) config.seed = *seed;
    if (!out.empty()) config.output = out;
    if (cap) config.cap = *cap;
    if (auto c = env_cap()) config.cap = *c;
    config.jobs = jobs;
    projlab::lab::validate(config);
    const int status = projlab::lab::run_experiment(config);
    std::cout << config.experiment << ": " << (status == 0 ? "clean" : "blocking violation") << ", reports in "
              << config.output << '\n';
    return status == 0 ? kClean : kViolation;
  } catch (const projlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const projlab::SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
}
