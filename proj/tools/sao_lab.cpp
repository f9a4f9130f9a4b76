#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "sao/exp/commands.hpp"
#include "sao/exp/config.hpp"
#include "sao/exp/output.hpp"

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
};

int fail(const std::string& out, const std::string& kind, const std::string& message, const std::string& key,
         int code) {
  nlohmann::json err = {{"error", {{"kind", kind}, {"message", message}}}};
  if (!key.empty()) err["error"]["key"] = key;
  std::cerr << err.dump() << "\n";
  if (!out.empty()) sao::exp::write_error(out, err);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic Airy operator laboratory", "sao-lab"};
  app.require_subcommand(1);
  Options opts;
  for (const auto& name : sao::exp::subcommands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", opts.config, "config document or run.json")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out, "output directory")->required();
    sub->add_option("--seed", opts.seed, "override the root seed");
    sub->add_option("--workers", opts.workers, "override the worker count");
  }

  if (argc > 1 && argv[1][0] != '-') {
    const auto& names = sao::exp::subcommands();
    if (std::find(names.begin(), names.end(), argv[1]) == names.end()) {
      std::cerr << app.help();
      return fail("", "usage", std::string("unknown subcommand '") + argv[1] + "'", "", 2);
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help();
    return fail(opts.out, "usage", e.what(), "", 2);
  }

  const auto* sub = app.get_subcommands().front();
  sao::exp::ExperimentConfig config;
  try {
    config = sao::exp::load_config(opts.config);
    if (opts.seed) config.seed = *opts.seed;
    if (opts.workers) config.workers = *opts.workers;
    config.validate();
  } catch (const sao::exp::ConfigError& e) {
    return fail(opts.out, "config", e.what(), e.key(), 2);
  } catch (const std::exception& e) {
    return fail(opts.out, "config", e.what(), "", 2);
  }

  try {
    const auto record = sao::exp::run_command(sub->get_name(), config);
    sao::exp::write_run(record, opts.out);
    std::cout << opts.out << "/run.json payload_hash=" << sao::exp::hex64(record.payload_hash()) << "\n";
  } catch (const sao::exp::ConfigError& e) {
    return fail(opts.out, "config", e.what(), e.key(), 2);
  } catch (const std::exception& e) {
    return fail(opts.out, "runtime", e.what(), "", 1);
  }
  return 0;
}
