#include "sao/exp/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sao/common/format.hpp"
#include "sao/rigidity/experiment.hpp"
#include "sao/trace/covariance.hpp"
#include "sao/trace/probes.hpp"
#include "sao/trace/spectral.hpp"

namespace sao::exp {

namespace {

constexpr std::string_view kSpectraTag = "spectra";

std::string num(double v) { return format_double(v); }
std::string num(std::size_t v) { return std::to_string(v); }
std::string num(long v) { return std::to_string(v); }

std::vector<Spectrum> spectra_for(const ExperimentConfig& c, std::size_t minimum) {
  if (c.spectral_samples < minimum) {
    throw ConfigError("spectral.samples", "must be >= " + std::to_string(minimum) + " for this subcommand");
  }
  return sample_spectra(c.ensemble(), c.spectral_samples, c.seed, kSpectraTag, c.workers);
}

void sample_spectrum_cmd(const ExperimentConfig& c, RunRecord& rec) {
  const auto spectra = spectra_for(c, 1);
  Table t{"results.csv", {"sample[index]", "level[index]", "eigenvalue[1]"}, {}};
  for (std::size_t s = 0; s < spectra.size(); ++s) {
    for (std::size_t j = 0; j < spectra[s].size(); ++j) t.add_row({num(s), num(j + 1), num(spectra[s].eigenvalues[j])});
  }
  rec.tables.push_back(std::move(t));
  rec.diagnostics["spectra"] = spectra.size();
  rec.diagnostics["levels_per_spectrum"] = c.k;
}

void trace_cmd(const ExperimentConfig& c, RunRecord& rec) {
  const auto spectra = spectra_for(c, 2);
  const auto mc = c.mc();
  Table t{"results.csv",
          {"method[label]", "semigroup_time[1]", "value[1]", "stderr[1]", "truncation_diagnostic[1]",
           "replicates[count]"},
          {}};
  for (double s : c.t) {
    const auto sp = mean_spectral_trace(spectra, s);
    t.add_row({to_string(sp.method), num(s), num(sp.value), num(sp.stderr), num(sp.truncation_diagnostic),
               num(spectra.size())});
    const auto fk = trace_fk(c.beta, c.boundary, s, mc);
    t.add_row({to_string(fk.method), num(s), num(fk.value), num(fk.stderr), num(fk.truncation_diagnostic),
               num(c.paths)});
  }
  rec.tables.push_back(std::move(t));
}

void covariance_cmd(const ExperimentConfig& c, RunRecord& rec) {
  const auto spectra = spectra_for(c, 2);
  const auto mc = c.mc();
  Table t{"results.csv",
          {"method[label]", "semigroup_time_t[1]", "semigroup_time_u[1]", "value[1]", "stderr[1]"},
          {}};
  for (double s : c.t) {
    for (double r : c.u) {
      const auto sp = covariance_from_spectra(spectra, s, r);
      t.add_row({to_string(sp.method), num(s), num(r), num(sp.value), num(sp.stderr)});
      const auto fk = covariance_fk(c.beta, c.boundary, s, r, mc);
      t.add_row({to_string(fk.method), num(s), num(r), num(fk.value), num(fk.stderr)});
    }
  }
  rec.tables.push_back(std::move(t));
}

void variance_limit_cmd(const ExperimentConfig& c, RunRecord& rec) {
  if (c.t.size() < 2) throw ConfigError("times.t", "variance-limit needs at least two times");
  const auto spectra = spectra_for(c, 3);
  const auto lim = variance_limit(spectra, c.t);
  Table t{"results.csv", {"row[label]", "semigroup_time[1]", "value[1]", "stderr[1]"}, {}};
  for (const auto& v : lim.variances) t.add_row({"variance", num(v.time_t), num(v.value), num(v.stderr)});
  t.add_row({"extrapolation", num(0.0), num(lim.intercept), num(lim.intercept_stderr)});
  rec.tables.push_back(std::move(t));
  rec.diagnostics["fit_variable"] = "semigroup_time^(1/4)";
  rec.diagnostics["slope"] = lim.slope;
  if (c.boundary.is_dirichlet() && c.beta == 2.0) {
    const double target = 1.0 / (4.0 * std::numbers::pi);
    rec.diagnostics["reference_limit"] = target;
    rec.diagnostics["z_score"] = lim.intercept_stderr > 0.0 ? (lim.intercept - target) / lim.intercept_stderr : 0.0;
  }
}

void moment_probe_cmd(const ExperimentConfig& c, RunRecord& rec) {
  const auto mc = c.mc();
  const auto opts = c.probe_options();
  std::vector<std::string> cols = {"bridge_horizon_t[1]", "bridge_horizon_u[1]", "x[1]", "y[1]", "pairs[count]"};
  for (const char* name : {"potential", "boundary", "self_intersection", "gaussian_term", "vanishing_term"}) {
    cols.push_back(std::string(name) + "[1]");
    cols.push_back(std::string(name) + "_stderr[1]");
  }
  cols.push_back("clipped[count]");
  Table t{"results.csv", cols, {}};
  std::size_t clipped = 0;
  for (double tt : c.t) {
    for (double uu : c.u) {
      for (double xx : c.x) {
        for (double yy : c.y) {
          const auto p = moment_probe(c.beta, c.boundary, tt, uu, xx, yy, mc, opts);
          std::vector<std::string> row = {num(tt), num(uu), num(xx), num(yy), num(p.pairs)};
          for (const auto* m : {&p.potential, &p.boundary, &p.self_intersection, &p.gaussian_term, &p.vanishing_term}) {
            row.push_back(num(m->value));
            row.push_back(num(m->stderr));
          }
          row.push_back(num(p.overflow_count));
          clipped += p.overflow_count;
          t.add_row(std::move(row));
        }
      }
    }
  }
  rec.tables.push_back(std::move(t));
  rec.diagnostics["clipped_samples"] = clipped;
  if (clipped > 0) rec.diagnostics["warning"] = "some exponents exceeded mc.exp_clip or overflowed";
}

void rigidity_cmd(const ExperimentConfig& c, RunRecord& rec) {
  const auto report = rigidity_experiment(c.rigidity());
  Table rows{"results.csv",
             {"replicate[index]", "true_count[count]", "estimate[count]", "estimate_stderr[count]",
              "prediction[count]"},
             {}};
  for (const auto& r : report.rows) {
    rows.add_row({num(r.replicate), num(r.true_count), num(r.estimate), num(r.estimate_stderr), num(r.prediction)});
  }
  Table mse{"mse.csv", {"depth[count]", "candidate[index]", "semigroup_time[1]", "reference_mean[1]", "mse[count^2]"}, {}};
  for (std::size_t n = 0; n < report.depth; ++n) {
    const double tn = report.tseq.selected_time(n);
    mse.add_row({num(n + 1), num(report.tseq.selected[n] + 1), num(tn),
                 num(report.reference.means[report.reference.index_of(tn)]), num(report.mse[n])});
  }
  rec.tables.push_back(std::move(rows));
  rec.tables.push_back(std::move(mse));
  rec.diagnostics["hit_rate"] = report.hit_rate;
  rec.diagnostics["depth"] = report.depth;
  rec.diagnostics["t_min"] = report.t_min;
  rec.diagnostics["candidates_above_t_min"] = report.tseq.candidates.size();
  rec.diagnostics["selection_complete"] = report.tseq.complete();
  rec.diagnostics["mse_trend_spearman_rho"] = report.trend.rho;
  rec.diagnostics["mse_trend_p_decreasing"] = report.trend.p_decreasing;
  double trunc = 0.0;
  for (double v : report.reference.truncation) trunc = std::max(trunc, v);
  rec.diagnostics["reference_truncation_max"] = trunc;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"sample-spectrum", "trace",        "covariance",
                                                 "variance-limit",  "moment-probe", "rigidity"};
  return names;
}

RunRecord run_command(std::string_view subcommand, const ExperimentConfig& config) {
  config.validate();
  RunRecord rec;
  rec.subcommand = std::string(subcommand);
  rec.config_snapshot = snapshot(config);
  rec.started_at = utc_timestamp();
  if (subcommand == "sample-spectrum") {
    sample_spectrum_cmd(config, rec);
  } else if (subcommand == "trace") {
    trace_cmd(config, rec);
  } else if (subcommand == "covariance") {
    covariance_cmd(config, rec);
  } else if (subcommand == "variance-limit") {
    variance_limit_cmd(config, rec);
  } else if (subcommand == "moment-probe") {
    moment_probe_cmd(config, rec);
  } else if (subcommand == "rigidity") {
    rigidity_cmd(config, rec);
  } else {
    throw std::invalid_argument("unknown subcommand '" + std::string(subcommand) + "'");
  }
  rec.finished_at = utc_timestamp();
  return rec;
}

}  // namespace sao::exp
