// Command-line front end; talks to the core exclusively through the C API.

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "gobelin/gobelin.h"

namespace {

struct JobHandle {
  gob_job* job = nullptr;
  ~JobHandle() { gob_job_free(job); }
};

struct ReportHandle {
  gob_report* report = nullptr;
  ~ReportHandle() { gob_report_free(report); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { gob_string_free(s); }
};

int bail(gob_status st) {
  std::fprintf(stderr, "error (%s): %s\n", gob_last_error_code(), gob_last_error());
  return static_cast<int>(st);
}

struct CommonOpts {
  std::string job_path;
  std::string format = "text";
  std::string formula = "general";
  std::string dump_dir;
  unsigned max_degree = 64;
  bool cross_check = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool full) {
  cmd->add_option("job", o.job_path, "job file (line-oriented key = value)")->required();
  cmd->add_option("--format", o.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-degree", o.max_degree, "degree cap for local reductions (default 64)");
  if (full) {
    cmd->add_flag("--cross-check", o.cross_check,
                  "also run every applicable low-codimension specialization and compare");
    cmd->add_option("--formula", o.formula,
                    "index route: general|codim1|codim2|curve|surface")
        ->check(CLI::IsMember({"general", "codim1", "codim2", "curve", "surface"}));
    cmd->add_option("--dump-matrices", o.dump_dir,
                    "write the complex's matrices as plain text into this directory");
  }
}

gob_status load(const CommonOpts& o, JobHandle& h, bool full) {
  gob_status st = gob_job_parse_file(o.job_path.c_str(), &h.job);
  if (st != GOB_OK) return st;
  if ((st = gob_job_set_max_degree(h.job, o.max_degree)) != GOB_OK) return st;
  if (full) {
    if ((st = gob_job_set_formula(h.job, o.formula.c_str())) != GOB_OK) return st;
    if ((st = gob_job_set_cross_check(h.job, o.cross_check ? 1 : 0)) != GOB_OK) return st;
    if (!o.dump_dir.empty() && (st = gob_job_set_dump_dir(h.job, o.dump_dir.c_str())) != GOB_OK)
      return st;
  }
  return GOB_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homological / GSV index of a vector field tangent to an isolated complete "
               "intersection singularity (exact arithmetic)"};
  app.require_subcommand(1);

  CommonOpts index_opts, tangency_opts, dim_opts, tau_opts;
  CLI::App* cmd_index = app.add_subcommand("index", "compute the index report");
  add_common(cmd_index, index_opts, true);
  CLI::App* cmd_tangency =
      app.add_subcommand("tangency", "verify the tangency identity or recover a cofactor matrix");
  add_common(cmd_tangency, tangency_opts, false);
  CLI::App* cmd_dim = app.add_subcommand("dim", "print dim B = dim O/(X_1,...,X_N)");
  add_common(cmd_dim, dim_opts, false);
  CLI::App* cmd_tau = app.add_subcommand("tau", "print tau' = dim O_V/I_k(phi)");
  add_common(cmd_tau, tau_opts, false);

  CLI11_PARSE(app, argc, argv);

  if (cmd_index->parsed()) {
    JobHandle job;
    gob_status st = load(index_opts, job, true);
    if (st != GOB_OK) return bail(st);
    ReportHandle report;
    if ((st = gob_index(job.job, &report.report)) != GOB_OK) return bail(st);
    StringHandle text;
    if ((st = gob_report_render(report.report, index_opts.format.c_str(), &text.s)) != GOB_OK)
      return bail(st);
    std::fputs(text.s, stdout);
    return 0;
  }

  if (cmd_tangency->parsed()) {
    JobHandle job;
    gob_status st = load(tangency_opts, job, false);
    if (st != GOB_OK) return bail(st);
    StringHandle text;
    if ((st = gob_tangency(job.job, tangency_opts.format.c_str(), &text.s)) != GOB_OK)
      return bail(st);
    std::fputs(text.s, stdout);
    return 0;
  }

  if (cmd_dim->parsed()) {
    JobHandle job;
    gob_status st = load(dim_opts, job, false);
    if (st != GOB_OK) return bail(st);
    long long dim = 0;
    if ((st = gob_dim_b(job.job, &dim)) != GOB_OK) return bail(st);
    if (dim_opts.format == "json")
      std::printf("{\n  \"dimB\": %lld\n}\n", dim);
    else
      std::printf("dim B = %lld\n", dim);
    return 0;
  }

  if (cmd_tau->parsed()) {
    JobHandle job;
    gob_status st = load(tau_opts, job, false);
    if (st != GOB_OK) return bail(st);
    long long tau = 0;
    if ((st = gob_tau_prime(job.job, &tau)) != GOB_OK) return bail(st);
    if (tau_opts.format == "json")
      std::printf("{\n  \"tauPrime\": %lld\n}\n", tau);
    else
      std::printf("tau' = %lld\n", tau);
    return 0;
  }

  return 0;
}
