#include "galois/galois.h"

#include <exception>
#include <new>
#include <string>

#include "galois/report.hpp"
#include "galois/runner.hpp"

struct galois_config {
  galois::RunConfig config;
};

struct galois_report {
  galois::RunResult result;
};

namespace {

thread_local std::string last_error;

galois_status fail(galois_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
galois_status guarded(galois_config* cfg, Fn&& fn) {
  if (cfg == nullptr) return fail(GALOIS_E_NULL, "config is NULL");
  try {
    fn(cfg->config);
    last_error.clear();
    return GALOIS_OK;
  } catch (const std::invalid_argument& e) {
    return fail(GALOIS_E_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(GALOIS_E_INTERNAL, e.what());
  }
}

template <class Fn>
galois_status with_string(galois_config* cfg, const char* s, Fn&& fn) {
  if (s == nullptr) return fail(GALOIS_E_NULL, "string argument is NULL");
  return guarded(cfg, [&](galois::RunConfig& c) { fn(c, std::string(s)); });
}

}  // namespace

extern "C" {

const char* galois_version(void) { return galois::kToolVersion.data(); }

const char* galois_last_error(void) { return last_error.c_str(); }

galois_status galois_config_new(galois_config** out) {
  if (out == nullptr) return fail(GALOIS_E_NULL, "out is NULL");
  *out = new (std::nothrow) galois_config{};
  return *out ? GALOIS_OK : fail(GALOIS_E_INTERNAL, "out of memory");
}

void galois_config_free(galois_config* cfg) { delete cfg; }

galois_status galois_config_set_command(galois_config* cfg, const char* command) {
  return with_string(cfg, command, [](galois::RunConfig& c, const std::string& s) {
    const auto parsed = galois::parse_command(s);
    if (!parsed) throw galois::UsageError("unknown command '" + s + "'");
    c.command = *parsed;
  });
}

galois_status galois_config_set_target(galois_config* cfg, const char* target) {
  return with_string(cfg, target, [](galois::RunConfig& c, const std::string& s) { c.target = s; });
}

galois_status galois_config_set_subject(galois_config* cfg, const char* subject) {
  return with_string(cfg, subject, [](galois::RunConfig& c, const std::string& s) { c.subject = s; });
}

galois_status galois_config_set_universe(galois_config* cfg, unsigned alphabet_size, unsigned max_len) {
  return guarded(cfg, [&](galois::RunConfig& c) {
    const galois::Universe u{alphabet_size, max_len};
    u.validate();
    c.universe = u;
  });
}

galois_status galois_config_set_pred(galois_config* cfg, const char* bitmask) {
  return with_string(cfg, bitmask, [](galois::RunConfig& c, const std::string& s) { c.pred = galois::parse_pred(s); });
}

galois_status galois_config_set_n(galois_config* cfg, uint64_t n) {
  return guarded(cfg, [&](galois::RunConfig& c) { c.n = n; });
}

galois_status galois_config_set_input(galois_config* cfg, const char* csv) {
  return with_string(cfg, csv, [](galois::RunConfig& c, const std::string& s) { c.input = s; });
}

galois_status galois_config_set_format(galois_config* cfg, galois_format format) {
  return guarded(cfg, [&](galois::RunConfig& c) {
    if (format != GALOIS_FORMAT_TEXT && format != GALOIS_FORMAT_JSON) throw galois::UsageError("unknown format");
    c.format = format == GALOIS_FORMAT_JSON ? galois::Format::json : galois::Format::text;
  });
}

galois_status galois_config_set_budget(galois_config* cfg, uint64_t budget) {
  return guarded(cfg, [&](galois::RunConfig& c) { c.budget = budget; });
}

galois_status galois_config_set_workers(galois_config* cfg, unsigned workers) {
  return guarded(cfg, [&](galois::RunConfig& c) {
    if (workers == 0) throw galois::UsageError("workers must be at least 1");
    c.workers = workers;
  });
}

galois_status galois_config_set_timing(galois_config* cfg, int enabled) {
  return guarded(cfg, [&](galois::RunConfig& c) { c.timing = enabled != 0; });
}

galois_status galois_run(const galois_config* cfg, galois_report** out) {
  if (cfg == nullptr || out == nullptr) return fail(GALOIS_E_NULL, "config or out is NULL");
  try {
    *out = new galois_report{galois::run(cfg->config)};
    last_error = (*out)->result.error;
    return GALOIS_OK;
  } catch (const std::exception& e) {
    *out = nullptr;
    return fail(GALOIS_E_INTERNAL, e.what());
  }
}

void galois_report_free(galois_report* report) { delete report; }

int galois_report_exit_code(const galois_report* report) { return report ? report->result.exit_code : 3; }

const char* galois_report_output(const galois_report* report) {
  return report ? report->result.output.c_str() : "";
}

const char* galois_report_error(const galois_report* report) { return report ? report->result.error.c_str() : ""; }

const char* galois_list_targets(void) {
  static const std::string listing = galois::list_targets();
  return listing.c_str();
}

}  // extern "C"
