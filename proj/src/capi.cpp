#include "afold/afold.h"

#include <json.hpp>

#include <memory>

#include "afold/catalog.hpp"
#include "afold/suites.hpp"

struct afold_report {
  afold::Report rep;
  std::string json, csv, text;  // rendered once, then cached
};

namespace {

thread_local std::string g_last_error;

std::vector<long> read_range(const nlohmann::json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end()) return {};
  if (it->is_number_integer()) return {it->get<long>()};
  return afold::parse_range_spec(it->get<std::string>());
}

afold::RunConfig read_config(const nlohmann::json& req, std::vector<std::string>& warnings) {
  afold::RunConfig cfg;
  cfg.verb = req.value("verb", "verify");
  cfg.suite = req.value("suite", "");
  if (req.contains("catalog")) {
    std::string id = req.at("catalog").get<std::string>();
    const afold::Arrangement* found = afold::catalog_find(id);
    if (!found) throw afold::StructuralError("unknown catalog id: " + id);
    cfg.arrangement = *found;
    cfg.input_id = id;
  } else if (req.contains("arrangement")) {
    cfg.arrangement = afold::Arrangement::from_json(req.at("arrangement").dump(), &warnings);
    cfg.input_id = "input";
  } else if (req.contains("arrangement_text")) {
    // Raw text goes through the arrangement parser so its errors carry the
    // offending offset.
    cfg.arrangement =
        afold::Arrangement::from_json(req.at("arrangement_text").get<std::string>(), &warnings);
    cfg.input_id = "input";
  }
  if (req.contains("input_id")) cfg.input_id = req.at("input_id").get<std::string>();
  cfg.a = read_range(req, "a");
  cfg.e = read_range(req, "e");
  cfg.c = read_range(req, "c");
  cfg.m = read_range(req, "m");
  cfg.t = read_range(req, "t");
  cfg.N = read_range(req, "N");
  cfg.s = read_range(req, "s");
  if (req.contains("budget_pairs")) cfg.budget.max_pairs = req.at("budget_pairs").get<uint64_t>();
  if (req.contains("budget_ms")) cfg.budget.max_ms = req.at("budget_ms").get<int64_t>();
  cfg.include_generic5 = req.value("include_generic5", false);
  return cfg;
}

}  // namespace

extern "C" {

unsigned afold_abi_version(void) { return 1; }

const char* afold_last_error(void) { return g_last_error.c_str(); }

afold_status afold_run(const char* request_json, afold_report** out) {
  if (!request_json || !out) {
    g_last_error = "null argument";
    return AFOLD_USAGE_ERROR;
  }
  *out = nullptr;
  try {
    nlohmann::json req = nlohmann::json::parse(request_json);
    std::vector<std::string> warnings;
    afold::RunConfig cfg = read_config(req, warnings);
    auto rep = std::make_unique<afold_report>();
    rep->rep = afold::run(cfg);
    rep->rep.notes = std::move(warnings);
    *out = rep.release();
    return AFOLD_OK;
  } catch (const nlohmann::json::parse_error& e) {
    g_last_error = e.what();
    return AFOLD_PARSE_ERROR;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return AFOLD_USAGE_ERROR;
  } catch (const afold::ParseError& e) {
    g_last_error = e.what();
    return AFOLD_PARSE_ERROR;
  } catch (const afold::StructuralError& e) {
    g_last_error = e.what();
    return AFOLD_USAGE_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AFOLD_INTERNAL_ERROR;
  }
}

const char* afold_report_render(afold_report* report, const char* format) {
  if (!report || !format) {
    g_last_error = "null argument";
    return nullptr;
  }
  try {
    std::string kind = format;
    std::string* cache = kind == "json"   ? &report->json
                         : kind == "csv"  ? &report->csv
                         : kind == "text" ? &report->text
                                          : nullptr;
    if (!cache) {
      g_last_error = "unknown format: " + kind;
      return nullptr;
    }
    if (cache->empty()) {
      *cache = kind == "json"  ? report->rep.to_json()
               : kind == "csv" ? report->rep.to_csv()
                               : report->rep.to_text();
    }
    return cache->c_str();
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

int afold_report_exit_code(const afold_report* report) {
  return report ? report->rep.exit_code() : 3;
}

void afold_report_free(afold_report* report) { delete report; }

}  // extern "C"
