#include "afold/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace afold {

void Report::sort() {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     if (a.check != b.check) return a.check < b.check;
                     if (a.input != b.input) return a.input < b.input;
                     return a.params < b.params;
                   });
}

int Report::exit_code() const {
  bool inconclusive = false;
  for (const auto& r : records) {
    if (r.verdict == Verdict::False) return 1;
    if (r.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

namespace {

std::string component_line(const PrimaryComponent& c) {
  std::string out = "<";
  for (size_t i = 0; i < c.basis.size(); ++i) {
    if (i) out += ", ";
    out += c.basis[i].format();
  }
  out += ">";
  if (c.exponent != 1) out += "^" + std::to_string(c.exponent);
  return out;
}

std::string params_compact(const CheckRecord& r) {
  std::string out;
  for (const auto& [k, v] : r.params) {
    if (!out.empty()) out += ";";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  if (!notes.empty()) doc["notes"] = notes;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json c;
    c["check"] = r.check;
    c["input"] = r.input;
    c["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) c["params"][k] = v;
    c["verdict"] = to_string(r.verdict);
    if (!r.witness.empty()) c["witness"] = r.witness;
    if (!r.components.empty()) {
      c["components"] = nlohmann::ordered_json::array();
      for (const auto& comp : r.components) {
        nlohmann::ordered_json jc;
        jc["basis"] = nlohmann::ordered_json::array();
        for (const auto& b : comp.basis) jc["basis"].push_back(b.format());
        jc["exponent"] = comp.exponent;
        c["components"].push_back(std::move(jc));
      }
    }
    if (!r.items.empty()) c["items"] = r.items;
    if (r.betti) {
      c["betti"] = nlohmann::ordered_json::array();
      for (const auto& [key, count] : r.betti->entries) {
        nlohmann::ordered_json e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["count"] = count;
        c["betti"].push_back(std::move(e));
      }
    }
    c["gb"] = {{"pairs", r.gb.pairs_generated},
               {"reduced", r.gb.pairs_reduced},
               {"zero", r.gb.zero_reductions},
               {"basis", r.gb.basis_size}};
    doc["checks"].push_back(std::move(c));
  }
  if (!records.empty()) {
    doc["ms"] = nlohmann::ordered_json::array();
    for (const auto& r : records) doc["ms"].push_back(r.ms);
  }
  return doc.dump();
}

std::string Report::to_csv() const {
  std::string out = "check,input,params,verdict,witness,pairs,basis,ms\n";
  for (const auto& r : records) {
    out += csv_field(r.check) + "," + csv_field(r.input) + "," + params_compact(r) + "," +
           to_string(r.verdict) + "," + csv_field(r.witness) + "," +
           std::to_string(r.gb.pairs_generated) + "," + std::to_string(r.gb.basis_size) + "," +
           std::to_string(r.ms) + "\n";
  }
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& n : notes) out << "note: " << n << "\n";
  long t = 0, f = 0, inc = 0;
  for (const auto& r : records) {
    const char* tag = r.verdict == Verdict::True      ? "[ true ]"
                      : r.verdict == Verdict::False   ? "[FALSE ]"
                                                      : "[maybe ]";
    (r.verdict == Verdict::True ? t : r.verdict == Verdict::False ? f : inc)++;
    out << tag << " " << r.check << " " << r.input;
    std::string p = params_compact(r);
    if (!p.empty()) out << " " << p;
    out << " (" << r.ms << " ms";
    if (r.gb.pairs_generated) out << ", " << r.gb.pairs_generated << " pairs";
    out << ")\n";
    if (!r.witness.empty()) out << "    witness: " << r.witness << "\n";
    for (const auto& comp : r.components) out << "    " << component_line(comp) << "\n";
    for (const auto& item : r.items) out << "    " << item << "\n";
    if (r.betti) {
      std::istringstream table(r.betti->render());
      std::string line;
      while (std::getline(table, line)) out << "    " << line << "\n";
    }
  }
  out << records.size() << " checks: " << t << " true, " << f << " false, " << inc
      << " inconclusive\n";
  return out.str();
}

}  // namespace afold
