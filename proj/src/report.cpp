#include "linfor/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace linfor {

namespace {

nlohmann::ordered_json count_json(const WideCount& c) {
  if (c.fits_u64()) return c.to_u64();
  return c.to_string();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

template <class Range, class Fn>
std::string join(const Range& items, Fn&& render) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += ';';
    out += render(item);
    first = false;
  }
  return out;
}

}  // namespace

bool ReportDocument::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const TheoremReport& r) { return r.pass; });
}

std::string to_json(const ReportDocument& doc) {
  nlohmann::ordered_json root;
  root["schema"] = 1;
  root["command"] = doc.command;
  root["all_pass"] = doc.all_pass();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const TheoremReport& r : doc.rows) {
    nlohmann::ordered_json row;
    row["theorem"] = r.theorem;
    row["kind"] = r.kind;
    row["n"] = r.n;
    row["k"] = r.k;
    row["r"] = r.r;
    row["d"] = r.d ? nlohmann::ordered_json(*r.d) : nlohmann::ordered_json(nullptr);
    row["formula_value"] = count_json(r.formula_value);
    row["oracle_value"] = count_json(r.oracle_value);
    row["verdict"] = r.pass ? "pass" : "fail";
    row["witnesses"] = r.witnesses;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.details) details[key] = value;
    row["details"] = std::move(details);
    rows.push_back(std::move(row));
  }
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

std::string to_csv(const ReportDocument& doc) {
  std::ostringstream out;
  out << "theorem,kind,n,k,r,d,formula_value,oracle_value,verdict,witnesses,details\n";
  for (const TheoremReport& r : doc.rows) {
    out << csv_field(r.theorem) << ',' << csv_field(r.kind) << ',' << r.n << ',' << r.k << ',' << r.r << ','
        << (r.d ? std::to_string(*r.d) : std::string()) << ',' << r.formula_value << ',' << r.oracle_value << ','
        << (r.pass ? "pass" : "fail") << ',' << csv_field(join(r.witnesses, [](const std::string& w) { return w; }))
        << ','
        << csv_field(join(r.details, [](const auto& kv) { return kv.first + "=" + kv.second; })) << '\n';
  }
  return out.str();
}

}  // namespace linfor
