#include "freefid/records.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "freefid/errors.hpp"
#include "json.hpp"

namespace freefid {

namespace {

constexpr std::string_view kHeader = "mu,gamma,F_dmu,F_dgamma,F_min,det_sign,min_singular,singular_flag";

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

double parse_double(std::string_view field) {
  const std::string s(field);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw Error(ErrorCode::IOError, "malformed number '" + s + "'");
  return v;
}

bool parse_bool(std::string_view field) {
  if (field == "true") return true;
  if (field == "false") return false;
  throw Error(ErrorCode::IOError, "malformed boolean '" + std::string(field) + "'");
}

std::vector<SweepRecord> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw Error(ErrorCode::IOError, "missing CSV header");
  std::vector<SweepRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 8) throw Error(ErrorCode::IOError, "expected 8 CSV fields: " + line);
    SweepRecord r;
    r.mu = parse_double(fields[0]);
    r.gamma = parse_double(fields[1]);
    r.f_dmu = parse_double(fields[2]);
    r.f_dgamma = parse_double(fields[3]);
    r.f_min = parse_double(fields[4]);
    r.det_sign = static_cast<int>(parse_double(fields[5]));
    r.min_singular = parse_double(fields[6]);
    r.singular_flag = parse_bool(fields[7]);
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::string format_records(std::span<const SweepRecord> records, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out(kHeader);
    out += '\n';
    for (const SweepRecord& r : records) {
      out += fmt12(r.mu) + ',' + fmt12(r.gamma) + ',' + fmt12(r.f_dmu) + ',' + fmt12(r.f_dgamma) + ',' +
             fmt12(r.f_min) + ',' + std::to_string(r.det_sign) + ',' + fmt12(r.min_singular) + ',' +
             (r.singular_flag ? "true" : "false") + '\n';
    }
    return out;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SweepRecord& r : records) {
    nlohmann::ordered_json obj;
    obj["mu"] = round12(r.mu);
    obj["gamma"] = round12(r.gamma);
    obj["F_dmu"] = round12(r.f_dmu);
    obj["F_dgamma"] = round12(r.f_dgamma);
    obj["F_min"] = round12(r.f_min);
    obj["det_sign"] = r.det_sign;
    obj["min_singular"] = round12(r.min_singular);
    obj["singular_flag"] = r.singular_flag;
    arr.push_back(std::move(obj));
  }
  return arr.dump(1) + '\n';
}

std::vector<SweepRecord> parse_records(std::string_view text, OutputFormat format) {
  if (format == OutputFormat::Csv) return parse_csv(text);
  std::vector<SweepRecord> out;
  try {
    const auto arr = nlohmann::json::parse(text);
    for (const auto& obj : arr) {
      SweepRecord r;
      r.mu = obj.at("mu").get<double>();
      r.gamma = obj.at("gamma").get<double>();
      r.f_dmu = obj.at("F_dmu").get<double>();
      r.f_dgamma = obj.at("F_dgamma").get<double>();
      r.f_min = obj.at("F_min").get<double>();
      r.det_sign = obj.at("det_sign").get<int>();
      r.min_singular = obj.at("min_singular").get<double>();
      r.singular_flag = obj.at("singular_flag").get<bool>();
      out.push_back(r);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::IOError, std::string("malformed JSON records: ") + e.what());
  }
  return out;
}

std::string format_boundary(std::span<const BoundaryPoint> points, int size, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out = "# model=complete-graph size=" + std::to_string(size) + "\nmu,gamma\n";
    for (const BoundaryPoint& p : points) out += fmt12(p.mu) + ',' + fmt12(p.gamma) + '\n';
    return out;
  }
  nlohmann::ordered_json doc;
  doc["model"] = "complete-graph";
  doc["size"] = size;
  doc["points"] = nlohmann::ordered_json::array();
  for (const BoundaryPoint& p : points) {
    doc["points"].push_back({{"mu", round12(p.mu)}, {"gamma", round12(p.gamma)}});
  }
  return doc.dump(1) + '\n';
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::IOError, "failed writing to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IOError, "cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::IOError, "failed writing '" + path + "'");
}

void emit_records(std::span<const SweepRecord> records, OutputFormat format, const std::string& path) {
  if (records.empty()) throw Error(ErrorCode::IOError, "no records to emit");
  write_text(format_records(records, format), path);
}

}  // namespace freefid
