#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "matpow/identities.hpp"

namespace matpow {

/// JSON array of family reports, ordered by family id. elapsed_ms can be
/// dropped so two runs of the same configuration compare byte-identical.
inline nlohmann::ordered_json report_to_json(const std::vector<FamilyReport>& reports,
                                             bool include_elapsed = true) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& rep : reports) {
    const FamilyDescriptor& desc = family_by_id(rep.id).desc;
    nlohmann::ordered_json entry;
    entry["id"] = desc.id;
    entry["title"] = desc.title;
    entry["anchor"] = desc.anchor;
    entry["domain"] = rep.domain.empty() ? desc.domain : rep.domain;
    entry["instances"] = rep.instances;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& f : rep.failures) {
      nlohmann::ordered_json fj;
      fj["params"] = f.params;
      fj["lhs"] = f.lhs;
      fj["rhs"] = f.rhs;
      failures.push_back(std::move(fj));
    }
    entry["failures"] = std::move(failures);
    if (include_elapsed) entry["elapsed_ms"] = rep.elapsed_ms;
    arr.push_back(std::move(entry));
  }
  return arr;
}

inline std::string report_to_csv(const std::vector<FamilyReport>& reports) {
  std::ostringstream out;
  out << "id,instances,failures,elapsed_ms\n";
  for (const auto& rep : reports) {
    out << rep.id << ',' << rep.instances << ',' << rep.failures.size() << ','
        << rep.elapsed_ms << '\n';
  }
  return out.str();
}

inline std::string report_to_text(const std::vector<FamilyReport>& reports) {
  std::ostringstream out;
  for (const auto& rep : reports) {
    const FamilyDescriptor& desc = family_by_id(rep.id).desc;
    out << rep.id << "  " << (rep.failures.empty() ? "PASS" : "FAIL") << "  "
        << rep.instances << " instances  " << desc.title << '\n';
    for (const auto& f : rep.failures) {
      out << "    failed at";
      for (const auto& [k, v] : f.params) out << ' ' << k << '=' << v;
      out << "\n      lhs: " << f.lhs << "\n      rhs: " << f.rhs << '\n';
    }
  }
  return out.str();
}

/// Write via a temp file plus rename so readers never see a partial report.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw io_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw io_error("rename to " + path.string() + " failed: " + ec.message());
}

}  // namespace matpow
