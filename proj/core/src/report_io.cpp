#include "entinv/report_io.hpp"

#include <sstream>

#include "json.hpp"
#include "entinv/state_text.hpp"

namespace entinv {

using nlohmann::ordered_json;

namespace {

ordered_json dims_json(const Shape& s) { return ordered_json(s.dims()); }

// CSV field quoting for text that may contain commas or quotes.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string report_json(const SearchReport& report) {
  ordered_json j;
  j["shape"] = dims_json(report.shape);
  j["coeff_spec"] = report.coeff_spec;
  j["seed"] = report.seed ? ordered_json(*report.seed) : ordered_json(nullptr);
  j["total_states_examined"] = report.total_states_examined;
  j["distinct_signatures"] = report.signatures.size();
  ordered_json list = ordered_json::array();
  for (const auto& hit : report.signatures) {
    list.push_back({{"signature", hit.signature.to_string()},
                    {"representative", render_state(hit.representative)},
                    {"hits", hit.hits}});
  }
  j["signatures"] = std::move(list);
  return j.dump(2);
}

std::string invariants_json(const Signature& s, const GeneratingSet& r) {
  ordered_json fams = ordered_json::array();
  for (std::size_t k = 0; k < r.families.size(); ++k) {
    fams.push_back({{"label", r.labels[k]}, {"family", r.families[k].to_string()}});
  }
  ordered_json j;
  j["signature"] = s.to_string();
  j["generating_set"] = std::move(fams);
  return j.dump(2);
}

std::string classification_json(const Classification& c) {
  ordered_json j;
  j["label"] = c.record ? c.record->label : "unknown";
  j["signature"] = c.signature.to_string();
  j["orbit"] = c.record ? ordered_json(c.record->orbit_id) : ordered_json(nullptr);
  return j.dump(2);
}

std::string atlas_json(const Atlas& atlas) {
  ordered_json j;
  j["family"] = atlas.family;
  j["shape"] = dims_json(atlas.shape);
  j["generating_set"] = atlas.generating_set.labels;
  j["orbit_count"] = atlas.orbit_count;
  ordered_json rows = ordered_json::array();
  for (const auto& r : atlas.records) {
    rows.push_back({{"label", r.label},
                    {"signature", r.signature.to_string()},
                    {"representative", r.representative},
                    {"orbit", r.orbit_id}});
  }
  j["records"] = std::move(rows);
  return j.dump(2);
}

std::string atlas_csv(const Atlas& atlas) {
  std::ostringstream out;
  out << "label,signature,representative,orbit\n";
  for (const auto& r : atlas.records) {
    out << r.label << ',' << csv_field(r.signature.to_string()) << ',' << csv_field(r.representative) << ','
        << r.orbit_id << '\n';
  }
  return out.str();
}

std::string hvector_json(const HVector& h) {
  ordered_json values = ordered_json::array();
  for (const auto& x : h.values) values.push_back(x.to_string());
  ordered_json j;
  j["h_values"] = std::move(values);
  j["zero_pattern"] = zero_pattern(h).to_string();
  j["relations_ok"] = h.values.size() == 7 ? ordered_json(check_relations(h)) : ordered_json(nullptr);
  return j.dump(2);
}

std::string mset_json(const MSet& m) { return ordered_json(m.values).dump(); }

}  // namespace entinv
