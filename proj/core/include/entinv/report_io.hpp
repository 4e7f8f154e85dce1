#pragma once

#include <string>

#include "entinv/atlas.hpp"
#include "entinv/classical.hpp"
#include "entinv/explorer.hpp"
#include "entinv/invariant_engine.hpp"

namespace entinv {

// Machine-readable renderings used by the command line tool. JSON output is
// indented by two spaces and ends without a trailing newline.

std::string report_json(const SearchReport& report);

/// {"signature": "...", "generating_set": [{"label": ..., "family": ...}, ...]}
std::string invariants_json(const Signature& s, const GeneratingSet& r);

/// {"label": "C6" | "unknown", "signature": "...", "orbit": id | null}
std::string classification_json(const Classification& c);

/// Columns label, signature, representative, orbit.
std::string atlas_json(const Atlas& atlas);
std::string atlas_csv(const Atlas& atlas);

/// {"h_values": [...], "zero_pattern": "...", "relations_ok": bool | null}
std::string hvector_json(const HVector& h);

std::string mset_json(const MSet& m);

}  // namespace entinv
