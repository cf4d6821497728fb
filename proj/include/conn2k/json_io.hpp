#pragma once

#include <string>

#include <json.hpp>

#include "conn2k/augmentation.hpp"
#include "conn2k/biset.hpp"
#include "conn2k/connectivity.hpp"
#include "conn2k/construction.hpp"
#include "conn2k/splitting.hpp"

// JSON shapes for every result type the CLI can emit. nlohmann::json keeps
// object keys sorted, so dumps are byte-deterministic.
namespace conn2k {

nlohmann::json to_json(const BiSet& x);
nlohmann::json to_json(const ConnectivityVerdict& v);
nlohmann::json to_json(const SplitTrace& tr);
nlohmann::json to_json(const Obstacle& ob);
nlohmann::json to_json(const BlockingBiSet& blk);
nlohmann::json to_json(const SplitOutcome& outcome);
nlohmann::json to_json(const CertificateFamily& fam);
nlohmann::json to_json(const AugmentationResult& res);

// Construction traces travel as JSON Lines: one step object per line,
// {"op":"add","u":..,"v":..} or {"op":"pinch","edges":[..],"new":..}).
std::string to_jsonl(const ConstructionTrace& trace);

// Inverse of to_jsonl; k comes from the caller because the line format does
// not carry it. Bad lines raise parse_error with a 1-based line number.
ConstructionTrace trace_from_jsonl(const std::string& text, int k);

}  // namespace conn2k
