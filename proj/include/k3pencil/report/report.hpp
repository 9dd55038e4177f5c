#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3pencil/exactmath/upoly.hpp"

namespace k3pencil {

/// `flagged` marks a documented inconsistency in the source formulas that
/// the tool reports instead of failing on.
enum class CheckStatus { pass, fail, flagged };
std::string to_string(CheckStatus s);

/// One entry of the verification report.
struct CheckRecord {
  std::string check_id;
  /// Anchor into docs/check_map.md.
  std::string paper_ref;
  CheckStatus status = CheckStatus::fail;
  nlohmann::json details;
  std::int64_t runtime_ms = 0;
};

/// Report schema identifier written as the top-level "schema" field.
inline constexpr const char* kReportSchema = "k3pencil/1";

/// Rationals and big integers are serialized as "p/q" / "p" strings.
std::string rat_string(const Rat& r);

nlohmann::json to_json(const CheckRecord& r);
/// {"schema", "summary": {pass, fail, flagged}, "checks": [...]}, records in the given order.
nlohmann::json report_json(const std::vector<CheckRecord>& records);
/// 0 when nothing failed (flagged is allowed), 1 otherwise.
int report_exit_code(const std::vector<CheckRecord>& records);

/// paper_ref anchor for a check id ("docs/check_map.md#<slug>").
std::string paper_ref_for(const std::string& check_id);
/// Every check id the runners below can emit, in report order.
const std::vector<std::string>& known_check_ids();

/**
 * Check runners. Each returns its records in a fixed order. Invalid
 * selectors (unknown surface, fiber, operator or identity id, bad lattice
 * expression) throw std::invalid_argument before any work is done; a
 * computation that throws is recorded as a failing check.
 */
/// surface: "q" or "branch"; s: "generic" or a rational (branch only).
std::vector<CheckRecord> singularity_checks(const std::string& surface, const std::string& s = "generic");
std::vector<CheckRecord> line_checks();
std::vector<CheckRecord> lattice_checks(const std::string& spec);
/// The model lattices of all fibers.
std::vector<CheckRecord> lattice_model_checks();
/// fiber: "generic", "s1" or "s-1" ("s=1", "s=-1" and "1", "-1" are accepted too).
std::vector<CheckRecord> picard_checks(const std::string& fiber, unsigned jobs = 0);
std::vector<CheckRecord> reflection_checks();
/// op: "apery", "fermi", "domb" or "all"; n = 0 uses 50 (40 for fermi);
/// corrected_only drops the records about the printed operators.
std::vector<CheckRecord> series_checks(const std::string& op, std::size_t n = 0, bool corrected_only = false);
/// only: an identity id or empty for all.
std::vector<CheckRecord> identity_checks(const std::string& only = "");
std::vector<CheckRecord> all_checks(unsigned jobs = 0);

}  // namespace k3pencil
