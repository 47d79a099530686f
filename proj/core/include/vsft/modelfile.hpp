#pragma once

#include "vsft/models.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vsft {

inline constexpr const char* kModelSchema = "vsft-model/1";
inline constexpr const char* kClaimSchema = "vsft-claims/1";

/// Where a claim's model comes from: a catalog entry with parameter
/// overrides, or an explicit model (inline or loaded from a file).
struct ModelSpec {
  std::optional<std::string> catalog;
  std::map<std::string, std::int64_t> params;
  std::optional<RingModel> model;

  /// Builds the model; catalog entries apply `overrides` on top of params.
  RingModel resolve(const std::map<std::string, std::int64_t>& overrides = {}) const;
};

struct ClaimRecord {
  ModelSpec model;
  CatalogClaim claim;
};

/// Full explicit form of a model. Parsing it back yields an equal model.
std::string export_model(const RingModel& model);
/// Accepts the explicit form or {"schema", "catalog", "params"}. Throws
/// SchemaError naming the line or field at fault.
RingModel import_model(std::string_view text);

/// Claim files resolve "model": {"file": ...} relative to base_dir.
std::vector<ClaimRecord> parse_claim_file(std::string_view text, const std::filesystem::path& base_dir = {});
std::string export_claims(const std::vector<ClaimRecord>& records);

/// The catalog's own claims at default truncation, one record each.
std::vector<ClaimRecord> catalog_suite();

std::string read_text_file(const std::filesystem::path& path);

}  // namespace vsft
