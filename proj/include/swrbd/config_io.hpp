#pragma once

#include "swrbd/search.hpp"

namespace swrbd {

struct SchemaError : ValidationError {
  explicit SchemaError(const std::string& what) : ValidationError(what) {}
};

/// Parses a config document (JSON, schema documented in the README). Schema
/// violations raise SchemaError; mathematical violations raise
/// ValidationError through the SearchConfig constructor.
SearchConfig parse_config(const std::string& text);

/// Canonical serialization; parse_config(serialize_config(c)) == c.
std::string serialize_config(const SearchConfig& config);

/// Stable digest of the canonical serialization.
std::string config_digest(const SearchConfig& config);

}  // namespace swrbd
