#pragma once

#include <array>

#include "swrbd/config_io.hpp"

namespace swrbd {

inline constexpr const char* kToolVersion = "swrbd 1.0.0";

/// Reproducible record of one pipeline run. Carries no timestamps: the same
/// config digest always produces a byte-identical certificate.
struct Certificate {
  std::string label;
  std::array<std::uint64_t, 4> stage_counts{};
  std::vector<ClassVector> basic_classes;
  std::vector<BigInt> ambient_squares;
  std::vector<BigRat> blown_down_squares;
  std::vector<BigRat> formal_dimensions;
  bool lemma_verified = false;
  bool minimal = false;
  std::uint64_t zero_pairing_diagnostics = 0;
  std::string tool_version;
  std::string config_digest;

  bool operator==(const Certificate& other) const = default;
};

Certificate make_certificate(const SearchConfig& config, const StageReport& report);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);
std::string render_certificate_text(const Certificate& cert);

}  // namespace swrbd
