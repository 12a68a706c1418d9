#include "swrbd/certificate.hpp"

#include <json.hpp>
#include <sstream>

namespace swrbd {

namespace {

using json = nlohmann::ordered_json;

json int_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json rat_to_json(const BigRat& v) {
  if (v.get_den() == 1) return int_to_json(v.get_num());
  return json(v.get_str());  // "num/den"
}

BigInt int_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ValidationError("certificate: " + where + " is not an integer");
}

BigRat rat_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return BigRat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    BigRat r(j.get<std::string>());
    r.canonicalize();
    return r;
  }
  throw ValidationError("certificate: " + where + " is not a rational");
}

std::string class_to_string(const ClassVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace

Certificate make_certificate(const SearchConfig& config, const StageReport& report) {
  Certificate cert;
  cert.label = config.label();
  cert.stage_counts = {report.count_candidates, report.count_characteristic,
                       report.count_dimension, report.count_basic};
  cert.basic_classes = report.basic_classes;
  for (const ClassVector& k : report.basic_classes) {
    cert.ambient_squares.push_back(square(config.form(), k));
    cert.blown_down_squares.push_back(blown_down_square(config.chain(), config.form(), k));
    cert.formal_dimensions.push_back(formal_dimension(config.chain(), config.form(), k));
  }
  cert.lemma_verified = report.lemma_verified;
  cert.minimal = report.minimal;
  cert.zero_pairing_diagnostics = report.zero_pairing_diagnostics;
  cert.tool_version = kToolVersion;
  cert.config_digest = config_digest(config);
  return cert;
}

std::string certificate_to_json(const Certificate& cert) {
  json doc;
  doc["label"] = cert.label;
  doc["tool_version"] = cert.tool_version;
  doc["config_digest"] = cert.config_digest;
  doc["stage_counts"] = json::array(
      {cert.stage_counts[0], cert.stage_counts[1], cert.stage_counts[2], cert.stage_counts[3]});
  doc["zero_pairing_diagnostics"] = cert.zero_pairing_diagnostics;
  json classes = json::array();
  for (const ClassVector& k : cert.basic_classes) {
    json arr = json::array();
    for (const BigInt& c : k) arr.push_back(int_to_json(c));
    classes.push_back(arr);
  }
  doc["basic_classes"] = classes;
  json sq = json::array(), bd = json::array(), fd = json::array();
  for (const BigInt& v : cert.ambient_squares) sq.push_back(int_to_json(v));
  for (const BigRat& v : cert.blown_down_squares) bd.push_back(rat_to_json(v));
  for (const BigRat& v : cert.formal_dimensions) fd.push_back(rat_to_json(v));
  doc["ambient_squares"] = sq;
  doc["blown_down_squares"] = bd;
  doc["formal_dimensions"] = fd;
  doc["lemma_verified"] = cert.lemma_verified;
  doc["minimal"] = cert.minimal;
  return doc.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("certificate is not valid JSON: ") + e.what());
  }
  for (const char* k :
       {"label", "tool_version", "config_digest", "stage_counts", "zero_pairing_diagnostics",
        "basic_classes", "ambient_squares", "blown_down_squares", "formal_dimensions",
        "lemma_verified", "minimal"})
    if (!doc.contains(k)) throw ValidationError(std::string("certificate: missing field '") + k + "'");
  Certificate cert;
  cert.label = doc["label"].get<std::string>();
  cert.tool_version = doc["tool_version"].get<std::string>();
  cert.config_digest = doc["config_digest"].get<std::string>();
  if (!doc["stage_counts"].is_array() || doc["stage_counts"].size() != 4)
    throw ValidationError("certificate: stage_counts must have 4 entries");
  for (int i = 0; i < 4; ++i) cert.stage_counts[i] = doc["stage_counts"][i].get<std::uint64_t>();
  cert.zero_pairing_diagnostics = doc["zero_pairing_diagnostics"].get<std::uint64_t>();
  for (const json& row : doc["basic_classes"]) {
    ClassVector v;
    for (const json& c : row) v.push_back(int_from_json(c, "basic_classes"));
    cert.basic_classes.push_back(std::move(v));
  }
  for (const json& c : doc["ambient_squares"])
    cert.ambient_squares.push_back(int_from_json(c, "ambient_squares"));
  for (const json& c : doc["blown_down_squares"])
    cert.blown_down_squares.push_back(rat_from_json(c, "blown_down_squares"));
  for (const json& c : doc["formal_dimensions"])
    cert.formal_dimensions.push_back(rat_from_json(c, "formal_dimensions"));
  cert.lemma_verified = doc["lemma_verified"].get<bool>();
  cert.minimal = doc["minimal"].get<bool>();
  return cert;
}

std::string render_certificate_text(const Certificate& cert) {
  std::ostringstream out;
  out << "instance:       " << cert.label << "\n";
  out << "tool version:   " << cert.tool_version << "\n";
  out << "config digest:  " << cert.config_digest << "\n";
  out << "stage funnel:\n";
  out << "  adjunctive candidates     " << cert.stage_counts[0] << "\n";
  out << "  integral characteristic   " << cert.stage_counts[1] << "\n";
  out << "  within dimension bound    " << cert.stage_counts[2] << "\n";
  out << "  opposite signs vs H, H'   " << cert.stage_counts[3] << "\n";
  out << "zero pairings at sign stage: " << cert.zero_pairing_diagnostics << "\n";

  // When the survivors are exactly a class and its negative, print the
  // compact +/- form.
  bool plus_minus_pair = false;
  if (cert.basic_classes.size() == 2) {
    plus_minus_pair = true;
    for (std::size_t i = 0; i < cert.basic_classes[0].size(); ++i)
      if (cert.basic_classes[0][i] != -cert.basic_classes[1][i]) {
        plus_minus_pair = false;
        break;
      }
  }
  if (plus_minus_pair) {
    out << "basic classes: +/-" << class_to_string(cert.basic_classes[0]) << "\n";
  } else {
    out << "basic classes (" << cert.basic_classes.size() << "):\n";
    for (const ClassVector& k : cert.basic_classes)
      out << "  " << class_to_string(k) << "\n";
  }
  for (std::size_t i = 0; i < cert.basic_classes.size(); ++i) {
    out << "  class " << i << ": ambient square " << cert.ambient_squares[i].get_str()
        << ", blown-down square " << cert.blown_down_squares[i].get_str()
        << ", formal dimension " << cert.formal_dimensions[i].get_str() << "\n";
  }
  if (!cert.basic_classes.empty())
    out << "SW invariant of each basic class: +/-1 (nonzero; the sign is not fixed)\n";
  out << "lemma hypothesis (all basic classes zero-dimensional): "
      << (cert.lemma_verified ? "verified" : "NOT verified") << "\n";
  out << "minimality: "
      << (cert.minimal ? "certified (no -1 sphere splits off)"
                       : (cert.lemma_verified ? "NOT certified" : "not evaluated"))
      << "\n";
  return out.str();
}

}  // namespace swrbd
