#include "swrbd/config_io.hpp"

#include <json.hpp>

namespace swrbd {

namespace {

using json = nlohmann::ordered_json;

void require_keys(const json& obj, const char* where,
                  std::initializer_list<const char*> keys) {
  if (!obj.is_object()) throw SchemaError(std::string(where) + ": expected an object");
  for (const char* k : keys)
    if (!obj.contains(k))
      throw SchemaError(std::string(where) + ": missing field '" + k + "'");
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* kk : keys)
      if (k == kk) known = true;
    if (!known) throw SchemaError(std::string(where) + ": unknown field '" + k + "'");
  }
}

BigInt parse_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw SchemaError(where + ": expected an integer, got " + j.dump());
  return BigInt(static_cast<long>(j.get<long long>()));
}

ClassVector parse_vector(const json& j, std::size_t len, const std::string& where) {
  if (!j.is_array())
    throw SchemaError(where + ": expected an array of integers");
  if (j.size() != len)
    throw SchemaError(where + ": has " + std::to_string(j.size()) + " entries, expected " +
                      std::to_string(len));
  ClassVector v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    v.push_back(parse_int(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<ClassVector> parse_vectors(const json& j, std::size_t len,
                                       const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of vectors");
  std::vector<ClassVector> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_vector(j[i], len, where + "[" + std::to_string(i) + "]"));
  return out;
}

json int_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());  // out-of-range values round-trip as strings
}

json vector_to_json(const ClassVector& v) {
  json arr = json::array();
  for (const BigInt& c : v) arr.push_back(int_to_json(c));
  return arr;
}

json vectors_to_json(const std::vector<ClassVector>& vs) {
  json arr = json::array();
  for (const ClassVector& v : vs) arr.push_back(vector_to_json(v));
  return arr;
}

}  // namespace

SearchConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("config is not valid JSON: ") + e.what());
  }
  require_keys(doc, "config", {"label", "rank", "gram", "chain", "spheres", "H", "Hprime"});
  if (!doc["label"].is_string()) throw SchemaError("config.label: expected a string");
  std::string label = doc["label"].get<std::string>();
  if (!doc["rank"].is_number_integer() || doc["rank"].get<long long>() <= 0)
    throw SchemaError("config.rank: expected a positive integer");
  const std::size_t rank = static_cast<std::size_t>(doc["rank"].get<long long>());

  if (!doc["gram"].is_array() || doc["gram"].size() != rank)
    throw SchemaError("config.gram: expected " + std::to_string(rank) + " rows");
  IntMatrix gram(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    ClassVector row = parse_vector(doc["gram"][i], rank, "config.gram[" + std::to_string(i) + "]");
    for (std::size_t j = 0; j < rank; ++j) gram(i, j) = row[j];
  }

  const json& chain = doc["chain"];
  require_keys(chain, "config.chain", {"p", "classes", "extension_tuples"});
  BigInt p = parse_int(chain["p"], "config.chain.p");
  if (p < 0) throw SchemaError("config.chain.p: expected p >= 0");
  std::vector<ClassVector> chain_classes =
      parse_vectors(chain["classes"], rank, "config.chain.classes");
  if (BigInt(static_cast<long>(chain_classes.size())) != p + 1)
    throw SchemaError("config.chain.classes: found " + std::to_string(chain_classes.size()) +
                      " classes, expected p + 1 = " + BigInt(p + 1).get_str());
  std::vector<ExtensionTuple> tuples;
  if (!chain["extension_tuples"].is_array())
    throw SchemaError("config.chain.extension_tuples: expected an array");
  for (std::size_t i = 0; i < chain["extension_tuples"].size(); ++i)
    tuples.push_back(parse_vector(chain["extension_tuples"][i], chain_classes.size(),
                                  "config.chain.extension_tuples[" + std::to_string(i) + "]"));

  std::vector<ClassVector> spheres = parse_vectors(doc["spheres"], rank, "config.spheres");
  ClassVector h = parse_vector(doc["H"], rank, "config.H");
  ClassVector h_prime = parse_vector(doc["Hprime"], rank, "config.Hprime");

  return SearchConfig(std::move(label), std::move(gram), std::move(chain_classes),
                      std::move(tuples), std::move(spheres), std::move(h),
                      std::move(h_prime));
}

std::string serialize_config(const SearchConfig& config) {
  json doc;
  doc["label"] = config.label();
  doc["rank"] = config.form().rank();
  json gram = json::array();
  for (std::size_t i = 0; i < config.form().rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < config.form().rank(); ++j)
      row.push_back(int_to_json(config.form().gram()(i, j)));
    gram.push_back(row);
  }
  doc["gram"] = gram;
  json chain;
  chain["p"] = config.chain().p();
  chain["classes"] = vectors_to_json(config.chain().classes());
  chain["extension_tuples"] = vectors_to_json(config.chain().extension_tuples());
  doc["chain"] = chain;
  std::vector<ClassVector> sphere_vecs;
  for (const SphereClass& s : config.spheres()) sphere_vecs.push_back(s.cls);
  doc["spheres"] = vectors_to_json(sphere_vecs);
  doc["H"] = vector_to_json(config.H());
  doc["Hprime"] = vector_to_json(config.Hprime());
  return doc.dump(2) + "\n";
}

std::string config_digest(const SearchConfig& config) {
  // FNV-1a 64 over the canonical serialization.
  const std::string text = serialize_config(config);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xf];
  return out;
}

}  // namespace swrbd
