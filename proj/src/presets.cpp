#include "swrbd/presets.hpp"

#include <initializer_list>

namespace swrbd {

namespace {

// Basis order is (A, B, E_1, ..., E_{n-2}): one hyperbolic pair and n-2
// exceptional classes of square -1.
IntMatrix hyperbolic_plus_diagonal(std::size_t rank) {
  IntMatrix g(rank, rank);
  g(0, 1) = 1;
  g(1, 0) = 1;
  for (std::size_t i = 2; i < rank; ++i) g(i, i) = -1;
  return g;
}

ClassVector vec(std::initializer_list<long> coords) {
  ClassVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

std::vector<ClassVector> vecs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<ClassVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(vec(r));
  return out;
}

// Park's manifold P: blow-down of the chain R_0..R_5 in S^2 x S^2 # 12 -CP^2.
SearchConfig make_park_p() {
  // coordinates: (A, B, E1 .. E12)
  auto chain = vecs({
      {10, 8, -6, -4, -4, -4, -4, -4, -3, -4, -4, -2, -2, -2},  // R0
      {0, 1, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},             // R1 = B - E1 - E4
      {1, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},             // R2 = A - E2 - E3
      {0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0},              // R3 = E3 - E6
      {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0},              // R4 = E6 - E9
      {0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0},              // R5 = E4 - E7
  });
  auto spheres = vecs({
      {0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0},              // S1 = E5 - E8
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1},              // S2 = E12 - E10
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0},              // S3 = E10 - E11
      {1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0},             // S4 = A - E1 - E11
      {1, 1, -1, -1, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0},           // S5 = A + B - E1 - E2 - E5 - E8
      {0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 1, 0},              // S6 = -E5 + E10 + E11
      {-2, 0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 1, 0},              // S7 = 2E7 + 2E4 - 2A + E11
      {0, 0, 0, -1, 1, 0, -2, 1, 0, 0, 1, 0, 0, 0},             // S8 = E6 + E9 + E3 - E2 - 2E5
  });
  std::vector<ExtensionTuple> tuples;
  for (const ClassVector& t : vecs({{7, 0, 0, 0, 0, 0},
                                    {-1, 0, -2, 0, 0, 0},
                                    {5, 0, 0, 0, 0, -2},
                                    {-3, -2, 0, 0, 0, 0},
                                    {3, 0, 0, 0, -2, 0},
                                    {-7, 0, 0, 0, 0, 0},
                                    {1, 0, 0, -2, 0, 0}}))
    tuples.push_back(t);
  ClassVector h =
      vec({105, 92, -67, -51, -41, -38, -36, -41, -38, -36, -41, -18, -18, -18});
  ClassVector h_prime = vec({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});  // PD(A + B)
  return SearchConfig("park-p", hyperbolic_plus_diagonal(14), std::move(chain),
                      std::move(tuples), std::move(spheres), std::move(h), std::move(h_prime));
}

// Park's manifold Q: blow-down of the chain R_0..R_3 in S^2 x S^2 # 11 -CP^2.
SearchConfig make_park_q() {
  // coordinates: (A, B, E1 .. E11)
  auto chain = vecs({
      {7, 6, -4, -3, -3, -3, -3, -3, -2, -3, -3, -2, -2},  // R0
      {0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0},            // R1 = E4 - E7
      {0, 1, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},           // R2 = B - E1 - E4
      {1, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0},           // R3 = A - E2 - E3
  });
  auto spheres = vecs({
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1},            // S1 = E10 - E11
      {0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0},            // S2 = E5 - E6
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0},            // S3 = E8 - E9
      {0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0},            // S4 = E5 - E8
      {0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0},            // S5 = E2 - E3
      {1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0},           // S6 = A - E1 - E10
      {1, 1, -1, -1, 0, 0, -1, 0, 0, -1, 0, 0, 0},         // S7 = A + B - E1 - E2 - E5 - E8
      {2, 0, 0, 0, 0, -2, 0, 0, -2, 0, 0, 0, -1},          // S8 = 2A - 2E4 - 2E7 - E11
      {2, 2, -1, -1, -1, -1, -2, -1, -1, 0, 0, -1, 0},     // S9
  });
  std::vector<ExtensionTuple> tuples;
  for (const ClassVector& t : vecs({{5, 0, 0, 0},
                                    {-1, -2, 0, 0},
                                    {3, 0, 0, -2},
                                    {-5, 0, 0, 0},
                                    {1, 0, -2, 0}}))
    tuples.push_back(t);
  ClassVector h =
      vec({229, 226, -143, -113, -113, -86, -87, -87, -86, -87, -87, -58, -58});
  ClassVector h_prime = vec({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});  // PD(A + B)
  return SearchConfig("park-q", hyperbolic_plus_diagonal(13), std::move(chain),
                      std::move(tuples), std::move(spheres), std::move(h), std::move(h_prime));
}

}  // namespace

std::vector<std::string> preset_labels() { return {"park-p", "park-q"}; }

SearchConfig load_preset(const std::string& label) {
  if (label == "park-p") return make_park_p();
  if (label == "park-q") return make_park_q();
  std::string known;
  for (const std::string& l : preset_labels()) {
    if (!known.empty()) known += ", ";
    known += l;
  }
  throw UnknownPresetError("unknown preset '" + label + "' (known: " + known + ")");
}

}  // namespace swrbd
