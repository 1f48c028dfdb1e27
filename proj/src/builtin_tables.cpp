#include "stickel/characters.hpp"

namespace stickel {

namespace {

// Standalone tables for small nonabelian groups that are not covered by a
// closed form. Classes are listed with their power maps; binding to a
// concrete group happens by class matching.
constexpr const char* kS3 = R"({
  "name": "S3", "order": 6,
  "classes": [{"size": 1, "rep_order": 1}, {"size": 3, "rep_order": 2},
              {"size": 2, "rep_order": 3}],
  "power_map": [[0,0,0], [1,0,0],[1,1,1], [2,0,0],[2,1,2],[2,2,2]],
  "characters": [[1, 1, 1], [1, -1, 1], [2, 0, -1]]
})";

constexpr const char* kD4 = R"({
  "name": "D4", "order": 8,
  "classes": [{"size": 1, "rep_order": 1}, {"size": 1, "rep_order": 2},
              {"size": 2, "rep_order": 4}, {"size": 2, "rep_order": 2},
              {"size": 2, "rep_order": 2}],
  "power_map": [[0,0,0], [1,0,0],[1,1,1], [2,0,0],[2,1,2],[2,2,1],[2,3,2],
                [3,0,0],[3,1,3], [4,0,0],[4,1,4]],
  "characters": [[1, 1, 1, 1, 1], [1, 1, 1, -1, -1], [1, 1, -1, 1, -1],
                 [1, 1, -1, -1, 1], [2, -2, 0, 0, 0]]
})";

constexpr const char* kQ8 = R"({
  "name": "Q8", "order": 8,
  "classes": [{"size": 1, "rep_order": 1}, {"size": 1, "rep_order": 2},
              {"size": 2, "rep_order": 4}, {"size": 2, "rep_order": 4},
              {"size": 2, "rep_order": 4}],
  "power_map": [[0,0,0], [1,0,0],[1,1,1],
                [2,0,0],[2,1,2],[2,2,1],[2,3,2],
                [3,0,0],[3,1,3],[3,2,1],[3,3,3],
                [4,0,0],[4,1,4],[4,2,1],[4,3,4]],
  "characters": [[1, 1, 1, 1, 1], [1, 1, 1, -1, -1], [1, 1, -1, 1, -1],
                 [1, 1, -1, -1, 1], [2, -2, 0, 0, 0]]
})";

constexpr const char* kA4 = R"({
  "name": "A4", "order": 12,
  "classes": [{"size": 1, "rep_order": 1}, {"size": 3, "rep_order": 2},
              {"size": 4, "rep_order": 3}, {"size": 4, "rep_order": 3}],
  "power_map": [[0,0,0], [1,0,0],[1,1,1], [2,0,0],[2,1,2],[2,2,3], [3,0,0],[3,1,3],[3,2,2]],
  "characters": [
    [1, 1, 1, 1],
    [1, 1, {"conductor": 3, "terms": [[1,1,1]]}, {"conductor": 3, "terms": [[1,1,2]]}],
    [1, 1, {"conductor": 3, "terms": [[1,1,2]]}, {"conductor": 3, "terms": [[1,1,1]]}],
    [3, -1, 0, 0]]
})";

constexpr const char* kS4 = R"({
  "name": "S4", "order": 24,
  "classes": [{"size": 1, "rep_order": 1}, {"size": 6, "rep_order": 2},
              {"size": 3, "rep_order": 2}, {"size": 8, "rep_order": 3},
              {"size": 6, "rep_order": 4}],
  "power_map": [[0,0,0], [1,0,0],[1,1,1], [2,0,0],[2,1,2], [3,0,0],[3,1,3],[3,2,3],
                [4,0,0],[4,1,4],[4,2,2],[4,3,4]],
  "characters": [[1, 1, 1, 1, 1], [1, -1, 1, 1, -1], [2, 0, 2, -1, 0],
                 [3, 1, -1, 0, -1], [3, -1, -1, 0, 1]]
})";

}  // namespace

const std::vector<nlohmann::json>& builtin_table_documents() {
  static const std::vector<nlohmann::json> docs = [] {
    std::vector<nlohmann::json> out;
    for (const char* text : {kS3, kD4, kQ8, kA4, kS4}) out.push_back(nlohmann::json::parse(text));
    return out;
  }();
  return docs;
}

}  // namespace stickel
