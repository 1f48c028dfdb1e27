#include <fstream>
#include <functional>

#include "stickel/characters.hpp"
#include "stickel/error.hpp"

namespace stickel {

namespace {

[[noreturn]] void fail(const std::string& relation, const std::string& detail = "") {
  throw Error(ErrorCode::TableValidation,
              "character table violates " + relation + (detail.empty() ? "" : ": " + detail));
}

}  // namespace

CharacterTable ingest_table(const nlohmann::json& doc) {
  if (!doc.is_object()) fail("document shape", "expected an object");
  for (const char* key : {"order", "classes", "characters"})
    if (!doc.contains(key)) fail("document shape", std::string("missing '") + key + "'");
  if (!doc.contains("power_map") || !doc.at("power_map").is_array())
    fail("power map required", "document has no power_map");

  ConjClassSet classes;
  try {
    for (const auto& c : doc.at("classes")) {
      classes.sizes.push_back(c.at("size").get<std::int64_t>());
      classes.rep_orders.push_back(c.at("rep_order").get<std::int64_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    fail("document shape", e.what());
  }
  const std::size_t k = classes.count();
  std::vector<std::vector<std::int64_t>> pm(k);
  for (ClassId c = 0; c < k; ++c) {
    if (classes.rep_orders[c] < 1) fail("representative orders", "non-positive order");
    pm[c].assign(static_cast<std::size_t>(classes.rep_orders[c]), -1);
  }
  for (const auto& entry : doc.at("power_map")) {
    if (!entry.is_array() || entry.size() != 3) fail("power map", "entries are [class, k, class]");
    const auto c = entry[0].get<std::int64_t>();
    const auto j = entry[1].get<std::int64_t>();
    const auto d = entry[2].get<std::int64_t>();
    if (c < 0 || static_cast<std::size_t>(c) >= k || d < 0 || static_cast<std::size_t>(d) >= k ||
        j < 0 || j >= classes.rep_orders[c])
      fail("power map", "entry out of range");
    pm[c][j] = d;
  }
  for (ClassId c = 0; c < k; ++c) {
    std::vector<ClassId> row;
    for (auto d : pm[c]) {
      if (d < 0)
        fail("power map required", "missing power of class " + std::to_string(c));
      row.push_back(static_cast<ClassId>(d));
    }
    classes.power_map.push_back(std::move(row));
  }

  std::vector<std::vector<Cyclotomic>> irr;
  try {
    for (const auto& row : doc.at("characters")) {
      std::vector<Cyclotomic> vals;
      for (const auto& v : row) vals.push_back(cyclotomic_from_json(v));
      irr.push_back(std::move(vals));
    }
  } catch (const Error& e) {
    fail("character values", e.what());
  } catch (const nlohmann::json::exception& e) {
    fail("character values", e.what());
  }
  validate_table_data(classes, irr, doc.at("order").get<std::int64_t>());
  return CharacterTable(std::move(classes), std::move(irr));
}

CharacterTable ingest_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open table file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::TableValidation, std::string("table file is not JSON: ") + e.what());
  }
  return ingest_table(doc);
}

CharacterTable bind_table(const CharacterTable& standalone, std::shared_ptr<const GroupTable> g) {
  const ConjClassSet& doc = standalone.classes();
  const ConjClassSet& grp = g->classes();
  const std::size_t k = grp.count();
  if (standalone.order() != g->order() || doc.count() != k)
    fail("group binding", "order or class count differs from the group");

  // a[i][j][l] = #{x in C_i : x^-1 rep_l in C_j}
  std::vector<std::int64_t> coef(k * k * k, 0);
  for (ClassId l = 0; l < k; ++l)
    for (Elem x = 0; x < g->order(); ++x) {
      const ClassId i = grp.class_of[x];
      const ClassId j = grp.class_of[g->mul(g->inv(x), grp.reps[l])];
      ++coef[(i * k + j) * k + l];
    }

  auto central_ok = [&](const std::vector<ClassId>& sigma) {
    // Values re-indexed on the group's classes.
    for (std::size_t chi = 0; chi < standalone.num_irreducibles(); ++chi) {
      std::vector<Cyclotomic> omega(k);
      const Rational deg(standalone.degrees()[chi]);
      for (ClassId d = 0; d < k; ++d)
        omega[sigma[d]] = standalone.irreducible(chi)[d] * (Rational(doc.sizes[d]) / deg);
      for (ClassId i = 0; i < k; ++i)
        for (ClassId j = i; j < k; ++j) {
          Cyclotomic rhs;
          for (ClassId l = 0; l < k; ++l) {
            const auto a = coef[(i * k + j) * k + l];
            if (a != 0) rhs += omega[l] * Rational(a);
          }
          if (!(omega[i] * omega[j] == rhs)) return false;
        }
    }
    return true;
  };

  std::vector<ClassId> sigma(k, 0);
  std::vector<char> used(k, 0);
  std::size_t attempts = 0;
  std::function<bool(ClassId)> search = [&](ClassId d) -> bool {
    if (d == k) return ++attempts <= 100000 && central_ok(sigma);
    for (ClassId c = 0; c < k; ++c) {
      if (used[c] || grp.sizes[c] != doc.sizes[d] || grp.rep_orders[c] != doc.rep_orders[d])
        continue;
      sigma[d] = c;
      bool consistent = true;
      // Power maps among the classes assigned so far must commute with sigma.
      for (ClassId e = 0; e <= d && consistent; ++e)
        for (std::int64_t j = 0; j < doc.rep_orders[e] && consistent; ++j) {
          const ClassId f = doc.power_map[e][j];
          if (f <= d) consistent = sigma[f] == grp.power_map[sigma[e]][j];
        }
      if (!consistent) continue;
      used[c] = 1;
      if (search(d + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  if (!search(0)) fail("group binding", "no class matching is compatible with the group");

  std::vector<std::vector<Cyclotomic>> irr;
  for (const auto& row : standalone.irreducibles()) {
    std::vector<Cyclotomic> vals(k);
    for (ClassId d = 0; d < k; ++d) vals[sigma[d]] = row[d];
    irr.push_back(std::move(vals));
  }
  validate_table_data(grp, irr, g->order());
  return CharacterTable(grp, std::move(irr), std::move(g));
}

nlohmann::json table_to_json(const CharacterTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  nlohmann::json pm = nlohmann::json::array();
  const auto& cls = t.classes();
  for (ClassId c = 0; c < cls.count(); ++c) {
    classes.push_back({{"size", cls.sizes[c]}, {"rep_order", cls.rep_orders[c]}});
    for (std::int64_t j = 0; j < cls.rep_orders[c]; ++j) pm.push_back({c, j, cls.power_map[c][j]});
  }
  nlohmann::json chars = nlohmann::json::array();
  for (const auto& row : t.irreducibles()) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : row) vals.push_back(to_json(v));
    chars.push_back(std::move(vals));
  }
  return {{"order", t.order()}, {"classes", classes}, {"power_map", pm}, {"characters", chars}};
}

}  // namespace stickel
