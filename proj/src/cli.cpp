#include "stickel/cli.hpp"

#include <fstream>
#include <memory>
#include <numeric>
#include <sstream>

#include "stickel/bounds.hpp"
#include "stickel/characters.hpp"
#include "stickel/error.hpp"
#include "stickel/galois.hpp"
#include "stickel/stickelberger.hpp"
#include "stickel/verify.hpp"

namespace stickel::cli {

namespace {

using nlohmann::json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::shared_ptr<const GroupTable> load_group(const Command& cmd) {
  if (cmd.group_spec.empty()) throw Usage("--group is required for " + cmd.subcommand);
  return std::make_shared<const GroupTable>(parse_group_spec(cmd.group_spec, closure_cap_from_env()));
}

CharacterTable load_table(const Command& cmd) {
  if (cmd.table_path) {
    CharacterTable t = ingest_table_file(*cmd.table_path);
    if (cmd.group_spec.empty()) return t;
    return bind_table(t, load_group(cmd));
  }
  return table_for_group(load_group(cmd));
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(tok, &used));
    } catch (const std::logic_error&) {
      throw Usage("expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw Usage("expected an integer, got '" + tok + "'");
  }
  return out;
}

VirtualCharacter parse_character(const CharacterTable& t, const std::string& spec) {
  if (spec == "regular") return regular_character(t);
  if (spec == "trivial") return trivial_character(t);
  if (spec.rfind("irr:", 0) == 0) {
    const auto idx = parse_ints(spec.substr(4));
    if (idx.size() != 1 || idx[0] < 0 || static_cast<std::size_t>(idx[0]) >= t.num_irreducibles())
      throw Usage("irreducible index out of range: " + spec);
    return irreducible_character(t, static_cast<std::size_t>(idx[0]));
  }
  if (spec.rfind("coeffs:", 0) == 0) {
    VirtualCharacter phi{parse_ints(spec.substr(7))};
    if (phi.coeffs.size() != t.num_irreducibles())
      throw Usage("coeffs: needs " + std::to_string(t.num_irreducibles()) + " entries");
    return phi;
  }
  throw Usage("--char must be regular, trivial, irr:i or coeffs:a,b,...");
}

std::string group_label(const CharacterTable& t) {
  return t.group() ? t.group()->descriptor() : std::string("table");
}

json group_report(const GroupTable& g) {
  const ConjClassSet& cls = g.classes();
  json classes = json::array();
  for (ClassId c = 0; c < cls.count(); ++c)
    classes.push_back({{"class", c}, {"rep", cls.reps[c]}, {"size", cls.sizes[c]},
                       {"rep_order", cls.rep_orders[c]}});
  return {{"group", g.descriptor()},
          {"order", g.order()},
          {"exponent", g.exponent()},
          {"abelian", g.is_abelian()},
          {"sylow2", std::string(to_string(sylow2_class(g)))},
          {"abelianization", abelianization(g)},
          {"classes", classes}};
}

json theta_report(const Command& cmd) {
  const CharacterTable t = load_table(cmd);
  const VirtualCharacter phi = parse_character(t, cmd.char_spec);
  const ClassSumElt th = theta_bar(t, phi);
  return {{"group", group_label(t)},
          {"character", phi.coeffs},
          {"theta", theta_to_json(t, th)},
          {"integral", th.is_integral()},
          {"in_AG", in_AG(t, phi)},
          {"det_trivial", det_is_trivial(det_character(t, phi))}};
}

json ag_report(const Command& cmd) {
  const CharacterTable t = load_table(cmd);
  const auto basis = AG_basis(t);
  json rows = json::array();
  for (const auto& phi : basis) rows.push_back(phi.coeffs);
  std::int64_t linear = std::count(t.degrees().begin(), t.degrees().end(), 1);
  return {{"group", group_label(t)},
          {"degrees", t.degrees()},
          {"basis", rows},
          {"index", integer_to_json(AG_index(basis))},
          {"linear_characters", linear}};
}

json sg_report(const Command& cmd) {
  const CharacterTable t = load_table(cmd);
  if (t.group())
    return {{"group", group_label(t)},
            {"coordinates", "elements"},
            {"basis", to_json(nonzero_rows(stickelberger_module(t)))}};
  return {{"group", group_label(t)},
          {"coordinates", "classes"},
          {"basis", to_json(nonzero_rows(stickelberger_module_classes(t)))}};
}

json bound_report(const Command& cmd) {
  const auto g = load_group(cmd);
  const OmegaAction a = OmegaAction::parse(cmd.kappa_spec, g->exponent());
  return to_json(steinitz_bound(*g, a));
}

json compare_report(const Command& cmd) {
  const auto g = load_group(cmd);
  json out = to_json(compare_with_long(*g));
  out["group"] = g->descriptor();
  out["invariants"] = abelian_invariants(*g);
  out["bound_exponent_from_factors"] = kummer_exponent_from_bound(*g).exponent;
  return out;
}

json ingest_report(const Command& cmd) {
  if (!cmd.table_path) throw Usage("ingest needs --table");
  const CharacterTable t = load_table(cmd);
  json out = table_to_json(t);
  out["valid"] = true;
  if (t.group()) out["bound_to"] = t.group()->descriptor();
  return out;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidGroupSpec:
    case ErrorCode::InvalidPermutation: return 2;
    default: return 1;
  }
}

void render_text(const json& j, std::ostream& out, const std::string& indent = "") {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_structured()) {
        out << indent << it.key() << ":\n";
        render_text(*it, out, indent + "  ");
      } else {
        out << indent << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
    if (flat) {
      out << indent << j.dump() << "\n";
      return;
    }
    for (const auto& x : j) {
      if (x.is_object() && std::none_of(x.begin(), x.end(), [](const json& v) { return v.is_structured(); })) {
        out << indent << "-";
        for (auto it = x.begin(); it != x.end(); ++it)
          out << " " << it.key() << "=" << (it->is_string() ? it->get<std::string>() : it->dump());
        out << "\n";
      } else {
        out << indent << "-\n";
        render_text(x, out, indent + "  ");
      }
    }
  } else {
    out << indent << j.dump() << "\n";
  }
}

std::string summary_line(const Command& cmd, const json& r) {
  if (cmd.subcommand == "theta") return r.at("integral").get<bool>() ? "integral" : "not integral";
  if (cmd.subcommand == "verify") return r.at("passed").get<bool>() ? "all checks pass" : "checks failed";
  return {};
}

}  // namespace

RunResult run(const Command& cmd) {
  RunResult res;
  try {
    if (cmd.format != "json" && cmd.format != "text") throw Usage("--format must be json or text");
    const std::string& s = cmd.subcommand;
    if (s == "group") {
      res.report = group_report(*load_group(cmd));
    } else if (s == "theta") {
      res.report = theta_report(cmd);
    } else if (s == "ag") {
      res.report = ag_report(cmd);
    } else if (s == "sg") {
      res.report = sg_report(cmd);
    } else if (s == "bound") {
      res.report = bound_report(cmd);
    } else if (s == "compare-long") {
      res.report = compare_report(cmd);
    } else if (s == "verify") {
      VerifyOptions opt;
      opt.seed = cmd.seed;
      opt.samples = cmd.samples;
      const VerifyReport r = verify_group(load_group(cmd), opt);
      res.report = to_json(r);
      if (!r.all_passed()) res.exit_code = 1;
    } else if (s == "ingest") {
      res.report = ingest_report(cmd);
    } else {
      throw Usage("unknown subcommand '" + s + "'");
    }
  } catch (const Usage& u) {
    res.exit_code = 2;
    res.report = {{"error", {{"code", "usage"}, {"message", u.what()}}}};
  } catch (const Error& e) {
    res.exit_code = exit_code_for(e.code());
    res.report = {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
  } catch (const nlohmann::json::exception& e) {
    res.exit_code = 1;
    res.report = {{"error", {{"code", "table_validation"}, {"message", e.what()}}}};
  }

  if (cmd.format == "text") {
    std::ostringstream out;
    if (!res.report.contains("error")) {
      const std::string line = summary_line(cmd, res.report);
      if (!line.empty()) out << line << "\n";
    }
    render_text(res.report, out);
    res.text = out.str();
  } else {
    res.text = res.report.dump(2) + "\n";
  }
  return res;
}

}  // namespace stickel::cli
