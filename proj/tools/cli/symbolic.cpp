#include "commands.hpp"

#include "bidual/compiler/compile.hpp"
#include "bidual/compiler/template.hpp"
#include "bidual/term/normalize.hpp"
#include "bidual/term/parse.hpp"
#include "bidual/term/print.hpp"
#include "bidual/term/serialize.hpp"

#include <sstream>

namespace bidual::cli {

namespace {

LevelPattern parse_levels(const std::string& text) {
  LevelPattern out = kAllBidual;
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 3) throw UsageError("--levels takes three comma-separated entries");
    if (item == "E" || item == "algebra") {
      out[k] = Level::Algebra;
    } else if (item == "E**" || item == "bidual") {
      out[k] = Level::Bidual;
    } else {
      throw UsageError("level '" + item + "' is neither E nor E**");
    }
    ++k;
  }
  if (k != 3) throw UsageError("--levels takes three comma-separated entries");
  return out;
}

std::string levels_text(const LevelPattern& l) {
  std::string s;
  for (std::size_t k = 0; k < 3; ++k) s += (k ? "," : "") + std::string(l[k] == Level::Algebra ? "E" : "E**");
  return s;
}

int parse_label(const std::string& s) {
  if (s.size() == 1 && s[0] >= '0' && s[0] <= '5') return s[0] - '0';
  throw UsageError("permutation label '" + s + "' is not in 0..5");
}

PrintStyle style(const Options& o) { return o.ascii ? PrintStyle::Ascii : PrintStyle::Unicode; }

std::string partition_text(const Partition& p) {
  std::string s;
  for (const auto& cls : p) {
    s += "{";
    for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + std::to_string(cls[i]);
    s += "}";
  }
  return s;
}

TrilinearTemplate require_template(const Options& o) {
  if (o.tpl.empty()) throw UsageError("--template is required");
  return TrilinearTemplate::parse(o.tpl);
}

}  // namespace

Result cmd_extend(const Options& o) {
  TrilinearTemplate tpl = require_template(o);
  RelationSet r = RelationSet::parse(o.relations);
  LevelPattern levels = parse_levels(o.levels);
  Result res;
  res.doc = {{"schema", "bidual.extend/1"}, {"template", tpl.to_string()}, {"relations", r.to_string()},
             {"levels", levels_text(levels)}};
  std::ostringstream os;
  if (o.all || o.perm == "all") {
    ExtensionReport rep = all_extensions(tpl, r, levels);
    auto ext = nlohmann::json::array();
    for (int i = 0; i < 6; ++i) {
      Term t = normalize(rep.extensions[static_cast<std::size_t>(i)], r);
      Perm3 p = Perm3::from_label(i);
      ext.push_back({{"perm", i}, {"name", p.name(true)}, {"term", to_string(t, style(o))}, {"json", to_json(t)}});
      os << p.name(o.ascii) << "  " << to_string(t, style(o)) << "\n";
    }
    res.doc["extensions"] = ext;
    auto classes = nlohmann::json::array();
    for (const auto& cls : rep.classes) classes.push_back(cls);
    res.doc["classes"] = classes;
    res.doc["regular"] = rep.regular;
    os << "classes " << partition_text(rep.classes) << (rep.regular ? "  (regular)" : "") << "\n";
  } else {
    int i = parse_label(o.perm);
    Term t = normalize(compile_extension(tpl, Perm3::from_label(i), levels), r);
    res.doc["extensions"] = nlohmann::json::array(
        {{{"perm", i}, {"name", Perm3::from_label(i).name(true)}, {"term", to_string(t, style(o))}, {"json", to_json(t)}}});
    os << to_string(t, style(o)) << "\n";
  }
  res.text = os.str();
  return res;
}

Result cmd_normalize(const Options& o) {
  if (o.term.empty()) throw UsageError("--term is required");
  RelationSet r = RelationSet::parse(o.relations);
  Term t = normalize(parse_term(o.term), r);
  Result res;
  res.doc = {{"schema", "bidual.normalize/1"}, {"input", o.term}, {"relations", r.to_string()},
             {"normal_form", to_string(t, style(o))}, {"json", to_json(t)}};
  res.text = to_string(t, style(o)) + "\n";
  return res;
}

Result cmd_centers(const Options& o) {
  TrilinearTemplate tpl = require_template(o);
  std::vector<PermTriple> triples;
  if (o.triple.empty()) {
    triples = valid_triples();
  } else {
    std::stringstream ss(o.triple);
    std::string item;
    PermTriple t{};
    std::size_t k = 0;
    while (std::getline(ss, item, ',')) {
      if (k == 3) throw UsageError("--triple takes three labels");
      t[k++] = Perm3::from_label(parse_label(item));
    }
    if (k != 3) throw UsageError("--triple takes three labels");
    triples.push_back(t);
  }
  std::vector<int> centers = o.center ? std::vector<int>{o.center} : std::vector<int>{1, 2, 3};
  Result res;
  res.doc = {{"schema", "bidual.centers/1"}, {"template", tpl.to_string()}};
  auto entries = nlohmann::json::array();
  std::ostringstream os;
  for (const auto& t : triples) {
    for (int j : centers) {
      std::string name = "Z" + std::to_string(j) + "(" + t[0].name(o.ascii) + "," + t[1].name(o.ascii) + "," +
                         t[2].name(o.ascii) + ")";
      std::vector<CenterEquation> eqs;
      try {
        eqs = center_equations(tpl, j, t);
      } catch (const std::invalid_argument&) {
        if (o.center) throw;
        continue;
      }
      nlohmann::json e{{"center", j}, {"triple", {t[0].label(), t[1].label(), t[2].label()}}};
      auto eq_json = nlohmann::json::array();
      os << name << "\n";
      for (const auto& eq : eqs) {
        std::string diff = to_string(eq.difference, style(o));
        eq_json.push_back({{"lhs", eq.lhs}, {"rhs", eq.rhs}, {"difference", diff}});
        os << "  " << (o.ascii ? "pi" : "π") << eq.lhs << (o.ascii ? " - pi" : " − π") << eq.rhs << " = " << diff << "\n";
      }
      e["equations"] = eq_json;
      entries.push_back(e);
    }
  }
  if (entries.empty()) throw UsageError("no admissible (triple, center) combination");
  res.doc["centers"] = entries;
  res.text = os.str();
  return res;
}

}  // namespace bidual::cli
