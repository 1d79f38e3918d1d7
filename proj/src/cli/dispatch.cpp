#include "kslice/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kslice/alexander_module.hpp"
#include "kslice/branched_cover.hpp"
#include "kslice/errors.hpp"
#include "kslice/family.hpp"
#include "kslice/report_io.hpp"

namespace kslice::cli {

namespace {

struct Options {
  std::string verb;
  std::string input;
  long m = 0;
  std::uint64_t seed = 0;
  long genus = 1;
  long bound = 5;
  std::string r;
  std::string element;
  std::string format = "text";

  bool has_input = false, has_m = false, has_seed = false, has_r = false, has_element = false;
};

// Informational result that still exits nonzero (step mismatch in a report).
struct Output {
  std::string text;
  int code = kOk;
};

std::string vector_text(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

std::string vector_text(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

std::string integral_form(const QLaurent& p) { return normalize_sign(primitive_part(p)).to_string(); }

std::string alpha(std::size_t i) { return "alpha" + std::to_string(i + 1); }

SeifertMatrix load_input(const Options& o) {
  const int sources = int(o.has_input) + int(o.has_m) + int(o.has_seed);
  if (sources != 1)
    throw InvalidInput(o.verb + ": give exactly one input: a Seifert matrix file, --m M, or --seed S [--genus G]");
  if (o.has_input) return parse_seifert_file(o.input);
  if (o.has_m) return family_seifert(o.m);
  if (o.genus < 0) throw InvalidInput(o.verb + ": --genus must be >= 0");
  return random_seifert(static_cast<std::size_t>(o.genus), o.bound, o.seed);
}

std::vector<long> require_degrees(const Options& o) {
  if (!o.has_r) throw InvalidInput(o.verb + ": --r is required");
  return parse_degree_list(o.r);
}

Json source_json(const SeifertMatrix& v) {
  return v.name() ? Json(*v.name()) : Json("unnamed");
}

Json submodule_json(const AlexanderModule& mod, const Submodule& s) {
  std::string label = "-";
  for (std::size_t i = 0; i < mod.generator_classes().size(); ++i)
    if (s == Submodule::generated_by(mod, {mod.generator_classes()[i]})) {
      label = "<" + alpha(i) + ">";
      break;
    }
  Json basis = Json::array();
  for (std::size_t i = 0; i < s.dimension(); ++i) basis.push_back(vector_text(s.basis().row(i)));
  return Json{{"label", label}, {"dimension", s.dimension()}, {"basis", basis}};
}

QVector parse_element(const AlexanderModule& mod, const std::string& text) {
  const auto& gens = mod.generator_classes();
  if (text.rfind("alpha", 0) == 0) {
    const std::string index = text.substr(5);
    if (!index.empty() && std::all_of(index.begin(), index.end(), ::isdigit)) {
      const std::size_t k = std::stoul(index);
      if (k >= 1 && k <= gens.size()) return gens[k - 1];
    }
    throw InvalidInput("unknown generator label '" + text + "'");
  }
  std::string body;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') body += c;
  QVector v;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      Rational q(item);
      q.canonicalize();
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      v.push_back(q);
    } catch (const std::invalid_argument&) {
      throw InvalidInput("malformed coordinate '" + item + "'");
    }
  }
  if (v.size() != mod.q_dimension())
    throw InvalidInput("element has " + std::to_string(v.size()) + " coordinates, module dimension is " +
                       std::to_string(mod.q_dimension()));
  return v;
}

Output render(const Options& o, const Json& doc) {
  return {o.format == "machine" ? render_machine(doc) : render_text(doc), kOk};
}

Output cmd_alex(const Options& o) {
  const auto v = load_input(o);
  const auto delta = alexander_polynomial(v).to_string();
  if (o.format == "machine") return {render_machine(Json{{"alexander_polynomial", delta}}), kOk};
  return {delta + "\n", kOk};
}

Output cmd_invariants(const Options& o) {
  const auto v = load_input(o);
  const auto inv = classical_invariants(v);
  Json doc{{"knot", source_json(v)},
           {"genus", v.genus()},
           {"determinant", inv.determinant.get_str()},
           {"signature", inv.signature},
           {"determinant_is_square", is_perfect_square(inv.determinant)}};
  return render(o, doc);
}

Output cmd_module(const Options& o) {
  const auto v = load_input(o);
  const auto mod = AlexanderModule::build(v);
  Json factors = Json::array();
  for (const auto& d : mod.invariant_factors())
    if (d.span() > 0) factors.push_back(integral_form(d));
  Json components = Json::array();
  for (const auto& c : mod.primary_decomposition()) {
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(vector_text(g));
    components.push_back(Json{{"prime", integral_form(c.prime)},
                              {"multiplicity", c.multiplicity},
                              {"resolved", c.resolved},
                              {"dimension", c.basis.rows()},
                              {"generators", gens}});
  }
  Json generators = Json::object();
  for (std::size_t i = 0; i < mod.generator_classes().size(); ++i) {
    const auto& g = mod.generator_classes()[i];
    generators[alpha(i)] = vector_text(g) + ", annihilator " + integral_form(mod.annihilator(g));
  }
  Json doc{{"knot", source_json(v)},
           {"q_dimension", mod.q_dimension()},
           {"order", integral_form(mod.order_polynomial())},
           {"invariant_factors", factors},
           {"cyclic", mod.is_cyclic()},
           {"factorisation_complete", mod.primary_decomposition_complete()},
           {"primary_components", components},
           {"generators", generators}};
  return render(o, doc);
}

Output cmd_blanchfield(const Options& o) {
  const auto v = load_input(o);
  const auto bl = BlanchfieldPairing::of(v);
  Json gram = Json::object();
  for (std::size_t i = 0; i < bl.gram().rows(); ++i)
    for (std::size_t j = 0; j < bl.gram().cols(); ++j)
      gram["Bl(" + alpha(i) + ", " + alpha(j) + ")"] = bl.gram()(i, j).to_string();
  Json doc{{"knot", source_json(v)}, {"hermitian", bl.is_hermitian()}, {"gram", gram}};
  return render(o, doc);
}

Output cmd_metab(const Options& o) {
  const auto v = load_input(o);
  const auto mod = AlexanderModule::build(v);
  const auto bl = BlanchfieldPairing::of(v);
  Json doc{{"knot", source_json(v)}};
  if (o.has_element) {
    const auto x = parse_element(mod, o.element);
    doc["element"] = o.element;
    doc["coordinates"] = vector_text(x);
    doc["unique_metaboliser"] = submodule_json(mod, unique_metaboliser_containing(mod, bl, x));
    return render(o, doc);
  }
  const auto mets = metabolisers(mod, bl);
  doc["radical_dimension"] = radical(mod, bl).dimension();
  doc["metaboliser_count"] = mets.size();
  doc["metabolisers"] = Json::array();
  for (const auto& s : mets) doc["metabolisers"].push_back(submodule_json(mod, s));
  return render(o, doc);
}

Output cmd_cover(const Options& o) {
  const auto v = load_input(o);
  const auto degrees = require_degrees(o);
  Json covers = Json::array();
  for (long r : degrees) {
    const auto cover = CoverPresentation::build(v, r);
    if (!cover.group().is_finite())
      throw Unsupported("r = " + std::to_string(r) + ": infinite homology: unsupported for metaboliser analysis");
    const auto res = cover_order_resultant(v, r);
    Json gens = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto x = lifted_generator(cover, i);
      gens.push_back(Json{{"label", "x" + std::to_string(i + 1)},
                          {"coordinates", vector_text(x.coordinates)},
                          {"order", x.order->get_str()}});
    }
    Json deck = Json::array();
    for (std::size_t i = 0; i < cover.deck_on_coordinates().rows(); ++i)
      deck.push_back(vector_text(cover.deck_on_coordinates().row(i)));
    const Integer order = *cover.group().order();
    covers.push_back(Json{{"r", r},
                          {"group", cover.group().to_string()},
                          {"order", order.get_str()},
                          {"resultant_order", res ? res->get_str() : "infinite"},
                          {"z2_homology_sphere", mpz_odd_p(order.get_mpz_t()) != 0},
                          {"generators", gens},
                          {"deck", deck}});
  }
  return render(o, Json{{"knot", source_json(v)}, {"covers", covers}});
}

Output cmd_linkform(const Options& o) {
  const auto v = load_input(o);
  const auto form = double_cover_linking_form(v);
  const std::size_t k = form.group.invariant_factors.size();
  Json gram = Json::array();
  for (std::size_t i = 0; i < k; ++i) gram.push_back(vector_text(form.gram.row(i)));
  Json images = Json::object();
  std::vector<Subgroup> lines;
  for (std::size_t i = 0; i < form.generator_images.rows(); ++i) {
    const auto row = form.generator_images.row(i);
    images["x" + std::to_string(i + 1)] = vector_text(row);
    lines.push_back(Subgroup::generated_by(form.group.invariant_factors, {std::vector<Integer>(row.begin(), row.end())}));
  }
  IntegerMatrix deck(k, k);
  for (std::size_t i = 0; i < k; ++i) deck(i, i) = -1;
  Json mets = Json::array();
  for (const auto& lm : linking_metabolisers(form, deck)) {
    std::string label = "-";
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (lm.subgroup == lines[i]) {
        label = "<x" + std::to_string(i + 1) + ">";
        break;
      }
    Json gens = Json::array();
    for (const auto& g : lm.subgroup.generators()) gens.push_back(vector_text(g));
    mets.push_back(Json{{"label", label},
                        {"order", lm.subgroup.order().get_str()},
                        {"generators", gens},
                        {"deck_invariant", lm.deck_invariant.value_or(false)}});
  }
  Json doc{{"knot", source_json(v)},
           {"group", form.group.to_string()},
           {"gram", gram},
           {"generator_images", images},
           {"metabolisers", mets}};
  return render(o, doc);
}

Output cmd_family(const Options& o) {
  if (o.has_input || o.has_seed) throw InvalidInput("family: takes --m only");
  if (!o.has_m) throw InvalidInput("family: --m is required");
  const auto params = family_params(o.m);
  const auto degrees = o.has_r ? parse_degree_list(o.r) : std::vector<long>{};
  Json covers = Json::array();
  for (long r : degrees) {
    const auto e = family_expected(o.m, r);
    covers.push_back(Json{{"r", r}, {"N_r", e.n_r.get_str()}, {"group", e.cover_group.to_string()}});
  }
  Json doc{{"m", o.m},
           {"odd_regime", params.odd_regime},
           {"seifert_matrix", "[[0, " + std::to_string(o.m + 1) + "], [" + std::to_string(o.m) + ", 0]]"},
           {"alexander_polynomial", family_expected(o.m, 1).delta.to_string()},
           {"covers", covers}};
  return render(o, doc);
}

Output cmd_report(const Options& o) {
  if (o.has_input || o.has_seed) throw InvalidInput("report: takes --m and --r only");
  if (!o.has_m) throw InvalidInput("report: --m is required");
  const auto report = obstruction_report(o.m, require_degrees(o));
  Output out;
  out.text = o.format == "machine" ? render_machine(report_to_json(report)) : render_report_text(report);
  out.code = report.has_failure() ? kStepMismatch : kOk;
  return out;
}

const std::map<std::string, std::pair<std::string, Output (*)(const Options&)>>& verbs() {
  static const std::map<std::string, std::pair<std::string, Output (*)(const Options&)>> table{
      {"alex", {"Alexander polynomial", cmd_alex}},
      {"invariants", {"determinant and signature", cmd_invariants}},
      {"module", {"rational Alexander module decomposition", cmd_module}},
      {"blanchfield", {"Blanchfield pairing on the presentation generators", cmd_blanchfield}},
      {"metab", {"Blanchfield metabolisers, or the one containing --element", cmd_metab}},
      {"cover", {"homology of cyclic branched covers for each --r", cmd_cover}},
      {"linkform", {"double-cover linking form and its metabolisers", cmd_linkform}},
      {"family", {"closed-form expectations for K_m", cmd_family}},
      {"report", {"obstruction report for K_m over prime cover degrees", cmd_report}},
  };
  return table;
}

}  // namespace

std::vector<long> parse_degree_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long r = 0;
    try {
      r = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidInput("--r: '" + item + "' is not an integer");
    if (r < 1) throw InvalidInput("--r: cover degree must be >= 1, got " + item);
    out.push_back(r);
  }
  if (out.empty()) throw InvalidInput("--r: empty list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact abelian slice obstructions from Seifert matrices", "kslice"};
  app.require_subcommand(1);
  Options o;
  for (const auto& [name, entry] : verbs()) {
    auto* sub = app.add_subcommand(name, entry.first);
    sub->add_option("input", o.input, "Seifert matrix JSON file");
    sub->add_option("--m", o.m, "use the family matrix V_m");
    sub->add_option("--seed", o.seed, "random Seifert matrix seed");
    sub->add_option("--genus", o.genus, "genus of the random matrix")->capture_default_str();
    sub->add_option("--bound", o.bound, "entry bound of the random matrix")->capture_default_str();
    sub->add_option("--r", o.r, "comma-separated cover degrees");
    sub->add_option("--element", o.element, "alpha1, alpha2, ... or a coordinate vector");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "machine"}))->capture_default_str();
  }
  if (!args.empty() && !args.front().starts_with("-") && !verbs().contains(args.front())) {
    err << "kslice: unknown verb '" << args.front() << "'\n";
    return kInvalidInput;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "kslice: " << e.what() << "\n";
    return kInvalidInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  o.verb = chosen->get_name();
  o.has_input = chosen->count("input") > 0;
  o.has_m = chosen->count("--m") > 0;
  o.has_seed = chosen->count("--seed") > 0;
  o.has_r = chosen->count("--r") > 0;
  o.has_element = chosen->count("--element") > 0;
  if (!o.has_seed && (chosen->count("--genus") > 0 || chosen->count("--bound") > 0)) {
    err << "kslice " << o.verb << ": --genus and --bound need --seed\n";
    return kInvalidInput;
  }
  if (o.has_element && o.verb != "metab") {
    err << "kslice " << o.verb << ": --element applies to metab only\n";
    return kInvalidInput;
  }

  try {
    const Output result = verbs().at(o.verb).second(o);
    out << result.text;
    return result.code;
  } catch (const InvalidInput& e) {
    err << "kslice " << o.verb << ": " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Unsupported& e) {
    err << "kslice " << o.verb << ": " << e.what() << "\n";
    return kUnsupported;
  } catch (const MathError& e) {
    err << "kslice " << o.verb << ": " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "kslice " << o.verb << ": internal error: " << e.what() << "\n";
    return kUnsupported;
  }
}

}  // namespace kslice::cli
