#include "kslice/family.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

#include "kslice/alexander_module.hpp"
#include "kslice/branched_cover.hpp"
#include "kslice/errors.hpp"

namespace kslice {

FamilyParams family_params(long m) {
  if (m < 1) throw InvalidInput("family: m must be >= 1, got " + std::to_string(m));
  return {m, m % 2 == 1};
}

SeifertMatrix family_seifert(long m) {
  family_params(m);
  return validate_seifert(IntegerMatrix{{0, m + 1}, {m, 0}}, "K" + std::to_string(m));
}

FamilyExpected family_expected(long m, long r) {
  family_params(m);
  if (r < 1) throw InvalidInput("family: cover degree r must be >= 1, got " + std::to_string(r));
  const Integer a(m), b(m + 1);
  FamilyExpected e;
  e.delta = IntLaurent::from_coefficients(0, {a * b, -(b * b + a * a), a * b});
  e.n_r = pow(b, static_cast<unsigned long>(r)) - pow(a, static_cast<unsigned long>(r));
  if (e.n_r != 1) e.cover_group.invariant_factors = {e.n_r, e.n_r};
  return e;
}

bool distinctness_check(const std::vector<long>& ms) {
  std::set<long> seen;
  for (long m : ms) {
    family_params(m);
    if (!seen.insert(m).second) throw InvalidInput("distinctness_check: duplicate m = " + std::to_string(m));
  }
  std::vector<IntLaurent> deltas;
  for (long m : ms) deltas.push_back(alexander_polynomial(family_seifert(m)));
  for (std::size_t i = 0; i < deltas.size(); ++i)
    for (std::size_t j = i + 1; j < deltas.size(); ++j)
      if (equal_up_to_unit(deltas[i], deltas[j])) return false;
  return true;
}

std::string to_string(StepStatus s) {
  switch (s) {
    case StepStatus::verified: return "verified";
    case StepStatus::failed: return "failed";
    case StepStatus::external_assumption: return "external-assumption";
  }
  return "failed";
}

StepStatus step_status_from_string(const std::string& s) {
  if (s == "verified") return StepStatus::verified;
  if (s == "failed") return StepStatus::failed;
  if (s == "external-assumption") return StepStatus::external_assumption;
  throw InvalidInput("unknown step status '" + s + "'");
}

bool ObstructionReport::has_failure() const {
  auto bad = [](const ReportStep& s) { return s.status == StepStatus::failed; };
  if (std::any_of(checks.begin(), checks.end(), bad)) return true;
  return std::any_of(covers.begin(), covers.end(),
                     [&](const CoverSubreport& c) { return std::any_of(c.steps.begin(), c.steps.end(), bad); });
}

namespace {

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string integral_form(const QLaurent& p) { return normalize_sign(primitive_part(p)).to_string(); }

// Runs one step; an exception thrown by the computation is a failure too.
ReportStep run_step(const std::string& name, const std::function<bool(Payload&)>& body) {
  ReportStep step{name, StepStatus::verified, {}};
  try {
    if (!body(step.payload)) step.status = StepStatus::failed;
  } catch (const std::exception& e) {
    step.status = StepStatus::failed;
    step.payload.emplace_back("error", e.what());
  }
  return step;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

QLaurent linear(long a, long b) {  // a t - b
  return QLaurent::from_coefficients(0, {Rational(-b), Rational(a)});
}

struct ModuleData {
  AlexanderModule module;
  std::vector<Submodule> alpha;  // <alpha_1>, <alpha_2>
};

std::string label(const ModuleData& d, const Submodule& s) {
  for (std::size_t i = 0; i < d.alpha.size(); ++i)
    if (s == d.alpha[i]) return "<alpha" + std::to_string(i + 1) + ">";
  return "dim " + std::to_string(s.dimension()) + " submodule";
}

std::vector<ReportStep> module_steps(long m, const SeifertMatrix& v) {
  std::vector<ReportStep> steps;
  const auto expected = family_expected(m, 1);
  steps.push_back(run_step("alexander-polynomial", [&](Payload& p) {
    const IntLaurent delta = alexander_polynomial(v);
    p.emplace_back("computed", delta.to_string());
    p.emplace_back("expected", expected.delta.to_string());
    return equal_up_to_unit(delta, expected.delta);
  }));
  if (steps.back().status == StepStatus::failed) return steps;

  std::optional<ModuleData> data;
  steps.push_back(run_step("rational-alexander-module", [&](Payload& p) {
    data.emplace(ModuleData{AlexanderModule::build(v), {}});
    const auto& mod = data->module;
    for (std::size_t i = 0; i < 2 && i < mod.generator_classes().size(); ++i)
      data->alpha.push_back(Submodule::generated_by(mod, {mod.generator_classes()[i]}));
    const QLaurent p1 = monic(linear(m, m + 1)), p2 = monic(linear(m + 1, m));
    std::vector<QLaurent> primes;
    for (const auto& f : mod.factorization().factors)
      if (f.multiplicity == 1 && f.resolved) primes.push_back(f.polynomial);
    const bool factors_ok = mod.primary_decomposition_complete() && primes.size() == 2 &&
                            ((primes[0] == p1 && primes[1] == p2) || (primes[0] == p2 && primes[1] == p1));
    const QLaurent ann1 = mod.annihilator(mod.generator_classes().at(0));
    const QLaurent ann2 = mod.annihilator(mod.generator_classes().at(1));
    const bool split = data->alpha[0].dimension() == 1 && data->alpha[1].dimension() == 1 &&
                       !data->alpha[0].contains(data->alpha[1]);
    p.emplace_back("q_dimension", std::to_string(mod.q_dimension()));
    p.emplace_back("decomposition", split && mod.q_dimension() == 2 ? "Q + Q" : "other");
    p.emplace_back("alpha1_annihilator", integral_form(ann1));
    p.emplace_back("alpha2_annihilator", integral_form(ann2));
    p.emplace_back("expected_alpha1_annihilator", integral_form(p1));
    p.emplace_back("expected_alpha2_annihilator", integral_form(p2));
    return mod.q_dimension() == 2 && factors_ok && split && ann1 == p1 && ann2 == p2;
  }));
  if (steps.back().status == StepStatus::failed) return steps;

  steps.push_back(run_step("blanchfield-metabolisers", [&](Payload& p) {
    const auto& mod = data->module;
    const auto bl = BlanchfieldPairing::of(v);
    const auto rad = radical(mod, bl);
    const auto mets = metabolisers(mod, bl);
    std::vector<std::string> labels;
    for (const auto& s : mets) labels.push_back(label(*data, s));
    std::sort(labels.begin(), labels.end());
    const auto unique = unique_metaboliser_containing(mod, bl, mod.generator_classes().at(0));
    const bool pair_ok = mets.size() == 2 && std::count(mets.begin(), mets.end(), data->alpha[0]) == 1 &&
                         std::count(mets.begin(), mets.end(), data->alpha[1]) == 1;
    p.emplace_back("hermitian", bool_text(bl.is_hermitian()));
    p.emplace_back("radical_dimension", std::to_string(rad.dimension()));
    p.emplace_back("metaboliser_count", std::to_string(mets.size()));
    p.emplace_back("metabolisers", join(labels));
    p.emplace_back("expected_metabolisers", "<alpha1>, <alpha2>");
    p.emplace_back("unique_metaboliser_containing_alpha1", label(*data, unique));
    p.emplace_back("kernel_dimension", std::to_string(unique.dimension()));
    return bl.is_hermitian() && rad.dimension() == 0 && pair_ok && unique == data->alpha[0];
  }));
  return steps;
}

// c with y' = c y, found through a coordinate of y that is a unit mod its
// modulus; nullopt when y' is not a multiple of y that way.
std::optional<Integer> eigenvalue(const CoverElement& y, const CoverElement& image, const Integer& n) {
  for (std::size_t j = 0; j < y.coordinates.size(); ++j) {
    if (y.moduli[j] != n || gcd(y.coordinates[j], n) != 1) continue;
    const Integer c = mod(image.coordinates[j] * inverse_mod(y.coordinates[j], n), n);
    if (scale(y, c) == image) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

CoverSubreport cover_subreport(long m, long r, const SeifertMatrix& v) {
  CoverSubreport sub{r, {}};
  const auto expected = family_expected(m, r);
  const Integer n = expected.n_r;
  std::optional<CoverPresentation> cover;
  auto push = [&](ReportStep s) {
    sub.steps.push_back(std::move(s));
    return sub.steps.back().status != StepStatus::failed;
  };

  if (!push(run_step("cover-group", [&](Payload& p) {
        cover.emplace(CoverPresentation::build(v, r));
        const auto res = cover_order_resultant(v, r);
        p.emplace_back("computed", cover->group().to_string());
        p.emplace_back("expected", expected.cover_group.to_string());
        p.emplace_back("N_r", n.get_str());
        p.emplace_back("resultant_order", res ? res->get_str() : "infinite");
        return cover->group() == expected.cover_group && res && *res == n * n;
      })))
    return sub;

  std::optional<CoverElement> x1, x2;
  if (!push(run_step("generator-lifts", [&](Payload& p) {
        x1 = lifted_generator(*cover, 0);
        x2 = lifted_generator(*cover, 1);
        p.emplace_back("order_x1", x1->order->get_str());
        p.emplace_back("order_x2", x2->order->get_str());
        p.emplace_back("expected_order", n.get_str());
        return *x1->order == n && *x2->order == n;
      })))
    return sub;

  if (!push(run_step("deck-invariance", [&](Payload& p) {
        const bool coprime = gcd(Integer(m), n) == 1 && gcd(Integer(m + 1), n) == 1;
        p.emplace_back("gcd_conditions", bool_text(coprime));
        if (!coprime) return false;
        const Integer c1 = mod(Integer(m + 1) * inverse_mod(Integer(m), n), n);
        const Integer c2 = mod(Integer(m) * inverse_mod(Integer(m + 1), n), n);
        const auto e1 = eigenvalue(*x1, deck_image(*cover, *x1), n);
        const auto e2 = eigenvalue(*x2, deck_image(*cover, *x2), n);
        p.emplace_back("deck_eigenvalue_x1", e1 ? e1->get_str() : "none");
        p.emplace_back("deck_eigenvalue_x2", e2 ? e2->get_str() : "none");
        p.emplace_back("expected_eigenvalue_x1", c1.get_str());
        p.emplace_back("expected_eigenvalue_x2", c2.get_str());
        return e1 == c1 && e2 == c2;
      })))
    return sub;

  if (!push(run_step("odd-order", [&](Payload& p) {
        const Integer order = *cover->group().order();
        const bool odd = mpz_odd_p(order.get_mpz_t()) != 0;
        p.emplace_back("order", order.get_str());
        p.emplace_back("z2_homology_sphere", bool_text(odd));
        p.emplace_back("spin_structures", odd ? "1" : "not unique");
        return odd;
      })))
    return sub;

  if (r == 2) {
    push(run_step("linking-metabolisers", [&](Payload& p) {
      const auto form = double_cover_linking_form(v);
      const auto& moduli = form.group.invariant_factors;
      const std::size_t k = moduli.size();
      // t acts as -1 on the homology of the double cover.
      IntegerMatrix deck(k, k);
      for (std::size_t i = 0; i < k; ++i) deck(i, i) = -1;
      const auto mets = linking_metabolisers(form, deck);
      std::vector<Subgroup> x;
      for (std::size_t i = 0; i < 2; ++i) {
        const auto row = form.generator_images.row(i);
        x.push_back(Subgroup::generated_by(moduli, {std::vector<Integer>(row.begin(), row.end())}));
      }
      std::vector<std::string> labels;
      bool invariant = true;
      for (const auto& lm : mets) {
        labels.push_back(lm.subgroup == x[0] ? "<x1>" : lm.subgroup == x[1] ? "<x2>" : lm.subgroup.to_string());
        invariant = invariant && lm.deck_invariant.value_or(false);
      }
      std::sort(labels.begin(), labels.end());
      p.emplace_back("group", form.group.to_string());
      p.emplace_back("metabolisers", join(labels));
      p.emplace_back("expected_metabolisers", "<x1>, <x2>");
      p.emplace_back("deck_invariant", bool_text(invariant));
      return mets.size() == 2 && labels[0] != labels[1] &&
             std::all_of(labels.begin(), labels.end(), [](const std::string& s) { return s == "<x1>" || s == "<x2>"; }) &&
             invariant;
    }));
  }
  return sub;
}

std::vector<ReportStep> external_steps() {
  auto entry = [](std::string name, std::string claim, std::string citation) {
    return ReportStep{std::move(name), StepStatus::external_assumption,
                      {{"claim", std::move(claim)}, {"citation", std::move(citation)}}};
  };
  return {
      entry("topological-slice-disc",
            "the Whitehead double has Alexander polynomial 1, hence a topological slice disc; "
            "two parallel copies cap off the band-cut surface",
            "Freedman (1984): knots with Alexander polynomial 1 are topologically slice"),
      entry("smooth-slice-disc",
            "cutting the other band of the Seifert surface gives a two-component unlink, capped by smooth discs",
            "band move / saddle move construction of a smooth ribbon disc"),
      entry("prime-selection",
            "the kernel of H_1 of the zero-surgery into the disc exterior is a metaboliser; if it equals <alpha1> "
            "there is a prime r with ker(H_1(Sigma_r) -> H_1(V_r)) generated by x1",
            "Cochran-Orr-Teichner (1999) metaboliser theorem; prime selection lemma of the bipolar filtration work (2021) with Cha (2021)"),
      entry("d-invariant-nonvanishing",
            "a smooth disc forces d(Sigma_r, s + k x1) = 0 for all k, yet some k gives a nonzero value",
            "Grigsby-Ruberman-Strle (2008) vanishing; non-vanishing from the bipolar filtration work (2021) and Cha (2021)"),
  };
}

}  // namespace

ObstructionReport obstruction_report(long m, const std::vector<long>& cover_degrees) {
  const auto params = family_params(m);
  if (cover_degrees.empty()) throw InvalidInput("obstruction_report: no cover degrees given");
  std::set<long> seen;
  for (long r : cover_degrees) {
    if (r < 2 || !is_prime(Integer(r)))
      throw InvalidInput("obstruction_report: cover degree " + std::to_string(r) + " is not prime");
    if (!seen.insert(r).second)
      throw InvalidInput("obstruction_report: cover degree " + std::to_string(r) + " repeated");
  }

  ObstructionReport report;
  report.m = m;
  report.odd_regime = params.odd_regime;
  report.cover_degrees = cover_degrees;
  if (!params.odd_regime)
    report.warnings.push_back("m = " + std::to_string(m) +
                              " is even: the slice-disc theorem restricts to odd m; algebraic checks only");

  const SeifertMatrix v = family_seifert(m);
  report.checks = module_steps(m, v);
  if (report.has_failure()) {
    report.conclusion = "aborted: step " + report.checks.back().name + " failed";
    return report;
  }

  std::vector<std::future<CoverSubreport>> pending;
  for (long r : cover_degrees) pending.push_back(std::async(std::launch::async, cover_subreport, m, r, std::cref(v)));
  for (auto& f : pending) {
    auto sub = f.get();
    if (report.has_failure()) continue;  // drain the rest, keep nothing past the first failure
    report.covers.push_back(std::move(sub));
  }
  if (report.has_failure()) {
    const auto& last = report.covers.back();
    report.conclusion = "aborted: step " + last.steps.back().name + " failed at r = " + std::to_string(last.r);
    return report;
  }
  report.external = external_steps();
  report.conclusion = kConclusionComplete;
  return report;
}

}  // namespace kslice
