#include "ssf/spaceform.hpp"

#include <sstream>

#include "ssf/errors.hpp"

namespace ssf {

namespace {

// Citations name the source result, not where it is restated.
constexpr const char* kCiteDimension = "dimension range n >= 5 of the PSC moduli results";
constexpr const char* kCiteEvenOrientation =
    "Lefschetz fixed point theorem: nontrivial elements reverse orientation in even dimension";
constexpr const char* kCitePeriodic =
    "Cartan-Eilenberg: free actions on odd spheres force periodic cohomology";
constexpr const char* kCiteQuaternion =
    "quaternion 2-groups act freely on homotopy spheres only in dimension 3 mod 4";
constexpr const char* kCiteKwasikSchultz = "Kwasik-Schultz PSC existence for space forms";
constexpr const char* kCiteLensSpin = "Franz: lens space S^(2m-1)/C_p is spin iff m even or p odd";
constexpr const char* kCiteQuaternionSpin =
    "Kwasik-Schultz: spin criterion extends to quaternion 2-Sylow subgroups";
constexpr const char* kCiteRpn = "Stiefel-Whitney classes of RP^n via homotopy invariance";
constexpr const char* kCiteBg2 = "Botvinnik-Gilkey odd-dimensional eta invariant criterion";
constexpr const char* kCiteBg3 = "Botvinnik-Gilkey even-dimensional Pin criterion";
constexpr const char* kCiteExtension =
    "central Z2 extension of the action lifted to the spin bundle of the universal cover";

std::string sylow_summary(const std::map<std::uint64_t, SylowType>& report) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, t] : report) {
    if (!first) os << ", ";
    first = false;
    os << p << ": " << to_string(t);
  }
  return first ? "none" : os.str();
}

void require_free_action(const SpaceFormInstance& inst) {
  if (!free_action_necessary(inst).pass) {
    throw PreconditionError("group fails the necessary conditions for a free action");
  }
}

bool sylow2_quaternion(const FiniteGroup& g) {
  const auto report = periodicity_report(g);
  auto it = report.find(2);
  return it != report.end() && it->second == SylowType::GeneralizedQuaternion;
}

}  // namespace

SpaceFormInstance::SpaceFormInstance(int dimension, FiniteGroup g, std::optional<bool> alpha)
    : n(dimension), group(std::move(g)), alpha_vanishes(alpha) {
  if (n < 2) throw PreconditionError("dimension must be at least 2");
}

FreeActionReport free_action_necessary(const SpaceFormInstance& inst) {
  FreeActionReport report;
  const auto order = inst.group.order();
  if (!inst.odd()) {
    if (order > 2) {
      report.pass = false;
      report.failures.push_back({"even dimension allows only trivial or order-2 groups",
                                 kCiteEvenOrientation});
    }
    return report;
  }
  report.sylow = periodicity_report(inst.group);
  if (!is_periodic(report.sylow)) {
    report.pass = false;
    report.failures.push_back(
        {"some Sylow subgroup is neither cyclic nor generalized quaternion", kCitePeriodic});
  }
  auto two = report.sylow.find(2);
  if (two != report.sylow.end() && two->second == SylowType::GeneralizedQuaternion &&
      inst.n % 4 != 3) {
    report.pass = false;
    report.failures.push_back(
        {"generalized quaternion 2-Sylow subgroup requires n = 3 mod 4", kCiteQuaternion});
  }
  return report;
}

std::string HomotopyModel::str() const {
  switch (kind) {
    case Kind::Sphere:
      return "sphere";
    case Kind::RealProjective:
      return "real_projective";
    case Kind::Lens:
      return "lens(" + std::to_string(p) + ", " + std::to_string(m) + ")";
  }
  return "unknown";
}

HomotopyModel homotopy_model(const SpaceFormInstance& inst) {
  if (!is_cyclic(inst.group)) throw PreconditionError("homotopy model needs a cyclic group");
  const auto order = inst.group.order();
  if (order == 1) return {HomotopyModel::Kind::Sphere};
  if (!inst.odd()) {
    if (order != 2) throw PreconditionError("even dimension allows only C2");
    return {HomotopyModel::Kind::RealProjective};
  }
  return {HomotopyModel::Kind::Lens, order, inst.m()};
}

bool lens_spin(std::size_t p, int m) { return m % 2 == 0 || p % 2 == 1; }

CharacteristicData rpn_characteristic(int n) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("RP^n data needs even n >= 2");
  CharacteristicData d;
  d.w1_nonzero = true;  // n + 1 is odd
  const long long coeff = static_cast<long long>(n) * (n + 1) / 2;
  d.w2_nonzero = coeff % 2 != 0;
  d.orientable = false;
  d.spin = false;
  d.pin_plus = !d.w2_nonzero;
  // w1^2 = a^2 is nonzero for n >= 2, so w2 + w1^2 vanishes iff w2 = a^2.
  d.pin_minus = d.w2_nonzero;
  return d;
}

CharacteristicData spin_structure(const SpaceFormInstance& inst) {
  require_free_action(inst);
  const auto order = inst.group.order();
  if (order == 1) return CharacteristicData{false, false, true, true, true, true, false};
  if (!inst.odd()) return rpn_characteristic(inst.n);

  CharacteristicData d;
  d.orientable = true;
  d.w1_nonzero = false;
  d.spin = inst.m() % 2 == 0 || order % 2 == 1;
  d.w2_nonzero = !d.spin;
  d.pin_plus = d.spin;
  d.pin_minus = d.spin;
  d.quaternion_case_cited = sylow2_quaternion(inst.group);
  return d;
}

const char* to_string(Psc p) {
  switch (p) {
    case Psc::Yes:
      return "yes";
    case Psc::No:
      return "no";
    case Psc::NeedsAlpha:
      return "needs_alpha";
  }
  return "needs_alpha";
}

Psc psc_exists(const SpaceFormInstance& inst) {
  if (inst.n < 5) throw PreconditionError("PSC existence criterion needs n >= 5");
  const int r = inst.n % 8;
  if (r != 1 && r != 2) return Psc::Yes;
  if (inst.group.order() % 2 == 0) return Psc::Yes;
  if (!inst.alpha_vanishes) return Psc::NeedsAlpha;
  return *inst.alpha_vanishes ? Psc::Yes : Psc::No;
}

std::vector<CohomologyClass> consistent_extension_classes(const SpaceFormInstance& inst) {
  if (!inst.odd()) throw PreconditionError("extension classes are used for odd n only");
  return consistent_extension_classes(inst, cocycle_space(inst.group));
}

std::vector<CohomologyClass> consistent_extension_classes(const SpaceFormInstance& inst,
                                                          const H2Data& h2) {
  if (!inst.odd()) throw PreconditionError("extension classes are used for odd n only");
  if (!h2.group.same_table(inst.group)) throw PreconditionError("H^2 data for another group");
  require_free_action(inst);
  const bool must_split = inst.m() % 2 == 0;
  const auto& g = inst.group;
  std::vector<CohomologyClass> out;
  for (const auto& cls : h2.classes) {
    const auto ext = build_extension(g, cls.representative);
    bool ok = true;
    for (Elem a = 1; a < g.order() && ok; ++a) {
      if (g.element_order(a) % 2 == 0) ok = splits_on_cyclic(ext, a) == must_split;
    }
    if (ok) out.push_back(cls);
  }
  return out;
}

std::optional<Elem> bg2_witness(const ExtensionGroup& e, int m) {
  const auto& t = e.total();
  const auto classes = conjugacy_classes(t);
  const auto idx = class_index_map(t, classes);
  for (Elem g = 0; g < t.order(); ++g) {
    const Elem neg = e.negate(g);
    if (m % 2 == 0) {
      if (g == kIdentity || g == ExtensionGroup::z()) continue;
      if (idx[neg] != idx[g] && idx[t.inv(neg)] != idx[g]) return g;
    } else {
      if (idx[neg] != idx[g] && idx[t.inv(g)] != idx[g]) return g;
    }
  }
  return std::nullopt;
}

bool verify_bg2_witness(const ExtensionGroup& e, int m, Elem g) {
  const auto& t = e.total();
  if (g >= t.order()) return false;
  auto conjugate_to = [&](Elem target) {
    for (Elem h = 0; h < t.order(); ++h)
      if (t.mul(t.mul(h, g), t.inv(h)) == target) return true;
    return false;
  };
  const Elem neg = t.mul(ExtensionGroup::z(), g);
  if (m % 2 == 0) {
    if (g == kIdentity || g == ExtensionGroup::z()) return false;
    return !conjugate_to(neg) && !conjugate_to(t.inv(neg));
  }
  return !conjugate_to(neg) && !conjugate_to(t.inv(g));
}

Bg3Result bg3_applicable(const SpaceFormInstance& inst) {
  Bg3Result r;
  if (inst.odd() || inst.n < 6 || inst.group.order() != 2) return r;
  const auto d = rpn_characteristic(inst.n);
  r.characteristic = d;
  r.epsilon = inst.m() % 2 == 0 ? '+' : '-';
  const auto pin = *r.epsilon == '+' ? d.pin_plus : d.pin_minus;
  r.applicable = !d.orientable && pin.value_or(false);
  return r;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::InfinitelyManyComponents:
      return "InfinitelyManyComponents";
    case Outcome::NoPscMetric:
      return "NoPscMetric";
    case Outcome::NeedsAlphaInput:
      return "NeedsAlphaInput";
    case Outcome::NotASpaceFormGroup:
      return "NotASpaceFormGroup";
    case Outcome::SimplyConnectedOutOfScope:
      return "SimplyConnectedOutOfScope";
    case Outcome::DimensionOutOfScope:
      return "DimensionOutOfScope";
  }
  return "DimensionOutOfScope";
}

const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::OddConditionA:
      return "Thm3.1a";
    case Theorem::OddConditionB:
      return "Thm3.1b";
    case Theorem::EvenPin:
      return "Thm3.2";
  }
  return "";
}

namespace {

Verdict classify_impl(const SpaceFormInstance& inst, const H2Data* h2) {
  Verdict v;
  auto step = [&v](std::string name, std::string cite, std::string result) {
    v.trace.push_back({std::move(name), std::move(cite), std::move(result)});
  };
  const auto order = inst.group.order();

  if (inst.n % 2 == 0 && order == 2) v.characteristic = rpn_characteristic(inst.n);

  if (inst.n < 5) {
    step("dimension gate", kCiteDimension, "n = " + std::to_string(inst.n) + " < 5");
    v.outcome = Outcome::DimensionOutOfScope;
    return v;
  }
  step("dimension gate", kCiteDimension, "n = " + std::to_string(inst.n) + ", m = " +
                                             std::to_string(inst.m()));
  if (order == 1) {
    step("fundamental group", "universal cover is the manifold itself", "trivial group");
    v.characteristic = CharacteristicData{false, false, true, true, true, true, false};
    v.outcome = Outcome::SimplyConnectedOutOfScope;
    return v;
  }

  const auto fa = free_action_necessary(inst);
  if (inst.odd()) step("Sylow structure", kCitePeriodic, sylow_summary(fa.sylow));
  if (!fa.pass) {
    for (const auto& f : fa.failures) step("free action necessary conditions", f.cite, f.criterion);
    if (inst.odd()) {
      CharacteristicData d;
      d.spin = inst.m() % 2 == 0 || order % 2 == 1;
      d.w2_nonzero = !d.spin;
      v.characteristic = d;
    } else if (!v.characteristic) {
      CharacteristicData d;
      d.orientable = false;
      d.spin = false;
      d.w1_nonzero = true;
      v.characteristic = d;
    }
    v.outcome = Outcome::NotASpaceFormGroup;
    return v;
  }
  step("free action necessary conditions",
       inst.odd() ? kCitePeriodic : kCiteEvenOrientation, "pass (necessary conditions only)");

  v.characteristic = spin_structure(inst);
  const auto& cd = *v.characteristic;
  if (inst.odd()) {
    const char* cite = cd.quaternion_case_cited ? kCiteQuaternionSpin : kCiteLensSpin;
    step("orientation and spin", cite,
         std::string("orientable; ") + (cd.spin ? "spin" : "not spin"));
  } else {
    step("Stiefel-Whitney classes", kCiteRpn,
         "w1 = " + cd.w1_str() + ", w2 = " + cd.w2_str() + ", not orientable");
  }

  v.psc = psc_exists(inst);
  step("PSC existence", kCiteKwasikSchultz, to_string(*v.psc));
  if (*v.psc == Psc::No) {
    v.outcome = Outcome::NoPscMetric;
    return v;
  }
  if (*v.psc == Psc::NeedsAlpha) {
    v.outcome = Outcome::NeedsAlphaInput;
    return v;
  }

  if (!inst.odd()) {
    const auto bg3 = bg3_applicable(inst);
    const std::string pin = std::string("Pin") + *bg3.epsilon;
    if (!bg3.applicable) {
      throw std::logic_error("even-dimensional instance without the required " + pin +
                             " structure");
    }
    step("Pin structure", kCiteBg3, pin + " structure exists (epsilon = sign (-1)^m)");
    v.theorem = Theorem::EvenPin;
    v.outcome = Outcome::InfinitelyManyComponents;
    return v;
  }

  std::optional<H2Data> local;
  if (!h2) {
    local = cocycle_space(inst.group);
    h2 = &*local;
  }
  const auto classes = consistent_extension_classes(inst, *h2);
  v.classes_considered = classes.size();
  step("spin extension classes", kCiteExtension,
       std::to_string(classes.size()) + " of " + std::to_string(h2->classes.size()) +
           " classes consistent with lens-space restrictions (" +
           (inst.m() % 2 == 0 ? "split" : "non-split") + " on even cyclic subgroups)");
  if (classes.empty()) throw std::logic_error("no extension class is consistent");

  const int m = inst.m();
  const auto theorem = m % 2 == 0 ? Theorem::OddConditionA : Theorem::OddConditionB;
  for (const auto& cls : classes) {
    const auto ext = build_extension(inst.group, cls.representative);
    const auto w = bg2_witness(ext, m);
    if (!w || !verify_bg2_witness(ext, m, *w)) {
      throw std::logic_error("extension class " + std::to_string(cls.index) +
                             " has no verified conjugacy witness");
    }
    v.witnesses.push_back({cls.index, *w, ext.total().label(*w)});
    step("conjugacy witness", kCiteBg2,
         "class " + std::to_string(cls.index) + ": " + ext.total().label(*w) +
             (m % 2 == 0 ? " not conjugate to -g or -g^-1" : " not conjugate to -g or g^-1"));
  }
  v.theorem = theorem;
  v.outcome = Outcome::InfinitelyManyComponents;
  return v;
}

}  // namespace

Verdict classify(const SpaceFormInstance& inst) { return classify_impl(inst, nullptr); }

Verdict classify(const SpaceFormInstance& inst, const H2Data& h2) {
  return classify_impl(inst, &h2);
}

}  // namespace ssf
