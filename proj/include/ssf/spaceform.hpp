#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssf/cohomology.hpp"
#include "ssf/extension.hpp"
#include "ssf/group.hpp"
#include "ssf/group_algorithms.hpp"

namespace ssf {

/// A candidate space form: a closed n-manifold with universal cover a
/// homotopy sphere and fundamental group G. The alpha flag records whether
/// the alpha invariant of the universal cover vanishes, when known.
struct SpaceFormInstance {
  SpaceFormInstance(int dimension, FiniteGroup g, std::optional<bool> alpha = std::nullopt);

  int n;
  FiniteGroup group;
  std::optional<bool> alpha_vanishes;

  /// n = 2m - 1 for odd n, n = 2m for even n.
  int m() const noexcept { return n % 2 ? (n + 1) / 2 : n / 2; }
  bool odd() const noexcept { return n % 2 != 0; }
};

struct CriterionFailure {
  std::string criterion;
  std::string cite;
};

/// Necessary conditions only: passing does not assert that a free action exists.
struct FreeActionReport {
  bool pass = true;
  std::map<std::uint64_t, SylowType> sylow;
  std::vector<CriterionFailure> failures;
};

FreeActionReport free_action_necessary(const SpaceFormInstance& inst);

struct HomotopyModel {
  enum class Kind { Sphere, RealProjective, Lens };
  Kind kind;
  std::size_t p = 1;  // lens: |G|
  int m = 0;          // lens: S^(2m-1) / C_p

  std::string str() const;
  bool operator==(const HomotopyModel&) const = default;
};

/// Linear model up to homotopy for cyclic G. Throws PreconditionError for
/// non-cyclic G or for even n with |G| > 2.
HomotopyModel homotopy_model(const SpaceFormInstance& inst);

/// A lens space S^(2m-1)/C_p is spin iff m is even or p is odd.
bool lens_spin(std::size_t p, int m);

/// Stiefel-Whitney data. w1 is either 0 or the generator a; w2 is 0 or a^2
/// (for odd n, "nonzero" records the spin obstruction).
struct CharacteristicData {
  bool w1_nonzero = false;
  bool w2_nonzero = false;
  bool orientable = true;
  bool spin = true;
  std::optional<bool> pin_plus;
  std::optional<bool> pin_minus;
  /// Spin verdict relies on the externally proven quaternion-Sylow case.
  bool quaternion_case_cited = false;

  std::string w1_str() const { return w1_nonzero ? "a" : "0"; }
  std::string w2_str() const { return w2_nonzero ? "a^2" : "0"; }
};

/// Orientability and spin structure. Throws PreconditionError if the
/// free-action conditions fail.
CharacteristicData spin_structure(const SpaceFormInstance& inst);

/// Characteristic classes of RP^n: w1 = (n+1)a = a, w2 = n(n+1)/2 a^2.
/// Throws PreconditionError for odd n or n < 2.
CharacteristicData rpn_characteristic(int n);

enum class Psc { Yes, No, NeedsAlpha };
const char* to_string(Psc p);

/// PSC existence for n >= 5. Throws PreconditionError for n < 5.
Psc psc_exists(const SpaceFormInstance& inst);

/// H^2 classes compatible with the lens-space restrictions on cyclic
/// subgroups: an even-order cyclic subgroup splits iff m is even.
/// Throws PreconditionError for even n or failed free-action conditions and
/// BoundError when |G| exceeds the cohomology bound.
std::vector<CohomologyClass> consistent_extension_classes(const SpaceFormInstance& inst);
std::vector<CohomologyClass> consistent_extension_classes(const SpaceFormInstance& inst,
                                                          const H2Data& h2);

/// First element of the total group, in index order, meeting the
/// odd-dimensional conjugacy condition for half-dimension m:
///   m even: g != 1, z and the class of g contains neither z*g nor z*g^-1
///   m odd:  the class of g contains neither z*g nor g^-1
std::optional<Elem> bg2_witness(const ExtensionGroup& e, int m);

/// Re-checks a witness by direct search over conjugating elements.
bool verify_bg2_witness(const ExtensionGroup& e, int m, Elem g);

struct Bg3Result {
  bool applicable = false;
  std::optional<char> epsilon;  // '+' or '-', sign of (-1)^m
  std::optional<CharacteristicData> characteristic;
};

Bg3Result bg3_applicable(const SpaceFormInstance& inst);

enum class Outcome {
  InfinitelyManyComponents,
  NoPscMetric,
  NeedsAlphaInput,
  NotASpaceFormGroup,
  SimplyConnectedOutOfScope,
  DimensionOutOfScope,
};
const char* to_string(Outcome o);

enum class Theorem { OddConditionA, OddConditionB, EvenPin };
/// Wire names: "Thm3.1a", "Thm3.1b", "Thm3.2".
const char* to_string(Theorem t);

struct TraceStep {
  std::string step;
  std::string cite;
  std::string result;
  bool operator==(const TraceStep&) const = default;
};

struct WitnessRecord {
  std::size_t class_index;
  Elem element;
  std::string label;
};

struct Verdict {
  Outcome outcome = Outcome::DimensionOutOfScope;
  std::optional<Theorem> theorem;
  std::vector<WitnessRecord> witnesses;
  std::vector<TraceStep> trace;
  std::optional<CharacteristicData> characteristic;
  std::optional<Psc> psc;
  std::size_t classes_considered = 0;
};

/// Full case analysis. Mathematical outcomes are returned in-band; only
/// BoundError (cohomology too large) escapes.
Verdict classify(const SpaceFormInstance& inst);
/// Same, reusing a precomputed H^2 for inst.group.
Verdict classify(const SpaceFormInstance& inst, const H2Data& h2);

}  // namespace ssf
