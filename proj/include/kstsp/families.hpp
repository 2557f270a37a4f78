#pragma once

#include <string>
#include <vector>

#include "kstsp/model.hpp"

namespace kstsp {

/// Three deterministic adversarial families, all with k = 2.
///   I: asymmetric; both one-city optima are the canonical ring tour, but the
///      two rings cannot be combined, so fixing one tour first gets ever
///      worse relative to the true optimum.
///   J: symmetric pickup ring vs a zigzag delivery metric; same effect for a
///      symmetric d1.
///   H: both one-city optima combine fine, yet the aggregate-distance tour
///      is bad for both, punishing the single-tour heuristic instead.
enum class Family { I, J, H };

struct FamilyParams {
    Family family = Family::I;
    int n = 6;
    Cost unit = 1000;
    Cost eps = 1;  // only I and J read it; must stay below unit
};

char family_letter(Family f);

/// Builds the instance; "1" scales to unit, "1+eps" to unit+eps, "n" to
/// n*unit, "n+1" to (n+1)*unit. Throws std::invalid_argument below the
/// family minimum (I, H: n >= 3; J: n >= 6) or when eps is out of range.
Instance family_instance(const FamilyParams& p);

/// The hand-built reference solution shipped with each family, costed from
/// the actual matrices rather than from closed forms. I supports every
/// n >= 3; J and H only even n (odd parity throws).
Solution reference_solution(const FamilyParams& p);

/// One verified claim about a family instance. claimed is the published
/// value ("" for purely informational rows), computed the value measured
/// here. status: OK (claim holds), MISMATCH (it does not; both numbers kept),
/// SKIPPED (a cap or parity rule blocked the computation), INFO.
struct ClaimRow {
    std::string family;
    int n = 0;
    std::string claim_id;
    std::string claimed;
    std::string computed;
    std::string status;
};

/// Recomputes every documented property of the family over the given sizes:
/// one-city tour optima, reference-solution feasibility and value, heuristic
/// bounds, exact optima where the enumeration caps allow, and the ratio
/// trajectories. Discrepancies are never reconciled, only reported.
std::vector<ClaimRow> verify_family_claims(Family family, const std::vector<int>& ns,
                                           Cost unit, Cost eps);

}  // namespace kstsp
