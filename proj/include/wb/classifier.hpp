#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "wb/sequent.hpp"

namespace wb {

enum class NodeClass { DeltaAdjoint, SRA, SLR, SRR, AtomLeaf };

// Signed generation tree. The sign propagates from the root: lattice
// connectives keep the sign on both children, -> flips it on the first child
// and keeps it on the second. Lattice nodes are reported as delta-adjoints;
// the inductive test accounts for their other admissible classifications.
struct SignedTree {
  FormulaPtr node;
  bool positive;
  NodeClass nodeclass;
  std::vector<SignedTree> children;
};

SignedTree build_signed_tree(const FormulaPtr& f, bool positive);

// Order type epsilon (true = 1, false = the dual order) plus a dependency
// order on variables, kept transitively closed and irreflexive.
struct InductiveCertificate {
  std::map<std::string, bool> epsilon;
  std::set<std::pair<std::string, std::string>> omega;  // (a,b) means a below b
};

// Closes `pairs` under transitivity; throws if the closure is reflexive.
InductiveCertificate make_certificate(std::map<std::string, bool> epsilon,
                                      std::set<std::pair<std::string, std::string>> pairs);

// True iff +lhs and -rhs are (omega, epsilon)-inductive: every critical branch
// splits into inner nodes that may sit below the skeleton and outer skeleton
// nodes, and every right-residual node pinned into the inner segment has its
// side argument agreeing with the dual order type and built from strictly
// omega-smaller variables. Certificate entries for variables absent from the
// sequent are ignored; variables missing from the certificate default to 1.
bool is_inductive(const Inequality& ineq, const InductiveCertificate& cert);

// Exhaustive search over order types; the dependency order is synthesized as
// the transitive closure of the constraints each order type induces. Capped
// at 8 variables.
std::optional<InductiveCertificate> find_certificate(const Inequality& ineq);

std::string certificate_json(const InductiveCertificate& cert);

}  // namespace wb
