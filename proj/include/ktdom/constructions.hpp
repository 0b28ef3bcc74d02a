#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktdom/harary.hpp"

namespace ktdom {

enum class ClaimKind {
    Exact,    // gamma = lo = hi
    Bracket,  // lo <= gamma <= hi
    Suspect,  // published closed form, recorded as stated but not trusted
};

const char* to_string(ClaimKind k);

struct Claim {
    ClaimKind kind = ClaimKind::Exact;
    int lo = 0;
    int hi = 0;  // == lo for Exact and Suspect

    bool contains(int v) const { return lo <= v && v <= hi; }

    bool operator==(const Claim&) const = default;
};

// Residue decomposition driving formula selection for H(d, n):
//   n = d*ell + r          with 0 <= r < d
//   ell + r = 2m*ell_p + r_p  with 0 <= r_p < 2m,  m = floor(d/2).
struct CaseDescriptor {
    ParityClass parity_class = ParityClass::EvenDegree;
    int m = 0;
    int ell = 0;
    int r = 0;
    int ell_p = 0;
    int r_p = 0;
    Claim claim;
    std::optional<int> alt_value;  // even-degree alternative closed form

    // The one odd-degree/even-order instance with its own carve-out.
    bool k4() const;

    bool operator==(const CaseDescriptor&) const = default;
};

// Identifiers of the published set formulas plus two harness variants:
// T22X widens T22 to the size the even-degree oracle actually needs, and
// T23_ODDX reads the final index bound of T23_ODD as ceil(n/(2m+1)) instead
// of the printed ceil(n/(m+1)).  Both originals are still emitted verbatim.
enum class FormulaId {
    T22,
    T22X,
    T23_K4,
    T23_R0,
    T23_LP0,
    T23_ODD,
    T23_ODDX,
    T23_EVEN,
    T24_R0,
    T24_R1,
    T24_LP0,
    T24_ODD,
    T24_EVEN,
};

const char* to_string(FormulaId id);
std::optional<FormulaId> formula_id_from_string(const std::string& name);

struct ConstructionResult {
    FormulaId id = FormulaId::T22;
    VertexSet set;           // positions after label reduction
    int cardinality = 0;     // |set|
    bool validated = false;  // re-checked against the definition, never assumed
    bool collapsed = false;  // label reduction merged duplicate positions

    bool operator==(const ConstructionResult&) const = default;
};

// Case decomposition and the published claim for gamma_x2,t(H(d, n)).
// For k == 2 the claim comes from the closed forms per parity class; for
// k > 2 no closed form is available and the claim degrades to the bracket
// [max lower bound, order].  ParameterError when k < 2.
CaseDescriptor classify(const HararyParams& p, int k = 2);

// Evaluates every formula applicable to the instance's case, reduces labels
// to positions, and validates each set by definition.  k = 2 only.
std::vector<ConstructionResult> construct_2tds(const HararyParams& p);

// Rotates every member by t (mod order).
VertexSet translate_set(const CirculantGraph& g, const VertexSet& s, int t);

}  // namespace ktdom
