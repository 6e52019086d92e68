#pragma once

#include <optional>
#include <string>

#include "nncurv/certificate.hpp"
#include "nncurv/search.hpp"

namespace nncurv {

enum class VerdictTag {
    SymmetricPair,
    CounterexampleFound,
    HoldsByClassification,
    NoCounterexampleFound,
};

const char* verdictName(VerdictTag t);

struct Verdict {
    VerdictTag tag = VerdictTag::NoCounterexampleFound;
    int taxonomyCase = 0;  // 0 when no structural case applies
    std::string notes;
    std::optional<Certificate> certificate;
    double cEstimate = 0.0;
    bool cDivergent = false;
    double minPenalized = 0.0;
    std::size_t budgetUsed = 0;
};

// rk C_amb(sub) = rk amb - rk sub + rk Z(sub); torus-aligned subalgebras.
bool isRegularSubalgebra(const Basis& sub, const Basis& amb, std::uint64_t seed = 0);

// Decision pipeline: symmetric-pair shortcut, recorded witness pair, direct
// construction where an involution is available, per-ideal structural
// holds-test on shared-torus chains, then numeric search. A NONE outcome is
// reported as evidence with a constant estimate, never as a proof.
Verdict classifyChain(const Chain& chain, const SearchBudget& budget,
                      std::uint64_t seed = 0);

}  // namespace nncurv
