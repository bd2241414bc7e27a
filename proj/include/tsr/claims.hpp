#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsr/reductions.hpp"

namespace tsr {

struct ClaimResult {
    std::string id;
    bool pass = true;
    std::optional<TokenConfig> counterexample;
    std::string detail;
    std::size_t checked = 0;  // number of configurations or cases examined
};

// Class count and class size recovered from the interval labels of a leafage artifact.
std::pair<std::size_t, std::size_t> leafage_shape(const ReductionArtifact& a);

// Tokens on u^1..u^s and w^{s+1}..w^n of class i (1-based), s in [0, n].
TokenConfig split_tokens(const ReductionArtifact& a, int i, std::size_t n, std::size_t s);

ClaimResult claim_structure(const ReductionArtifact& a);

ClaimResult claim_ntokens(const ReductionArtifact& a);
ClaimResult claim_lessthann(const ReductionArtifact& a);
ClaimResult claim_edge(const ReductionArtifact& a);

// Guard set I_park + J_park + J_index; literal_guard swaps J_index for K_index.
ClaimResult claim_choke1(const ReductionArtifact& a, std::size_t budget = kDefaultBudget,
                         bool literal_guard = false);
ClaimResult claim_atmost_n1(const ReductionArtifact& a);
ClaimResult claim_usable(const ReductionArtifact& a);

// Structure check plus the suite matching a.which.
std::vector<ClaimResult> run_claims(const ReductionArtifact& a, std::size_t budget = kDefaultBudget);

}  // namespace tsr
