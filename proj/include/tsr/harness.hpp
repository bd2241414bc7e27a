#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tsr/claims.hpp"
#include "tsr/io.hpp"
#include "tsr/reductions.hpp"

namespace tsr {

using Rng = std::mt19937_64;

// Raw-bit helpers so generated instances do not depend on the standard library's distributions.
inline bool coin(Rng& rng, double p) { return double(rng() >> 11) * 0x1.0p-53 < p; }
inline std::size_t pick(Rng& rng, std::size_t m) { return static_cast<std::size_t>(rng() % m); }

inline constexpr std::size_t kDefaultAttempts = 10'000;

Graph gen_nonblocking_instance(std::size_t n, std::size_t k, std::uint64_t seed,
                               std::size_t attempts = kDefaultAttempts);

enum class Variant { is, clique };
PartitionedGraph gen_partitioned(std::size_t k, std::size_t n, double density, std::uint64_t seed, Variant variant);

// Clique {0..p-1}, independent set {p..p+q-1}, each cross pair present with probability density.
Graph gen_split(std::size_t p, std::size_t q, double density, std::uint64_t seed);
// Random independent set of the given size; throws GenerationFailure if none is found.
TokenConfig gen_independent(const Graph& g, std::size_t size, Rng& rng, std::size_t attempts = kDefaultAttempts);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

struct LemmaReport {
    std::string lemma;
    std::string digest;
    bool source_yes = false;
    json source_witness;
    std::string reduced_verdict;  // connected | disconnected | empty | reachable | unreachable
    json reduced_witness;
    bool agrees = false;
    std::vector<ClaimResult> claims;
    std::uint64_t states = 0;
    std::vector<std::string> warnings;  // copied from the artifact
    std::map<std::string, double> timings_ms;

    bool claims_pass() const;
};

// The one place that encodes each lemma's direction: connectivity lemmas flip, reachability lemmas preserve.
bool expected_reduced_yes(const std::string& which, bool source_yes);
bool is_lemma(const std::string& which);

// trust_precondition skips the blocking-set check of the tsconn-degree reduction.
LemmaReport verify_lemma(const std::string& which, const SourceInstance& source,
                         std::size_t budget = kDefaultBudget, bool run_claim_suite = true,
                         bool trust_precondition = false);

json report_to_json(const LemmaReport& r, bool with_timings = false);

struct InstanceSpec {
    // path | cycle | nonblocking-random | split-random | partitioned-random | exhaustive-small
    std::string family;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    double density = 0.5;
};

// Instances of a family for the given lemma, in generation order.
std::vector<SourceInstance> generate_family(const InstanceSpec& spec, const std::string& which);

struct SweepReport {
    std::string which;
    std::string family;
    std::size_t total = 0;
    std::size_t agreed = 0;
    std::size_t claim_failures = 0;
    std::size_t skipped = 0;  // sources rejected by the reduction's precondition
    std::vector<LemmaReport> reports;  // sorted by digest
    std::vector<json> bundles;         // self-contained counterexamples

    bool ok() const { return agreed == total && claim_failures == 0; }
};

SweepReport sweep(const InstanceSpec& spec, const std::string& which, std::size_t budget = kDefaultBudget,
                  bool run_claim_suite = true);
SweepReport sweep_sources(const std::vector<SourceInstance>& sources, const std::string& which,
                          const std::string& family, std::size_t budget = kDefaultBudget,
                          bool run_claim_suite = true);

json sweep_to_json(const SweepReport& s, bool with_reports = true);
json bundle_for(const std::string& which, const SourceInstance& source, const LemmaReport& report);

}  // namespace tsr
