#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyak/cache.hpp"
#include "polyak/certificate.hpp"
#include "polyak/invariants.hpp"

namespace polyak {

std::string tool_version();

struct VerifyOptions {
  int signed_ceiling = 4;    // largest order for signed arrow computations
  int unsigned_ceiling = 5;  // largest order for unsigned chord computations
  int witness_bound = 4;
  std::uint64_t shuffle_seed = 0;  // nonzero: shuffle relation rows before elimination
  Cache* cache = nullptr;
};

struct SpaceResult {
  std::vector<InvariantFunctional> basis;
  std::int64_t rows = 0;
  std::int64_t ambient = 0;
  std::string fingerprint;
};

// invariant_space through the cache, kind "space-<profile>".
SpaceResult compute_invariant_space(int n, Skeleton skeleton, Profile profile, const VerifyOptions& opts);

// Pairing of v with i_gpv(K) (or i_chord(K) for the chord profile); an
// evaluation path independent of evaluate().
Rational pairing(const InvariantFunctional& v, const GaussDiagram& k);

Certificate verify_theorem1(int n, Skeleton skeleton, const VerifyOptions& opts = {});
Certificate verify_vanishing(int n, Skeleton skeleton, const VerifyOptions& opts = {});
Certificate verify_caterpillar(int n, Skeleton skeleton, const VerifyOptions& opts = {});
Certificate verify_average(int n, Skeleton skeleton, const VerifyOptions& opts = {});
// flavor: ArrowSigned or ChordSigned
Certificate verify_membership_lemma(int n, Flavor flavor, Skeleton skeleton, const VerifyOptions& opts = {});
Certificate verify_stability(int n_low, int n_high, Skeleton skeleton, const VerifyOptions& opts = {});

// Every claim on both skeletons up to order_max.
std::vector<Certificate> verify_all(int order_max, const VerifyOptions& opts = {});

// Fail beats Inconclusive beats Pass.
Status combined_status(const std::vector<Certificate>& certs);

}  // namespace polyak
