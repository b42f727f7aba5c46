#pragma once

#include <string>
#include <vector>

#include "medist/adversary.hpp"
#include "medist/certificate.hpp"
#include "medist/lp.hpp"
#include "medist/profile.hpp"

namespace medist::fixtures {

/// The bundled 7-facility, 7-voter instance whose optimal randomized
/// distortion exceeds 2 (the published counterexample).
std::string reference_profile_text();
const PreferenceProfile& reference_instance();        // coalesced groups (3, 3, 1)
PreferenceProfile reference_instance_expanded();      // seven weight-1 clients

/// Published instance-optimal lottery (printed to six decimals; sums to
/// 1.000001, so normalize before use).
Lottery reference_lottery();

/// Published optimal distortion of the instance.
double reference_gamma();  // 2.063164

/// Published per-facility shortest-path metrics with exact edge weights,
/// packaged as a verifiable lower-bound certificate.
Certificate reference_certificate();

/// Published multiplier values resolved onto the mechanically built min-max
/// LP of the expanded instance. The point carries the printed gamma, q,
/// ranking-chain and triangle multipliers; everything unprinted is zero.
struct ReferenceBestDistPoint {
    lp::LinearProgram lp;
    std::vector<double> point;
};
ReferenceBestDistPoint reference_best_dist_point();

}  // namespace medist::fixtures
