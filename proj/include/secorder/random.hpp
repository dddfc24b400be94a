#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <utility>

#include "secorder/families.hpp"

namespace secorder
{

/// Engine used for every seeded stream; raw output bits are consumed directly
/// so instance streams do not depend on the standard library's distributions.
using Rng = std::mt19937_64;

/// Uniform value in [0, bound) by rejection on raw engine output.
std::uint64_t uniform_below( Rng& rng, std::uint64_t bound );

/// Uniformly chosen nonempty subset of a ground set of size c.
Subset random_nonempty_subset( Rng& rng, std::size_t c );

/// Family of arity n whose components are independent uniform nonempty subsets.
SetFamily random_family( Rng& rng, const std::shared_ptr<const GroundSet>& ground, unsigned n );

/// Two independent random families over a numbered ground set of size c.
std::pair<SetFamily, SetFamily> random_pair( Rng& rng, std::size_t c, unsigned n );

} // namespace secorder
