#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace psf {

/// Pass/total counts of one checked identity.
struct IdentityTally
{
    long checked = 0;
    long failed = 0;
};

struct IdentityReport
{
    int scripts = 0;
    std::map<std::string, IdentityTally> tallies;

    bool all_exact() const;
};

/**
 * Generate `seeds` random build scripts of at most `ops` operations in dimension 4,
 * replay each through the script runner and tally the g-change laws together with
 * subdivision invariance, normality, replay determinism, the facet-file round trip
 * and the vertex-link bound on g2. Every fold in a generated script is written out
 * explicitly, so the scripts replay without searching. `fault` skews the ledger.
 */
IdentityReport verify_identities(int seeds, int ops, bool fault = false, std::uint64_t first_seed = 0);

/// The script that verify_identities would generate for one seed.
std::string random_script(std::uint64_t seed, int ops);

} // namespace psf
