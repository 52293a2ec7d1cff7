#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace klein {

/// One exhaustively or randomly checked identity.
struct IdentityCheck {
    std::string id;
    std::string claim;
    bool pass = true;
    std::size_t cases = 0;
    /// First failing case, empty on success.
    std::string witness;
};

/// Calls visit(check) where check(ok, description) records one case; the
/// first failing description becomes the witness.
template <class Visit>
IdentityCheck run_identity_check(std::string id, std::string claim, Visit&& visit)
{
    IdentityCheck c;
    c.id = std::move(id);
    c.claim = std::move(claim);
    visit([&c](bool ok, const std::string& what) {
        ++c.cases;
        if (!ok && c.pass) {
            c.pass = false;
            c.witness = what;
        }
    });
    return c;
}

}  // namespace klein
