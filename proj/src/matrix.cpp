#include "multdisc/matrix.hpp"

namespace multdisc {

bool is_permutation(const Permutation& tau) {
    std::vector<bool> seen(tau.size(), false);
    for (auto t : tau) {
        if (t >= tau.size() || seen[t]) return false;
        seen[t] = true;
    }
    return true;
}

Permutation inverse(const Permutation& tau) {
    if (!is_permutation(tau)) fail(Errc::precondition, "not a permutation");
    Permutation inv(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) inv[tau[i]] = i;
    return inv;
}

}  // namespace multdisc
