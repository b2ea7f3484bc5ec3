#include "canord/ramdata.hpp"

#include "canord/errors.hpp"
#include "canord/poly2.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace canord {

namespace {

bool is_polynomial(const std::string& eq) { return eq != "z"; }

using Key = std::tuple<std::string, int, int>;

std::vector<Key> keyed(const RamReport& r, int transform) {
    std::vector<Key> out;
    for (const auto& b : r.branches) {
        std::string eq = b.equation;
        if (is_polynomial(eq)) {
            Poly2 p = Poly2::parse(eq);
            // Signed permutations of the coordinates: flip y, flip x, then optionally swap.
            if (transform & 1) p = p.negate_y();
            if (transform & 2) p = p.swap_xy().negate_y().swap_xy();
            if (transform & 4) p = p.swap_xy();
            eq = p.monic().to_string();
        }
        out.emplace_back(eq, b.eC, b.eP);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::string canonical_equation(const std::string& eq) {
    if (!is_polynomial(eq)) return eq;
    return Poly2::parse(eq).monic().to_string();
}

std::optional<std::string> ram_difference(const RamReport& got, const RamReport& want) {
    if (got.centre != want.centre) return "centre " + got.centre + " differs from expected " + want.centre;
    if (got.branches.size() != want.branches.size())
        return "found " + std::to_string(got.branches.size()) + " branches, expected " +
               std::to_string(want.branches.size());
    const auto target = keyed(want, 0);
    for (int t = 0; t < 8; ++t)
        if (keyed(got, t) == target) return std::nullopt;
    return "branches " + to_string(got) + " do not match expected " + to_string(want);
}

std::string to_string(const RamReport& r) {
    std::ostringstream os;
    os << r.centre << ":";
    for (const auto& b : r.branches) os << " [" << b.equation << " eC=" << b.eC << " eP=" << b.eP << "]";
    return os.str();
}

} // namespace canord
