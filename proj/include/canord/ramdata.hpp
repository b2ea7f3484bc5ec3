#pragma once

#include <optional>
#include <string>
#include <vector>

namespace canord {

/// One discriminant branch with its ramification index and the index of its
/// cyclic cover over the closed point.
struct RamBranch {
    std::string equation; // polynomial in x, y, or the tag "z" on an A_k centre
    int eC = 1;
    int eP = 1;
};

struct RamReport {
    std::string centre = "smooth"; // "smooth" or "A<k>"
    std::vector<RamBranch> branches;
};

/// Canonical text of a branch equation: monic, terms in a fixed order.
/// Tags that are not polynomials (such as "z") are returned unchanged.
std::string canonical_equation(const std::string& eq);

/// Compares two reports up to the coordinate changes generated by x <-> y and
/// y -> -y, applied to all branches at once, and up to branch order.
/// Returns nullopt on a match, otherwise a description of the difference.
std::optional<std::string> ram_difference(const RamReport& got, const RamReport& want);

std::string to_string(const RamReport& r);

} // namespace canord
