#include "canord/acceptance.hpp"

#include <iostream>

int main() {
    bool all = true;
    for (const auto& r : canord::run_acceptance()) {
        std::cout << canord::format_result(r) << std::endl;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
