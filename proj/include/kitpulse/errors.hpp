#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kitpulse {

// Site-index / operator-size mismatch between operands.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dense work requested above the configured qubit cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A contract precondition (e.g. Hermiticity) was violated.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Pattern synthesis failed; `violated_bonds` indexes into lattice.bonds.
struct synthesis_error : std::runtime_error {
    synthesis_error(const std::string& what, std::vector<int> bonds)
        : std::runtime_error(what), violated_bonds(std::move(bonds)) {}
    std::vector<int> violated_bonds;
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kitpulse
