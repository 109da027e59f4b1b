#pragma once

#include <stdexcept>
#include <string>

namespace qcrystal {

// A computed object violates a property the theory guarantees (a tableau
// operator leaving the semistandard set, a crystal without a unique highest
// weight vector, a pole at q = 0). Distinct from bad caller input, which is
// std::invalid_argument.
class VerificationFailure : public std::runtime_error {
  public:
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qcrystal
