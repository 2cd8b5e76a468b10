#pragma once

#include <stdexcept>
#include <string>

namespace talbot {

// Thrown when an evaluation lands on a genuine pole (of the generating
// function or of a limit profile). Kept distinct from std::domain_error so
// grid drivers can substitute sentinels at poles while still rejecting
// out-of-domain arguments.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace talbot
