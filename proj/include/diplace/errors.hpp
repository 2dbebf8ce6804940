#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diplace {

/// Malformed textual input. `position` is a byte offset when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t position = npos)
        : std::runtime_error(position == npos ? what : what + " at position " + std::to_string(position)),
          position_(position)
    {
    }
    std::size_t position() const { return position_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t position_;
};

}  // namespace diplace
