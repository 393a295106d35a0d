#include "zfx/errors.hpp"

namespace zfx {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

ParseError::ParseError(Raw, const std::string& full, std::size_t offset)
    : std::runtime_error(full), offset_(offset) {}

ParseError ParseError::with_prefix(const std::string& prefix) const {
    return ParseError(Raw{}, prefix + what(), offset_);
}

}  // namespace zfx
