#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symedge {

/// Input text could not be parsed. `offset` is the byte position of the
/// first offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A documented size guard was exceeded (exhaustive search caps, homology
/// generator caps, internal enumeration limits).
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A staged order construction failed one of its intermediate checks.
/// The failing stage is named so the instance can be investigated; the
/// construction never repairs such a failure silently.
class construction_error : public std::runtime_error {
public:
    construction_error(const std::string& stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(stage) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace symedge
