// Error type shared by all punkt modules. Every failure carries the name
// of the operation that raised it so the CLI can report the failing stage.

#ifndef PUNKT_ERROR_HPP
#define PUNKT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace punkt {

class Error : public std::runtime_error {
public:
    Error(std::string stage, const std::string& message)
        : std::runtime_error(message), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

} // namespace punkt

#endif
