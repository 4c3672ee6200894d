#pragma once

#include <stdexcept>
#include <string>

namespace tx {

enum class Errc {
    InvalidInput,
    Parse,
    DepthExceeded,
    Degenerate,
    NotSynchronizing,
    NotInvertible,
    NotClopen,
    Resource,
    SearchExhausted,
    Validation,
    Internal,
};

const char* errc_name(Errc c);

// All library failures are reported through this type; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace tx
