#pragma once

#include <stdexcept>
#include <string>

namespace propdiv {

enum class Errc {
    invalid_rational,
    division_by_zero,
    bad_document,
    missing_coalition,
    duplicate_key,
    player_count,
    out_of_range,
    coincidence_violation,
    upsilon_violation,
    empty_projection_set,
    domain_error,
    unknown_solution,
    param_error,
    unknown_axiom,
    unknown_kind,
    retry_exhausted,
    io_error,
};

const char* errc_name(Errc code);

// Single exception type for the whole library; `code` keeps errors
// machine-distinguishable without an exception-class zoo.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace propdiv
