#include "propdiv/errors.hpp"

namespace propdiv {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::invalid_rational: return "invalid_rational";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::bad_document: return "bad_document";
    case Errc::missing_coalition: return "missing_coalition";
    case Errc::duplicate_key: return "duplicate_key";
    case Errc::player_count: return "player_count";
    case Errc::out_of_range: return "out_of_range";
    case Errc::coincidence_violation: return "coincidence_violation";
    case Errc::upsilon_violation: return "upsilon_violation";
    case Errc::empty_projection_set: return "empty_projection_set";
    case Errc::domain_error: return "domain_error";
    case Errc::unknown_solution: return "unknown_solution";
    case Errc::param_error: return "param_error";
    case Errc::unknown_axiom: return "unknown_axiom";
    case Errc::unknown_kind: return "unknown_kind";
    case Errc::retry_exhausted: return "retry_exhausted";
    case Errc::io_error: return "io_error";
    }
    return "unknown_error";
}

} // namespace propdiv
