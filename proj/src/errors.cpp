#include "multdisc/errors.hpp"

namespace multdisc {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::non_exact_division: return "NonExactDivision";
        case Errc::empty_domain: return "EmptyDomain";
        case Errc::not_square: return "NotSquare";
        case Errc::dimension_too_large: return "DimensionTooLarge";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::degree_too_high: return "DegreeTooHigh";
        case Errc::degree_mismatch: return "DegreeMismatch";
        case Errc::degree_out_of_range: return "DegreeOutOfRange";
        case Errc::zero_polynomial: return "ZeroPolynomial";
        case Errc::ambiguous_classification: return "AmbiguousClassification";
        case Errc::chain_degenerate: return "ChainDegenerate";
        case Errc::duplicate_roots: return "DuplicateRoots";
        case Errc::zero_lead: return "ZeroLead";
        case Errc::root_mismatch: return "RootMismatch";
        case Errc::parse_error: return "ParseError";
        case Errc::leading_zero: return "LeadingZero";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::unknown_suite: return "UnknownSuite";
        case Errc::precondition: return "PreconditionViolated";
    }
    return "Unknown";
}

}  // namespace multdisc
