#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multdisc {

enum class Errc {
    non_exact_division,
    empty_domain,
    not_square,
    dimension_too_large,
    dimension_mismatch,
    degree_too_high,
    degree_mismatch,
    degree_out_of_range,
    zero_polynomial,
    ambiguous_classification,
    chain_degenerate,
    duplicate_roots,
    zero_lead,
    root_mismatch,
    parse_error,
    leading_zero,
    cap_exceeded,
    unknown_suite,
    precondition,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

    /// Errors that mean the mathematics disagreed with itself rather than the input being bad.
    bool is_anomaly() const noexcept {
        return code_ == Errc::ambiguous_classification || code_ == Errc::chain_degenerate;
    }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace multdisc
