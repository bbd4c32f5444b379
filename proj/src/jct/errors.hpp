#pragma once

#include <stdexcept>
#include <string>

namespace jct {

enum class errc {
    invalid_argument,
    below_critical,
    degenerate_site,
    no_convergence,
    dimension_cap,
    no_crossing,
    unstable_form,
    io_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::below_critical: return "below_critical";
    case errc::degenerate_site: return "degenerate_site";
    case errc::no_convergence: return "no_convergence";
    case errc::dimension_cap: return "dimension_cap";
    case errc::no_crossing: return "no_crossing";
    case errc::unstable_form: return "unstable_form";
    case errc::io_error: return "io_error";
    }
    return "unknown";
}

} // namespace jct
