#ifndef PSL2CODES_COMMON_HPP
#define PSL2CODES_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace psl2codes {

// Error taxonomy mirrors the process exit codes of the CLI:
//   invalid_argument -> 2, cap_exceeded -> 3, falsification/internal -> 1.
// A "falsification" is a computation that contradicts a fact the library
// is built to verify; it is the most important signal the tool can emit
// and is never silently handled.
enum class errc {
    invalid_argument,
    cap_exceeded,
    falsification,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace psl2codes

#endif
