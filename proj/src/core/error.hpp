#pragma once

#include <stdexcept>
#include <string>

namespace jps {

// Error classes map onto the CLI exit-code contract:
// parse -> 2, unsupported -> 3, internal -> 4.
enum class errc { invalid_arg, parse, unsupported, internal };

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : error(errc::parse, what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

inline error invalid_arg(const std::string& what) { return error(errc::invalid_arg, what); }
inline error unsupported(const std::string& what) { return error(errc::unsupported, what); }
inline error internal(const std::string& what) { return error(errc::internal, what); }

} // namespace jps
