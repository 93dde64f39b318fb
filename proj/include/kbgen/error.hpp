#pragma once

#include <stdexcept>
#include <string>

namespace kbgen {

// Error categories map 1:1 onto CLI exit codes (usage=1, data=2, io=3).
enum class ErrorKind { usage = 1, data = 2, io = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    int exit_code() const { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

inline Error usage_error(std::string message) { return Error(ErrorKind::usage, std::move(message)); }
inline Error data_error(std::string message) { return Error(ErrorKind::data, std::move(message)); }
inline Error io_error(std::string message) { return Error(ErrorKind::io, std::move(message)); }

} // namespace kbgen
