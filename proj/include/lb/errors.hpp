#pragma once

#include <stdexcept>
#include <string>

namespace lb {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class IoStatus {
    bad_magic,
    bad_version,
    truncated,
    checksum_mismatch,
    malformed,
};

inline const char* to_string(IoStatus s) {
    switch (s) {
        case IoStatus::bad_magic: return "bad magic";
        case IoStatus::bad_version: return "bad version";
        case IoStatus::truncated: return "truncated payload";
        case IoStatus::checksum_mismatch: return "checksum mismatch";
        case IoStatus::malformed: return "malformed";
    }
    return "unknown";
}

class IoError : public Error {
public:
    IoError(IoStatus status, const std::string& detail)
        : Error(std::string(to_string(status)) + ": " + detail), status_(status) {}
    IoStatus status() const { return status_; }

private:
    IoStatus status_;
};

}  // namespace lb
