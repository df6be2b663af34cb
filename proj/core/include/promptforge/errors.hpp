#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace promptforge {

/// Base class for all promptforge errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Config or flag validation failure. Carries every offending key at once.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> issues)
        : Error(join(issues)), issues_(std::move(issues)) {}
    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string msg = "config validation failed:";
        for (const auto& s : issues) {
            msg += "\n  - " + s;
        }
        return msg;
    }
    std::vector<std::string> issues_;
};

/// HTTP or connection failure that survived the retry budget.
class TransportError : public Error {
public:
    TransportError(const std::string& what, int attempts)
        : Error(what), attempts_(attempts) {}
    int attempts() const noexcept { return attempts_; }

private:
    int attempts_;
};

/// A backend reply that could not be parsed. Carries the raw reply text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::string raw_reply)
        : Error(what), raw_reply_(std::move(raw_reply)) {}
    const std::string& raw_reply() const noexcept { return raw_reply_; }

private:
    std::string raw_reply_;
};

/// A judge comparison that failed after all parse/transport retries.
class JudgeError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

/// Checkpoint or file schema mismatch; names both versions.
class VersionError : public Error {
public:
    VersionError(int found, int expected)
        : Error("schema version " + std::to_string(found) + " is not supported (expected " +
                std::to_string(expected) + ")"),
          found_(found), expected_(expected) {}
    int found() const noexcept { return found_; }
    int expected() const noexcept { return expected_; }

private:
    int found_;
    int expected_;
};

/// I/O failure during export; carries the number of records already written.
class ExportError : public Error {
public:
    ExportError(const std::string& what, std::size_t written)
        : Error(what), written_(written) {}
    std::size_t written() const noexcept { return written_; }

private:
    std::size_t written_;
};

/// Non-finite loss or gradient; carries a diagnostic state dump.
class TrainingError : public Error {
public:
    TrainingError(const std::string& what, std::string diagnostics)
        : Error(what), diagnostics_(std::move(diagnostics)) {}
    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string diagnostics_;
};

/// A training round aborted mid-way; the checkpoint on disk is resumable.
class RoundAbortedError : public Error {
public:
    RoundAbortedError(const std::string& what, int round_index)
        : Error(what), round_index_(round_index) {}
    int round_index() const noexcept { return round_index_; }

private:
    int round_index_;
};

} // namespace promptforge
