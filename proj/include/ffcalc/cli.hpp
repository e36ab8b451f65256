#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ffcalc::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "ffcalc 1.0.0";

/// Exit/error codes: 0 ok, 1 domain (precondition) error, 2 parse error.
enum ErrorCode : int { kOk = 0, kDomainError = 1, kParseError = 2 };

struct Error {
    int code = kParseError;
    std::string message;
    std::string location;
};

struct Request {
    std::string command;
    json payload = json::object();
};

struct Response {
    bool ok = false;
    json result;
    std::optional<Error> error;

    static Response success(json result) { return {true, std::move(result), std::nullopt}; }
    static Response failure(Error e) { return {false, nullptr, std::move(e)}; }

    int exit_code() const noexcept { return ok ? kOk : error->code; }
    /// {"ok":true,"result":...} or {"error":{...},"ok":false}; keys sorted.
    json to_json() const;
};

/// Known command names in sorted order.
const std::vector<std::string>& commands();

/// Decodes `{"command": ..., "payload": ...}`; schema problems are code 2.
Response parse_request(const json& j, Request& out);

/// Dispatch one request. Never throws.
Response run(const Request& request);

/// Randomized cross-check suites; deterministic for a fixed (seed, budget).
Response selftest(std::uint64_t seed, std::int64_t budget);

struct RequestLine {
    std::size_t line = 0;  // 1-based
    std::optional<Request> request;
    std::optional<Error> error;  // set when the line failed to parse
};

/// One entry per nonempty line of newline-delimited JSON.
std::vector<RequestLine> read_requests(std::istream& in);

/// Full batch: read, run, write one response line per request in input
/// order. Returns the process exit code (the largest error code seen).
int run_batch(std::istream& in, std::ostream& out, bool pretty);

std::string dump(const json& j, bool pretty);

}  // namespace ffcalc::cli
