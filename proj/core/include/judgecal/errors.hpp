#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace judgecal {

/// Base for every error the toolkit raises. `code()` is a stable,
/// machine-readable identifier; `what()` carries the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Configuration or usage problems. The CLI maps these to exit code 2,
/// everything else derived from Error to exit code 1.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error("config_error", msg) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error("invalid_argument", msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error("io_error", msg) {}
};

// --- dataset ingestion ---

struct MalformedRecord : Error {
    MalformedRecord(std::size_t index, const std::string& reason)
        : Error("malformed_record",
                "record " + std::to_string(index) + ": " + reason),
          index(index), reason(reason) {}
    std::size_t index;
    std::string reason;
};

struct DuplicateId : Error {
    explicit DuplicateId(const std::string& id)
        : Error("duplicate_id", "duplicate id: " + id), id(id) {}
    std::string id;
};

struct EmptyPool : Error {
    explicit EmptyPool(const std::string& msg) : Error("empty_pool", msg) {}
};

struct SampleTooLarge : Error {
    SampleTooLarge(std::size_t requested, std::size_t available)
        : Error("sample_too_large",
                "requested " + std::to_string(requested) + " from pool of " +
                    std::to_string(available)) {}
};

// --- providers ---

struct ProviderError : Error {
    ProviderError(int status, const std::string& body)
        : Error("provider_error",
                "provider returned status " + std::to_string(status) + ": " + body),
          status(status), body(body) {}
    int status;
    std::string body;
};

struct LogprobsUnavailable : Error {
    explicit LogprobsUnavailable(const std::string& msg)
        : Error("logprobs_unavailable", msg) {}
};

struct AuthMissing : Error {
    explicit AuthMissing(const std::string& env_var)
        : Error("auth_missing",
                "credential environment variable is not set: " + env_var),
          env_var(env_var) {}
    std::string env_var;
};

struct EmptyResponse : Error {
    explicit EmptyResponse(const std::string& msg) : Error("empty_response", msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg)
        : Error("dimension_mismatch", msg) {}
};

struct MissingFixture : Error {
    explicit MissingFixture(const std::string& key)
        : Error("missing_fixture", "no replay fixture for request key " + key),
          key(key) {}
    std::string key;
};

// --- scoring ---

struct WeightLengthMismatch : Error {
    WeightLengthMismatch(std::size_t weights, std::size_t span)
        : Error("weight_length_mismatch",
                "custom weights length " + std::to_string(weights) +
                    " does not match scored span length " + std::to_string(span)) {}
};

struct UnparseableRating : Error {
    explicit UnparseableRating(const std::string& raw)
        : Error("unparseable_rating", "no in-range rating found in: " + raw) {}
};

// --- calibration ---

struct NonFiniteInput : Error {
    explicit NonFiniteInput(const std::string& msg) : Error("non_finite_input", msg) {}
};

struct MismatchedInstance : Error {
    explicit MismatchedInstance(const std::string& msg)
        : Error("mismatched_instance", msg) {}
};

struct IncompleteScores : Error {
    explicit IncompleteScores(const std::string& instance_id)
        : Error("incomplete_scores",
                "instance " + instance_id + " is missing required scores"),
          instance_id(instance_id) {}
    std::string instance_id;
};

// --- negative sampling ---

struct UnknownId : Error {
    explicit UnknownId(const std::string& id)
        : Error("unknown_id", "id not present in index: " + id) {}
};

struct ZeroVector : Error {
    explicit ZeroVector(const std::string& id)
        : Error("zero_vector", "embedding has zero norm for entry " + id) {}
};

struct ScorerMissing : Error {
    explicit ScorerMissing(const std::string& msg) : Error("scorer_missing", msg) {}
};

struct EmptyInput : Error {
    explicit EmptyInput(const std::string& msg) : Error("empty_input", msg) {}
};

}  // namespace judgecal
