#pragma once

#include <stdexcept>
#include <string>

namespace tilez {

enum class errc {
    empty_tile,
    not_finite_index,
    zero_vector,
    proportional_vectors,
    too_few_vectors,
    invalid_instance,
    oracle_inconsistent,
    promise_violated,
    budget_exceeded,
    not_a_partition,
    not_verifiable,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_tile: return "EmptyTile";
        case errc::not_finite_index: return "NotFiniteIndex";
        case errc::zero_vector: return "ZeroVector";
        case errc::proportional_vectors: return "ProportionalVectors";
        case errc::too_few_vectors: return "TooFewVectors";
        case errc::invalid_instance: return "InvalidInstance";
        case errc::oracle_inconsistent: return "OracleInconsistent";
        case errc::promise_violated: return "PromiseViolated";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::not_a_partition: return "NotAPartition";
        case errc::not_verifiable: return "NotVerifiable";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what_arg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace tilez
