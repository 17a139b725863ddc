#pragma once

#include <stdexcept>
#include <string>

namespace phylo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// io
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};
struct DuplicateTaxon : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };

// validation
struct TaxonMismatch : Error { using Error::Error; };
struct TaxonMissing : Error { using Error::Error; };
struct TooFewTaxa : Error { using Error::Error; };
struct DegreeViolation : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct NotSimple : Error { using Error::Error; };
struct NotCubic : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct InvalidCertificate : Error { using Error::Error; };
struct InvalidDecomposition : Error { using Error::Error; };
struct InvalidPartition : Error { using Error::Error; };

// search limits
struct LimitExceeded : Error {
    LimitExceeded(const std::string& msg, std::uint64_t nodes)
        : Error(msg), nodes_explored(nodes) {}
    std::uint64_t nodes_explored;
};

// exact treewidth gave up; carries the best bounds found so far
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& msg, int lb, int ub)
        : Error(msg), lower(lb), upper(ub) {}
    int lower;
    int upper;
};

}  // namespace phylo
