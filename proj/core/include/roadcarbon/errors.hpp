#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace roadcarbon {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition or value-range violation on an operation input.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed file contents, unit mismatches, duplicate keys.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Filesystem problems: missing files, unreadable paths.
class IoError : public Error {
public:
    using Error::Error;
};

/// Invalid run-configuration values (bad references, weights, ranges).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Statistical input that admits no meaningful answer (zero variance,
/// too few observations, constant columns).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Design matrix is rank deficient; carries the offending column names.
class RankDeficiencyError : public DegenerateInputError {
public:
    RankDeficiencyError(const std::string& message, std::vector<std::string> columns)
        : DegenerateInputError(message), columns_(std::move(columns))
    {
    }

    const std::vector<std::string>& columns() const noexcept { return columns_; }

private:
    std::vector<std::string> columns_;
};

/// No feasible pavement thickness in the search range; carries the damage
/// achieved at the maximum thickness so callers can report how far off it was.
class InfeasibleDesignError : public Error {
public:
    InfeasibleDesignError(const std::string& message, double damage_at_max_thickness)
        : Error(message), damage_at_max_thickness_(damage_at_max_thickness)
    {
    }

    double damage_at_max_thickness() const noexcept { return damage_at_max_thickness_; }

private:
    double damage_at_max_thickness_;
};

/// Impact assessment could not run; carries the materials without factors.
class AssessmentError : public Error {
public:
    AssessmentError(const std::string& message, std::vector<std::string> missing_materials)
        : Error(message), missing_materials_(std::move(missing_materials))
    {
    }

    const std::vector<std::string>& missing_materials() const noexcept { return missing_materials_; }

private:
    std::vector<std::string> missing_materials_;
};

} // namespace roadcarbon
