#pragma once

#include <stdexcept>
#include <string>

namespace ccgeo {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct empty_input : error {
    empty_input() : error("empty point list") {}
};

struct dimension_mismatch : error {
    dimension_mismatch(long a, long b)
        : error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct non_unit_direction : error {
    explicit non_unit_direction(double norm)
        : error("direction norm " + std::to_string(norm) + " is not 1") {}
};

struct no_convergence : error {
    long iterations;
    explicit no_convergence(long iters)
        : error("projection failed the variational certificate after " +
                std::to_string(iters) + " iterations"),
          iterations(iters) {}
};

struct parameter_out_of_range : error {
    explicit parameter_out_of_range(const std::string& what) : error(what) {}
};

struct cap_exceeded : error {
    explicit cap_exceeded(int cap)
        : error("group closure exceeded cap " + std::to_string(cap)) {}
};

struct not_a_group : error {
    explicit not_a_group(const std::string& what) : error(what) {}
};

struct affine_element : error {
    affine_element() : error("operation requires a linear isometric element") {}
};

struct metric_violation : error {
    explicit metric_violation(const std::string& what) : error(what) {}
};

struct not_invariant_metric : error {
    explicit not_invariant_metric(const std::string& what) : error(what) {}
};

struct not_an_action : error {
    explicit not_an_action(const std::string& what) : error(what) {}
};

struct empty_subset : error {
    empty_subset() : error("extension problem has an empty subset") {}
};

struct k_too_large : error {
    explicit k_too_large(int k)
        : error("cantor truncation k = " + std::to_string(k) + " outside [1, 12]") {}
};

struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

struct validation_error : error {
    explicit validation_error(const std::string& what) : error(what) {}
};

struct unknown_suite : error {
    explicit unknown_suite(const std::string& name) : error("unknown suite: " + name) {}
};

} // namespace ccgeo
