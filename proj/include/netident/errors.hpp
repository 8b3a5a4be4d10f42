#ifndef NETIDENT_ERRORS_HPP
#define NETIDENT_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "netident/netmodel.hpp"

namespace netident {

// Query requires n_B * n_C == number of unknown edges.
struct NotSquareError : std::invalid_argument {
    NotSquareError(std::size_t rows, std::size_t cols)
        : std::invalid_argument("K is " + std::to_string(rows) + "x" + std::to_string(cols) +
                                ": need n_B*n_C equal to the number of unknown edges"),
          rows(rows), cols(cols) {}
    std::size_t rows, cols;
};

struct NotSeparableError : std::invalid_argument {
    explicit NotSeparableError(NotSeparable w)
        : std::invalid_argument("network is not separable: " + w.reason), witness(std::move(w)) {}
    NotSeparable witness;
};

// Every trial drew a point where I - G is singular.
struct AllSamplesSingular : std::runtime_error {
    AllSamplesSingular() : std::runtime_error("every sampled evaluation had I - G singular") {}
};

struct TooLargeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline SeparableBlocks require_separable(const NetworkModel& net) {
    auto result = is_separable(net);
    if (auto* ns = std::get_if<NotSeparable>(&result)) throw NotSeparableError(*ns);
    return std::get<SeparableBlocks>(std::move(result));
}

inline void require_square(const NetworkModel& net) {
    if (!net.is_square()) throw NotSquareError(net.n_excited() * net.n_measured(), net.n_unknown());
}

} // namespace netident

#endif
