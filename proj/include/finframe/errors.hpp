#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace finframe {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: non-finite entries, empty matrices, out-of-range parameters.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Operand shapes are not conformable.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// The columns of a synthesis matrix do not span the ambient space.
class NotAFrame : public Error {
public:
    NotAFrame(std::size_t rank, std::size_t dim, std::size_t count)
        : Error("not a frame: rank " + std::to_string(rank) + " < dimension " + std::to_string(dim) + " (" +
                std::to_string(count) + " elements)"),
          rank_(rank), dim_(dim), count_(count) {}

    std::size_t rank() const noexcept { return rank_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t count() const noexcept { return count_; }

private:
    std::size_t rank_;
    std::size_t dim_;
    std::size_t count_;
};

class GenerationFailed : public Error {
public:
    using Error::Error;
};

class NotTight : public Error {
public:
    using Error::Error;
};

} // namespace finframe
