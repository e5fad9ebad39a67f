#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace midpoint {

enum class Errc {
    area_zero,
    wrong_size,
    insufficient_data,
    degenerate_denominator,
    unsupported_m,
    modes_not_projected,
    invalid_argument,
    parse_error,
    mode_error,
    io_error,
};

std::string_view to_string(Errc code) noexcept;

struct Error {
    Errc code;
    std::string message;
};

class BadExpectedAccess : public std::runtime_error {
public:
    explicit BadExpectedAccess(Error error)
        : std::runtime_error(std::string(to_string(error.code)) + ": " + error.message),
          error_(std::move(error)) {}

    const Error& error() const noexcept { return error_; }

private:
    Error error_;
};

// Value-or-error result. Failures that a batch caller must be able to record
// and continue past (zero area, insufficient data, ...) travel through this
// type instead of exceptions.
template <typename T>
class Expected {
public:
    Expected(T value) : state_(std::in_place_index<0>, std::move(value)) {}
    Expected(Error error) : state_(std::in_place_index<1>, std::move(error)) {}

    bool has_value() const noexcept { return state_.index() == 0; }
    explicit operator bool() const noexcept { return has_value(); }

    const T& value() const& {
        if (!has_value()) throw BadExpectedAccess(error());
        return std::get<0>(state_);
    }
    T& value() & {
        if (!has_value()) throw BadExpectedAccess(error());
        return std::get<0>(state_);
    }
    T&& value() && {
        if (!has_value()) throw BadExpectedAccess(error());
        return std::get<0>(std::move(state_));
    }

    const Error& error() const& { return std::get<1>(state_); }

    const T& operator*() const& { return value(); }
    T& operator*() & { return value(); }
    const T* operator->() const { return &value(); }
    T* operator->() { return &value(); }

private:
    std::variant<T, Error> state_;
};

inline Error make_error(Errc code, std::string message) { return Error{code, std::move(message)}; }

}  // namespace midpoint
