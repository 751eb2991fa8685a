// Validation outcome type shared by all validators: either a value or a
// diagnostic naming the first failed axiom together with a witness tuple.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace xmod {

struct Diagnostic {
    std::string code;                // stable machine tag, e.g. "no-inverse"
    std::string message;             // human-readable, includes witnesses
    std::vector<long long> witness;  // element/simplex indices involved
};

template <typename T>
class Result {
  public:
    Result(T value) : v_(std::move(value)) {}
    Result(Diagnostic diag) : v_(std::move(diag)) {}

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    const T& value() const& {
        if (!ok()) throw std::logic_error("Result::value on error: " + error().message);
        return std::get<T>(v_);
    }
    T&& value() && {
        if (!ok()) throw std::logic_error("Result::value on error: " + error().message);
        return std::get<T>(std::move(v_));
    }
    const Diagnostic& error() const {
        if (ok()) throw std::logic_error("Result::error on ok value");
        return std::get<Diagnostic>(v_);
    }

  private:
    std::variant<T, Diagnostic> v_;
};

inline Diagnostic make_diag(std::string code, std::string message,
                            std::vector<long long> witness = {}) {
    return Diagnostic{std::move(code), std::move(message), std::move(witness)};
}

}  // namespace xmod
