#pragma once

#include <optional>

#include "iwasawa/error.hpp"

template <class F>
std::optional<iwasawa::ErrorCode> error_of(F&& f) {
    try {
        f();
    } catch (const iwasawa::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

#define CHECK_ERROR(expr, code) CHECK(error_of([&] { (void)(expr); }) == std::optional(iwasawa::ErrorCode::code))
