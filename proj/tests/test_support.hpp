#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "springer_kit/error.hpp"

namespace test_support {

/// Code of the springer_kit::Error thrown by f; fails the test if none is.
inline springer_kit::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const springer_kit::Error& err) {
    return err.code();
  }
  ADD_FAILURE() << "expected a springer_kit::Error";
  return springer_kit::ErrorCode::ParseError;
}

}  // namespace test_support
