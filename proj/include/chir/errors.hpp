// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace chir {

/// A precondition of the called operation does not hold.
class contract_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is only defined for a different alphabet size.
class unsupported_alphabet : public contract_error {
 public:
  using contract_error::contract_error;
};

/// Input does not have the block structure of the clustered family.
class structure_error : public contract_error {
 public:
  using contract_error::contract_error;
};

/// A size cap (oracle, enumeration, memory) would be exceeded.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Primitivity could not be decided within the factoring budget.
class undecided_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested family member does not exist for this order.
class not_in_family : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same object disagree.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw contract_error(message);
}

}  // namespace detail
}  // namespace chir
