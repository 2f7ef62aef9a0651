// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTANGLE_IO_HPP
#define ENTANGLE_IO_HPP

#include <iosfwd>
#include <string>

#include "entangle/twins.hpp"

namespace entangle {

/// State file: {"dims": [dA, dB], "coeff": [[[re, im], ...] ...], "label": "..."}
/// with complex numbers serialized as two-element [re, im] arrays.
struct StateFile {
  BipartiteState state;
  std::string label;
  bool normalization_warning = false;
};

/// Observable file: {"side": "A" | "B", "matrix": [[[re, im], ...] ...]}.
struct ObservableFile {
  Side side = Side::B;
  Observable observable;
};

StateFile parse_state(const std::string& text, const TolerancePolicy& tol = {});
StateFile load_state(const std::string& path, const TolerancePolicy& tol = {});

ObservableFile parse_observable(const std::string& text, const TolerancePolicy& tol = {});
ObservableFile load_observable(const std::string& path, const TolerancePolicy& tol = {});

/// Bare matrix file {"matrix": [[[re, im], ...] ...]} (density operators etc.).
Matrix parse_matrix_file(const std::string& text);
Matrix load_matrix_file(const std::string& path);

/// Vector as a JSON array of [re, im] pairs.
Vector parse_vector(const std::string& text);

std::string state_to_json(const BipartiteState& state, const std::string& label = "");
void save_state(const std::string& path, const BipartiteState& state,
                const std::string& label = "");

std::string read_text_file(const std::string& path);

}  // namespace entangle

#endif  // ENTANGLE_IO_HPP
