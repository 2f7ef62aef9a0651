// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace entangle {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError(std::string(what) + ": malformed JSON");
  return doc;
}

Complex parse_complex(const json& node, const char* what) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
    throw ParseError(std::string(what) + ": complex entries must be [re, im] pairs");
  }
  return Complex(node[0].get<double>(), node[1].get<double>());
}

Matrix parse_complex_matrix(const json& node, const char* what) {
  if (!node.is_array() || node.empty()) {
    throw ParseError(std::string(what) + ": matrix must be a non-empty array of rows");
  }
  const Index rows = static_cast<Index>(node.size());
  if (!node[0].is_array() || node[0].empty()) {
    throw ParseError(std::string(what) + ": matrix rows must be non-empty arrays");
  }
  const Index cols = static_cast<Index>(node[0].size());
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = node[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ParseError(std::string(what) + ": ragged matrix rows");
    }
    for (Index j = 0; j < cols; ++j) {
      m(i, j) = parse_complex(row[static_cast<std::size_t>(j)], what);
    }
  }
  return m;
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

StateFile parse_state(const std::string& text, const TolerancePolicy& tol) {
  const json doc = parse_json(text, "state file");
  if (!doc.is_object() || !doc.contains("coeff")) {
    throw ParseError("state file: missing \"coeff\" field");
  }
  const Matrix coeff = parse_complex_matrix(doc["coeff"], "state file");
  if (doc.contains("dims")) {
    const json& dims = doc["dims"];
    if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_integer() ||
        !dims[1].is_number_integer()) {
      throw ParseError("state file: \"dims\" must be [dA, dB]");
    }
    if (dims[0].get<Index>() != coeff.rows() || dims[1].get<Index>() != coeff.cols()) {
      throw ParseError("state file: \"dims\" do not match the coeff array shape");
    }
  }
  StateFile out{make_state(coeff, tol), "", false};
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("state file: \"label\" must be a string");
    out.label = doc["label"].get<std::string>();
  }
  out.normalization_warning = out.state.normalization_applied();
  return out;
}

StateFile load_state(const std::string& path, const TolerancePolicy& tol) {
  return parse_state(read_text_file(path), tol);
}

ObservableFile parse_observable(const std::string& text, const TolerancePolicy& tol) {
  const json doc = parse_json(text, "observable file");
  if (!doc.is_object() || !doc.contains("side") || !doc.contains("matrix")) {
    throw ParseError("observable file: need \"side\" and \"matrix\" fields");
  }
  if (!doc["side"].is_string()) throw ParseError("observable file: \"side\" must be \"A\" or \"B\"");
  const std::string side = doc["side"].get<std::string>();
  if (side != "A" && side != "B") {
    throw ParseError("observable file: \"side\" must be \"A\" or \"B\"");
  }
  const Matrix m = parse_complex_matrix(doc["matrix"], "observable file");
  if (m.rows() != m.cols()) throw ParseError("observable file: matrix must be square");
  if ((m - m.adjoint()).norm() > tol.eps_check) {
    throw ParseError("observable file: matrix is not Hermitian within eps_check");
  }
  return ObservableFile{side == "A" ? Side::A : Side::B, Observable::from_matrix(m, tol)};
}

ObservableFile load_observable(const std::string& path, const TolerancePolicy& tol) {
  return parse_observable(read_text_file(path), tol);
}

Matrix parse_matrix_file(const std::string& text) {
  const json doc = parse_json(text, "matrix file");
  if (!doc.is_object() || !doc.contains("matrix")) {
    throw ParseError("matrix file: missing \"matrix\" field");
  }
  return parse_complex_matrix(doc["matrix"], "matrix file");
}

Matrix load_matrix_file(const std::string& path) {
  return parse_matrix_file(read_text_file(path));
}

Vector parse_vector(const std::string& text) {
  const json doc = parse_json(text, "vector");
  if (!doc.is_array() || doc.empty()) {
    throw ParseError("vector: expected a non-empty array of [re, im] pairs");
  }
  Vector v(static_cast<Index>(doc.size()));
  for (Index i = 0; i < v.size(); ++i) {
    v(i) = parse_complex(doc[static_cast<std::size_t>(i)], "vector");
  }
  return v;
}

std::string state_to_json(const BipartiteState& state, const std::string& label) {
  json doc;
  doc["dims"] = json::array({state.dim_a(), state.dim_b()});
  doc["coeff"] = matrix_to_json(state.coeff());
  if (!label.empty()) doc["label"] = label;
  return doc.dump(2) + "\n";
}

void save_state(const std::string& path, const BipartiteState& state, const std::string& label) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << state_to_json(state, label);
}

}  // namespace entangle
