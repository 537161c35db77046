// graph_io.hpp - the plain-text graph format and its JSON label sidecar.
//
//   # optional comment lines
//   n m
//   u v        (m lines, 0 <= u, v < n, u != v)
//
// Serialization writes "n m" followed by the edges with u < v in
// lexicographic order, which is the canonical form.
#pragma once

#include "ebcast/graph.hpp"

#include <string>
#include <string_view>

namespace ebcast {

/// Parses the text format. Every failure is a ParseError whose kind and line
/// identify the offending input; a disconnected graph is reported against
/// the header line.
Graph parse_graph(std::string_view text);

std::string serialize_graph(const Graph& g);

/// {"0": "label", "1": "label", ...}; empty object for an unlabeled graph.
std::string serialize_labels(const Graph& g);

/// Returns g with the labels from a sidecar JSON document attached.
Graph attach_labels(const Graph& g, std::string_view labels_json);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace ebcast
