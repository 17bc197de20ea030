#include <json.hpp>

#include "oseq/complex.hpp"
#include "oseq/errors.hpp"
#include "text_util.hpp"

namespace oseq {

namespace {

ComplexFile assemble(std::size_t n, std::optional<std::vector<std::uint32_t>> weights,
                     std::vector<VertexSet> facets) {
  if (weights) {
    if (weights->size() != n) {
      throw InputError("with weights, n must equal the number of classes (" +
                       std::to_string(weights->size()) + "), got " + std::to_string(n));
    }
    SimplicialComplex simple(n, std::move(facets));
    return {expand_weighted(simple, *weights), std::move(weights)};
  }
  return {SimplicialComplex(n, std::move(facets)), std::nullopt};
}

VertexSet checked_facet(const std::vector<std::uint64_t>& labels, std::size_t n,
                        const std::string& where) {
  VertexSet f = 0;
  for (auto v : labels) {
    if (v == 0 || v > n) {
      throw InputError(where + "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (f & vertex_bit(v)) throw InputError(where + "vertex " + std::to_string(v) + " repeated");
    f |= vertex_bit(v);
  }
  return f;
}

ComplexFile parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n").get<std::uint64_t>();
    if (n > kMaxVertices) throw OverflowError("at most 64 vertices are supported");
    std::optional<std::vector<std::uint32_t>> weights;
    if (doc.contains("weights")) weights = doc["weights"].get<std::vector<std::uint32_t>>();
    std::vector<VertexSet> facets;
    for (const auto& f : doc.at("facets")) {
      facets.push_back(checked_facet(f.get<std::vector<std::uint64_t>>(), n,
                                     "facet " + std::to_string(facets.size() + 1) + ": "));
    }
    return assemble(n, std::move(weights), std::move(facets));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad complex JSON: ") + e.what());
  }
}

}  // namespace

ComplexFile parse_complex(std::string_view text) {
  if (auto t = detail::trim(text); !t.empty() && t.front() == '{') return parse_json(t);

  std::optional<std::size_t> n;
  std::optional<std::vector<std::uint32_t>> weights;
  std::vector<VertexSet> facets;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    line = detail::strip_comment(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (detail::starts_with_key(line, "n")) {
      if (n) throw InputError(where + "duplicate n= line");
      n = detail::parse_uint(detail::value_after_eq(line), where + "n");
      if (*n > kMaxVertices) throw OverflowError(where + "at most 64 vertices are supported");
      continue;
    }
    const auto tokens = detail::split_ws(line);
    if (tokens[0] == "weights") {
      if (weights) throw InputError(where + "duplicate weights line");
      weights.emplace();
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto w = detail::parse_uint(tokens[i], where + "weight");
        if (w == 0 || w > kMaxVertices) throw InputError(where + "weights must lie in 1..64");
        weights->push_back(static_cast<std::uint32_t>(w));
      }
      continue;
    }
    if (tokens[0] != "facet") {
      throw InputError(where + "expected 'facet v1 v2 ...', got '" + std::string(line) + "'");
    }
    if (!n) throw InputError(where + "facet before n=");
    std::vector<std::uint64_t> labels;
    for (std::size_t i = 1; i < tokens.size(); ++i) labels.push_back(detail::parse_uint(tokens[i], where + "vertex"));
    facets.push_back(checked_facet(labels, *n, where));
  }
  if (!n) throw InputError("missing n= line");
  return assemble(*n, std::move(weights), std::move(facets));
}

std::string format_complex(const SimplicialComplex& c) {
  std::string out = "n=" + std::to_string(c.max_label()) + "\n";
  for (VertexSet f : c.facets()) {
    out += "facet";
    for (std::size_t v : vertices_of(f)) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string format_complex_json(const SimplicialComplex& c) {
  nlohmann::json doc;
  doc["n"] = c.max_label();
  doc["facets"] = nlohmann::json::array();
  for (VertexSet f : c.facets()) doc["facets"].push_back(vertices_of(f));
  return doc.dump() + "\n";
}

}  // namespace oseq
