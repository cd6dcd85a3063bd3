#include "cellrim/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace cellrim {

void to_json(json& j, const Permutation& x) { j = x.images(); }

void to_json(json& j, const Composition& c) { j = c.parts(); }

void to_json(json& j, const Tableau& t) { j = t.rows(); }

void to_json(json& j, const Node& x) { j = json::array({x.row, x.col}); }

void to_json(json& j, const Diagram& D) {
  j = json::object();
  j["nodes"] = D.nodes();
}

void to_json(json& j, const KPath& pi) { j = pi.paths(); }

void to_json(json& j, const DeterminingTuple& t) {
  j = json::array();
  for (auto e : t.entries) {
    switch (e) {
      case TupleSymbol::One:
        j.push_back("1");
        break;
      case TupleSymbol::OneBar:
        j.push_back("1b");
        break;
      case TupleSymbol::Two:
        j.push_back("2");
        break;
      case TupleSymbol::Three:
        j.push_back("3");
        break;
      case TupleSymbol::Four:
        j.push_back("4");
        break;
    }
  }
}

Permutation permutation_from_json(const json& j) { return Permutation(j.get<std::vector<int>>()); }

namespace {

Node node_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("node must be [row, col]");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

Diagram diagram_from_json(const json& j) {
  std::vector<Node> nodes;
  for (const auto& x : j.at("nodes")) nodes.push_back(node_from_json(x));
  return Diagram(std::move(nodes));
}

KPath kpath_from_json(const json& j) {
  std::vector<Path> paths;
  for (const auto& p : j) {
    Path path;
    for (const auto& x : p) path.push_back(node_from_json(x));
    paths.push_back(std::move(path));
  }
  return KPath(std::move(paths));
}

json rim_result_json(const Composition& lambda, const RimDiagrams& E) {
  json out;
  out["lambda"] = lambda;
  out["rim_size"] = E.all.size();
  out["special"] = E.special.size();
  out["diagrams"] = E.all;
  json words = json::array();
  for (const auto& D : E.all) words.push_back(reduced_word(w_of_diagram(D)));
  out["reduced_words"] = std::move(words);
  return out;
}

std::string render_ascii(const Diagram& D, bool plain) {
  const std::string mark = plain ? "x" : "×";
  const std::string blank = plain ? "." : "·";
  std::string out;
  for (int a = 1; a <= D.num_rows(); ++a) {
    for (int b = 1; b <= D.num_cols(); ++b) {
      if (b > 1) out += ' ';
      out += D.contains({a, b}) ? mark : blank;
    }
    out += '\n';
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Node> parse_nodes(const std::string& text) {
  std::vector<Node> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto v = parse_int_list(item);
    if (v.size() != 2) throw std::invalid_argument("node must be 'row,col': '" + item + "'");
    out.push_back({v[0], v[1]});
  }
  return out;
}

}  // namespace cellrim
