#include "gbs/cli/document.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace gbs {

using nlohmann::json;

DocumentError::DocumentError(std::vector<std::string> messages)
    : std::runtime_error(messages.empty() ? "invalid document" : messages.front()), messages_(std::move(messages)) {}

namespace {

// Line of the first character of every value, keyed by field path such as
// "edges[0].incl_from[1]". Only meaningful for syntactically valid JSON.
class LineIndex {
 public:
  explicit LineIndex(const std::string& text) {
    struct Frame {
      bool array;
      std::string key;
      long index = 0;
      bool expecting_key = true;
    };
    std::vector<Frame> stack;
    auto path = [&] {
      std::string p;
      for (const auto& f : stack) {
        if (f.array)
          p += "[" + std::to_string(f.index) + "]";
        else
          p += (p.empty() ? "" : ".") + f.key;
      }
      return p;
    };
    int line = 1;
    auto record = [&] { lines_.emplace(path(), line); };
    for (std::size_t k = 0; k < text.size(); ++k) {
      const char c = text[k];
      if (c == '\n') {
        ++line;
      } else if (c == '"') {
        std::string s;
        for (++k; k < text.size() && text[k] != '"'; ++k) {
          if (text[k] == '\\') ++k;
          if (k < text.size()) s += text[k];
        }
        if (!stack.empty() && !stack.back().array && stack.back().expecting_key) {
          stack.back().key = s;
          stack.back().expecting_key = false;
        } else {
          record();
        }
      } else if (c == ',') {
        if (!stack.empty()) {
          if (stack.back().array)
            ++stack.back().index;
          else
            stack.back().expecting_key = true;
        }
      } else if (c == '{' || c == '[') {
        record();
        stack.push_back(Frame{c == '[', "", 0, true});
      } else if (c == '}' || c == ']') {
        if (!stack.empty()) stack.pop_back();
      } else if (std::isspace(static_cast<unsigned char>(c)) == 0 && c != ':') {
        record();
        while (k + 1 < text.size() && std::string(",}] \t\r\n").find(text[k + 1]) == std::string::npos) ++k;
      }
    }
  }

  std::optional<int> line_of(std::string path) const {
    for (;;) {
      if (auto it = lines_.find(path); it != lines_.end()) return it->second;
      const auto cut = path.find_last_of(".[");
      if (cut == std::string::npos || cut == 0) return std::nullopt;
      path.resize(cut);
    }
  }

 private:
  std::map<std::string, int> lines_;
};

class Reader {
 public:
  explicit Reader(const std::string& text) : index_(text) {}

  void error(const std::string& path, const std::string& message) {
    std::string prefix;
    if (auto line = index_.line_of(path)) prefix = "line " + std::to_string(*line) + ": ";
    errors_.push_back(prefix + (path.empty() ? "document" : path) + ": " + message);
  }
  bool ok() const { return errors_.empty(); }
  std::vector<std::string>& errors() { return errors_; }

  std::optional<Integer> integer(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
    if (j.is_string()) {
      static const std::regex pattern("-?[0-9]+");
      const std::string s = j.get<std::string>();
      if (std::regex_match(s, pattern)) return Integer(s);
    }
    error(path, "expected an integer, got " + std::string(j.type_name()) + (j.is_number_float() ? " (non-integral)" : ""));
    return std::nullopt;
  }

  std::optional<IntMatrix> matrix(const json& j, const std::string& path, Index n) {
    if (!j.is_array()) {
      error(path, "expected a matrix (array of rows)");
      return std::nullopt;
    }
    if (static_cast<Index>(j.size()) != n) {
      error(path, "expected " + std::to_string(n) + " rows, got " + std::to_string(j.size()));
      return std::nullopt;
    }
    IntMatrix m(n, n);
    bool good = true;
    for (Index r = 0; r < n; ++r) {
      const std::string rp = path + "[" + std::to_string(r) + "]";
      const json& row = j[static_cast<std::size_t>(r)];
      if (!row.is_array()) {
        error(rp, "expected a row (array of integers)");
        good = false;
        continue;
      }
      if (static_cast<Index>(row.size()) != n) {
        error(rp, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
        good = false;
        continue;
      }
      for (Index c = 0; c < n; ++c) {
        auto v = integer(row[static_cast<std::size_t>(c)], rp + "[" + std::to_string(c) + "]");
        if (v)
          m(r, c) = *v;
        else
          good = false;
      }
    }
    if (!good) return std::nullopt;
    return m;
  }

  std::optional<std::string> string(const json& j, const std::string& path) {
    if (j.is_string()) return j.get<std::string>();
    error(path, "expected a string");
    return std::nullopt;
  }

 private:
  LineIndex index_;
  std::vector<std::string> errors_;
};

std::string location(const std::string& text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    const auto colon = what.find("syntax error");
    throw DocumentError({location(text, e.byte) + ": " + (colon == std::string::npos ? what : what.substr(colon))});
  }
}

}  // namespace

InputDocument parse_document(const std::string& text) {
  const json j = parse_json(text);
  Reader in(text);
  InputDocument doc;
  if (!j.is_object()) throw DocumentError({"line 1: document: expected a JSON object"});

  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "rank" && key != "vertices" && key != "edges" && key != "ascending_hnn" && key != "name")
      in.error(key, "unknown field");
  }
  if (!j.contains("rank")) {
    in.error("", "missing field 'rank'");
    throw DocumentError(in.errors());
  }
  const auto rank = in.integer(j["rank"], "rank");
  if (rank && (*rank < 1 || *rank > 64)) in.error("rank", "rank must be between 1 and 64");
  if (!in.ok()) throw DocumentError(in.errors());
  const Index n = rank->convert_to<Index>();
  doc.graph.rank = n;

  if (j.contains("ascending_hnn")) {
    if (j.contains("vertices") || j.contains("edges"))
      in.error("ascending_hnn", "cannot be combined with 'vertices' or 'edges'");
    auto phi = in.matrix(j["ascending_hnn"], "ascending_hnn", n);
    if (!in.ok()) throw DocumentError(in.errors());
    doc.shorthand = true;
    doc.graph.vertices = {"v"};
    doc.graph.edges = {Edge{"t", "v", "v", identity(n), *phi}};
  } else {
    if (!j.contains("vertices")) in.error("", "missing field 'vertices'");
    if (!j.contains("edges")) in.error("", "missing field 'edges'");
    if (!in.ok()) throw DocumentError(in.errors());
    const json& vs = j["vertices"];
    if (!vs.is_array() || vs.empty()) {
      in.error("vertices", "expected a non-empty array of vertex names");
    } else {
      for (std::size_t k = 0; k < vs.size(); ++k)
        if (auto s = in.string(vs[k], "vertices[" + std::to_string(k) + "]")) doc.graph.vertices.push_back(*s);
    }
    const json& es = j["edges"];
    if (!es.is_array()) {
      in.error("edges", "expected an array of edges");
    } else {
      for (std::size_t k = 0; k < es.size(); ++k) {
        const std::string p = "edges[" + std::to_string(k) + "]";
        const json& e = es[k];
        if (!e.is_object()) {
          in.error(p, "expected an object");
          continue;
        }
        bool complete = true;
        for (const char* field : {"id", "from", "to", "incl_from", "incl_to"}) {
          if (!e.contains(field)) {
            in.error(p, std::string("missing field '") + field + "'");
            complete = false;
          }
        }
        for (const auto& [key, value] : e.items()) {
          (void)value;
          if (key != "id" && key != "from" && key != "to" && key != "incl_from" && key != "incl_to")
            in.error(p + "." + key, "unknown field");
        }
        if (!complete) continue;
        auto id = in.string(e["id"], p + ".id");
        auto from = in.string(e["from"], p + ".from");
        auto to = in.string(e["to"], p + ".to");
        auto mf = in.matrix(e["incl_from"], p + ".incl_from", n);
        auto mt = in.matrix(e["incl_to"], p + ".incl_to", n);
        if (id && from && to && mf && mt) doc.graph.edges.push_back(Edge{*id, *from, *to, *mf, *mt});
      }
    }
  }
  if (!in.ok()) throw DocumentError(in.errors());

  for (const auto& issue : validate(doc.graph)) {
    std::string path;
    if (doc.shorthand) {
      path = "ascending_hnn";
    } else if (auto k = doc.graph.edge_index(issue.where)) {
      path = "edges[" + std::to_string(*k) + "]";
    } else if (auto v = doc.graph.vertex_index(issue.where)) {
      path = "vertices[" + std::to_string(*v) + "]";
    }
    in.error(path, (issue.where == "graph" ? "" : "'" + issue.where + "': ") + issue.message);
  }
  if (!in.ok()) throw DocumentError(in.errors());
  return doc;
}

InputDocument read_document(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw DocumentError({path + ": cannot open file"});
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_document(buffer.str());
}

namespace {

std::vector<Integer> integer_list(const std::string& text, const char* what) {
  const json j = parse_json(text);
  if (!j.is_array()) throw DocumentError({std::string(what) + ": expected a JSON array of integers"});
  Reader in(text);
  std::vector<Integer> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    if (auto v = in.integer(j[k], "[" + std::to_string(k) + "]")) out.push_back(*v);
  if (!in.ok()) throw DocumentError(in.errors());
  return out;
}

}  // namespace

IntPolynomial parse_polynomial(const std::string& text) {
  IntPolynomial f(integer_list(text, "polynomial"));
  if (f.is_zero()) throw DocumentError({"polynomial: zero polynomial"});
  if (!f.is_monic()) throw DocumentError({"polynomial: leading coefficient must be 1"});
  return f;
}

IntVector parse_vector(const std::string& text) {
  const std::vector<Integer> v = integer_list(text, "vector");
  IntVector out(static_cast<Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) out(static_cast<Index>(k)) = v[k];
  return out;
}

}  // namespace gbs
