#include "qbundle/instance.hpp"

#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qb {

using nlohmann::json;

ParseError::ParseError(std::string source, std::size_t line, std::string pointer, const std::string& what)
    : Error(source + ":" + std::to_string(line) + ": " + (pointer.empty() ? "" : pointer + ": ") + what),
      source_(std::move(source)), line_(line), pointer_(std::move(pointer)) {}

namespace {

// Forward iterator over the document that publishes its position, so the
// parser callback can tell where each value ended.
class TrackingIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  TrackingIterator() = default;
  TrackingIterator(const char* p, const char** cursor) : p_(p), cursor_(cursor) {}

  reference operator*() const { return *p_; }
  TrackingIterator& operator++() {
    ++p_;
    if (cursor_) *cursor_ = p_;
    return *this;
  }
  TrackingIterator operator++(int) {
    TrackingIterator old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ == b.p_; }
  friend bool operator!=(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ != b.p_; }

 private:
  const char* p_ = nullptr;
  const char** cursor_ = nullptr;
};

std::size_t line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset; ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// Line of the last non-blank character consumed before `end`.
std::size_t line_before(std::string_view text, std::size_t end) {
  while (end > 0 && (text[end - 1] == ' ' || text[end - 1] == '\n' || text[end - 1] == '\r' || text[end - 1] == '\t'))
    --end;
  return line_of(text, end == 0 ? 0 : end - 1);
}

struct Frame {
  bool is_array = false;
  std::size_t next_index = 0;
  std::string key;
  std::string path;
};

class Reader {
 public:
  Reader(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {
    const char* cursor = text_.data();
    std::vector<Frame> stack;
    auto child_path = [&]() -> std::string {
      if (stack.empty()) return "";
      Frame& top = stack.back();
      if (top.is_array) return top.path + "/" + std::to_string(top.next_index++);
      return top.path + "/" + top.key;
    };
    auto here = [&] { return line_before(text_, static_cast<std::size_t>(cursor - text_.data())); };

    json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
      switch (event) {
        case json::parse_event_t::object_start:
        case json::parse_event_t::array_start: {
          std::string p = child_path();
          lines_[p] = here();
          stack.push_back({event == json::parse_event_t::array_start, 0, "", std::move(p)});
          break;
        }
        case json::parse_event_t::key:
          stack.back().key = parsed.get<std::string>();
          break;
        case json::parse_event_t::value:
          lines_[child_path()] = here();
          break;
        case json::parse_event_t::object_end:
        case json::parse_event_t::array_end:
          stack.pop_back();
          break;
      }
      return true;
    };

    try {
      doc_ = json::parse(TrackingIterator(text_.data(), &cursor),
                         TrackingIterator(text_.data() + text_.size(), nullptr), cb);
    } catch (const json::parse_error& e) {
      std::string what = e.what();
      if (auto pos = what.find(": syntax error"); pos != std::string::npos) what = what.substr(pos + 2);
      throw ParseError(source_, line_of(text_, e.byte == 0 ? 0 : e.byte - 1), "", what);
    }
  }

  const json& doc() const { return doc_; }

  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    auto it = lines_.find(pointer);
    throw ParseError(source_, it == lines_.end() ? 0 : it->second, pointer, what);
  }

  const json& object(const json& parent, const std::string& pointer, const std::string& key) const {
    const json& v = require(parent, pointer, key);
    if (!v.is_object()) fail(pointer + "/" + key, "expected an object");
    return v;
  }

  const json& require(const json& parent, const std::string& pointer, const std::string& key) const {
    if (!parent.contains(key)) fail(pointer, "missing key '" + key + "'");
    return parent.at(key);
  }

  void only_keys(const json& obj, const std::string& pointer, const std::set<std::string>& allowed) const {
    for (auto it = obj.begin(); it != obj.end(); ++it)
      if (!allowed.count(it.key())) fail(pointer + "/" + it.key(), "unknown key '" + it.key() + "'");
  }

  std::size_t dim(const json& v, const std::string& pointer) const {
    if (!v.is_number_integer() || v.get<long long>() < 1) fail(pointer, "dimension must be a positive integer");
    return static_cast<std::size_t>(v.get<long long>());
  }

  Scalar scalar(const json& v, const std::string& pointer) const {
    if (!v.is_string()) fail(pointer, "scalar must be a string \"a\" or \"a/b\"");
    auto s = parse_scalar(v.get<std::string>());
    if (!s) fail(pointer, "malformed scalar \"" + v.get<std::string>() + "\"");
    return *s;
  }

  Vector vector(const json& v, const std::string& pointer, std::size_t length) const {
    if (!v.is_array()) fail(pointer, "expected an array of scalars");
    if (v.size() != length)
      fail(pointer, "expected " + std::to_string(length) + " entries, found " + std::to_string(v.size()));
    Vector out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar(v[i], pointer + "/" + std::to_string(i)));
    return out;
  }

  Matrix matrix(const json& v, const std::string& pointer, std::size_t rows, std::size_t cols) const {
    if (!v.is_array()) fail(pointer, "expected an array of rows");
    if (v.size() != rows)
      fail(pointer, "expected " + std::to_string(rows) + " rows, found " + std::to_string(v.size()));
    std::vector<Vector> out;
    for (std::size_t r = 0; r < rows; ++r) out.push_back(vector(v[r], pointer + "/" + std::to_string(r), cols));
    return Matrix::from_rows(out, cols);
  }

  std::vector<std::string> names(const json& obj, const std::string& pointer, std::size_t d) const {
    if (!obj.contains("basis")) return {};
    const json& b = obj.at("basis");
    const std::string p = pointer + "/basis";
    if (!b.is_array() || b.size() != d) fail(p, "expected " + std::to_string(d) + " basis names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < d; ++i) {
      if (!b[i].is_string()) fail(p + "/" + std::to_string(i), "basis name must be a string");
      out.push_back(b[i].get<std::string>());
    }
    return out;
  }

  std::vector<Vector> vectors(const std::string& key, std::size_t length) const {
    std::vector<Vector> out;
    if (!doc_.contains(key)) return out;
    const json& v = doc_.at(key);
    const std::string p = "/" + key;
    if (!v.is_array()) fail(p, "expected an array of vectors");
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(vector(v[i], p + "/" + std::to_string(i), length));
    return out;
  }

 private:
  std::string_view text_;
  std::string source_;
  json doc_;
  std::map<std::string, std::size_t> lines_;
};

}  // namespace

InstanceFile parse_instance(std::string_view text, const std::string& source) {
  Reader rd(text, source);
  const json& doc = rd.doc();
  if (!doc.is_object()) rd.fail("", "instance must be a JSON object");
  rd.only_keys(doc, "", {"field", "name", "hopf", "comodule", "n_p_generators", "v_generators"});

  const json& field = rd.require(doc, "", "field");
  if (!field.is_string() || field.get<std::string>() != "QQ") rd.fail("/field", "field must be \"QQ\"");

  InstanceFile inst;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) rd.fail("/name", "name must be a string");
    inst.name = doc.at("name").get<std::string>();
  }

  const json& hj = rd.object(doc, "", "hopf");
  rd.only_keys(hj, "/hopf", {"dim", "basis", "unit", "mult", "comult", "counit", "antipode"});
  const std::size_t dh = rd.dim(rd.require(hj, "/hopf", "dim"), "/hopf/dim");
  const AlgebraData h_alg(LinearMap(rd.matrix(rd.require(hj, "/hopf", "mult"), "/hopf/mult", dh, dh * dh)),
                          rd.vector(rd.require(hj, "/hopf", "unit"), "/hopf/unit", dh), rd.names(hj, "/hopf", dh));
  const Matrix comult = rd.matrix(rd.require(hj, "/hopf", "comult"), "/hopf/comult", dh * dh, dh);
  const Vector counit = rd.vector(rd.require(hj, "/hopf", "counit"), "/hopf/counit", dh);
  const Matrix antipode = rd.matrix(rd.require(hj, "/hopf", "antipode"), "/hopf/antipode", dh, dh);
  HopfAlgebraData hopf(h_alg, LinearMap(comult), LinearMap(Matrix::row(counit)), LinearMap(antipode));

  const json& pj = rd.object(doc, "", "comodule");
  rd.only_keys(pj, "/comodule", {"dim", "basis", "unit", "mult", "coaction"});
  const std::size_t dp = rd.dim(rd.require(pj, "/comodule", "dim"), "/comodule/dim");
  const AlgebraData p_alg(LinearMap(rd.matrix(rd.require(pj, "/comodule", "mult"), "/comodule/mult", dp, dp * dp)),
                          rd.vector(rd.require(pj, "/comodule", "unit"), "/comodule/unit", dp),
                          rd.names(pj, "/comodule", dp));
  const Matrix coaction = rd.matrix(rd.require(pj, "/comodule", "coaction"), "/comodule/coaction", dp * dh, dp);
  inst.comodule = ComoduleAlgebraData(std::move(hopf), p_alg, LinearMap(coaction));

  inst.n_p_generators = rd.vectors("n_p_generators", dp * dp);
  inst.v_generators = rd.vectors("v_generators", dh);
  for (std::size_t i = 0; i < inst.v_generators.size(); ++i) {
    Scalar e;
    for (std::size_t k = 0; k < dh; ++k) e += counit[k] * inst.v_generators[i][k];
    if (!is_zero(e)) rd.fail("/v_generators/" + std::to_string(i), "generator is not annihilated by the counit");
  }
  return inst;
}

InstanceFile load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "", "cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_instance(text, path.string());
}

namespace {

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string row_text(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + quoted(format_scalar(v[i]));
  return s + "]";
}

std::string rows_text(const std::vector<Vector>& rows, const std::string& indent) {
  if (rows.empty()) return "[]";
  std::string s = "[\n";
  for (std::size_t r = 0; r < rows.size(); ++r) s += indent + "  " + row_text(rows[r]) + (r + 1 < rows.size() ? ",\n" : "\n");
  return s + indent + "]";
}

std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vector(r));
  return out;
}

std::string names_text(const std::vector<std::string>& names) {
  std::string s = "[";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + quoted(names[i]);
  return s + "]";
}

}  // namespace

std::string dump_instance(const InstanceFile& inst) {
  const HopfAlgebraData& h = inst.comodule.hopf();
  const AlgebraData& p = inst.comodule.algebra();
  const std::string in = "    ";
  std::ostringstream os;
  os << "{\n";
  os << "  \"field\": \"QQ\",\n";
  if (!inst.name.empty()) os << "  \"name\": " << quoted(inst.name) << ",\n";
  os << "  \"hopf\": {\n";
  os << in << "\"dim\": " << h.dim() << ",\n";
  os << in << "\"basis\": " << names_text(h.algebra().basis_names()) << ",\n";
  os << in << "\"unit\": " << row_text(h.algebra().unit()) << ",\n";
  os << in << "\"mult\": " << rows_text(rows_of(h.algebra().mult().matrix()), in) << ",\n";
  os << in << "\"comult\": " << rows_text(rows_of(h.comult().matrix()), in) << ",\n";
  os << in << "\"counit\": " << row_text(h.counit().matrix().row_vector(0)) << ",\n";
  os << in << "\"antipode\": " << rows_text(rows_of(h.antipode().matrix()), in) << "\n";
  os << "  },\n";
  os << "  \"comodule\": {\n";
  os << in << "\"dim\": " << p.dim() << ",\n";
  os << in << "\"basis\": " << names_text(p.basis_names()) << ",\n";
  os << in << "\"unit\": " << row_text(p.unit()) << ",\n";
  os << in << "\"mult\": " << rows_text(rows_of(p.mult().matrix()), in) << ",\n";
  os << in << "\"coaction\": " << rows_text(rows_of(inst.comodule.coaction().matrix()), in) << "\n";
  os << "  }";
  if (!inst.n_p_generators.empty()) os << ",\n  \"n_p_generators\": " << rows_text(inst.n_p_generators, "  ");
  if (!inst.v_generators.empty()) os << ",\n  \"v_generators\": " << rows_text(inst.v_generators, "  ");
  os << "\n}\n";
  return os.str();
}

}  // namespace qb
