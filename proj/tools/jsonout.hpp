#pragma once

// Minimal deterministic JSON/CSV emission: insertion-ordered keys, floats
// printed with 17 significant digits so reports round-trip bit-exactly.

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace minrep_cli {

class Json {
 public:
  enum class Kind { Null, Bool, Int, Real, Str, Arr, Obj };

  Json() : kind_(Kind::Null) {}
  static Json boolean(bool b) {
    Json j;
    j.kind_ = Kind::Bool;
    j.b_ = b;
    return j;
  }
  static Json integer(long long v) {
    Json j;
    j.kind_ = Kind::Int;
    j.i_ = v;
    return j;
  }
  static Json real(double v) {
    Json j;
    j.kind_ = Kind::Real;
    j.d_ = v;
    return j;
  }
  static Json str(std::string s) {
    Json j;
    j.kind_ = Kind::Str;
    j.s_ = std::move(s);
    return j;
  }
  static Json array() {
    Json j;
    j.kind_ = Kind::Arr;
    return j;
  }
  static Json object() {
    Json j;
    j.kind_ = Kind::Obj;
    return j;
  }

  void push(Json v) { arr_.push_back(std::move(v)); }
  void set(const std::string& key, Json v) {
    obj_.emplace_back(key, std::move(v));
  }

  static std::string format_real(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  }

  std::string dump(int indent = 0) const {
    std::string out;
    write(out, indent);
    return out;
  }

 private:
  static std::string escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
      }
    }
    out += '"';
    return out;
  }

  void write(std::string& out, int indent) const {
    const std::string pad(indent, ' ');
    const std::string pad2(indent + 2, ' ');
    switch (kind_) {
      case Kind::Null: out += "null"; break;
      case Kind::Bool: out += b_ ? "true" : "false"; break;
      case Kind::Int: out += std::to_string(i_); break;
      case Kind::Real: out += format_real(d_); break;
      case Kind::Str: out += escape(s_); break;
      case Kind::Arr: {
        if (arr_.empty()) {
          out += "[]";
          break;
        }
        out += "[\n";
        for (size_t i = 0; i < arr_.size(); ++i) {
          out += pad2;
          arr_[i].write(out, indent + 2);
          if (i + 1 < arr_.size()) out += ',';
          out += '\n';
        }
        out += pad + "]";
        break;
      }
      case Kind::Obj: {
        if (obj_.empty()) {
          out += "{}";
          break;
        }
        out += "{\n";
        for (size_t i = 0; i < obj_.size(); ++i) {
          out += pad2 + escape(obj_[i].first) + ": ";
          obj_[i].second.write(out, indent + 2);
          if (i + 1 < obj_.size()) out += ',';
          out += '\n';
        }
        out += pad + "}";
        break;
      }
    }
  }

  Kind kind_;
  bool b_ = false;
  long long i_ = 0;
  double d_ = 0.0;
  std::string s_;
  std::vector<Json> arr_;
  std::vector<std::pair<std::string, Json>> obj_;
};

/// CSV with a header row, comma separator, \n line endings.
inline std::string to_csv(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (size_t i = 0; i < header.size(); ++i) {
    out += header[i];
    out += (i + 1 < header.size()) ? "," : "\n";
  }
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      out += (i + 1 < row.size()) ? "," : "\n";
    }
  }
  return out;
}

}  // namespace minrep_cli
