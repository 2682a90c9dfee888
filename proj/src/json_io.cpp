#include "fockbench/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fock {

json matrix_to_json(const Mat& m) {
  json re = json::array(), im = json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

Mat matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("re"))
    throw Error("matrix JSON needs rows, cols and re");
  const auto rows = j.at("rows").get<Index>();
  const auto cols = j.at("cols").get<Index>();
  if (rows < 0 || cols < 0) throw Error("matrix JSON: negative shape");
  const auto& re = j.at("re");
  const bool has_im = j.contains("im");
  const auto count = static_cast<std::size_t>(rows * cols);
  if (!re.is_array() || re.size() != count || (has_im && j.at("im").size() != count))
    throw Error("matrix JSON: entry count does not match the shape");
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index c = 0; c < cols; ++c) {
      const auto k = static_cast<std::size_t>(i * cols + c);
      m(i, c) = cplx(re[k].get<double>(), has_im ? j.at("im")[k].get<double>() : 0.0);
    }
  return m;
}

Vec vector_from_json(const json& j) {
  if (j.is_array()) {
    Vec v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = j[i].get<double>();
    return v;
  }
  if (j.is_object() && j.contains("rows")) {
    const Mat m = matrix_from_json(j);
    if (m.cols() != 1 && m.rows() != 1) throw Error("vector JSON: expected a single row or column");
    return m.cols() == 1 ? Vec(m.col(0)) : Vec(m.row(0).transpose());
  }
  if (j.is_object() && j.contains("re")) {
    const auto& re = j.at("re");
    Vec v(static_cast<Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i)
      v(static_cast<Index>(i)) = cplx(re[i].get<double>(), j.contains("im") ? j.at("im")[i].get<double>() : 0.0);
    return v;
  }
  throw Error("vector JSON: unrecognised format");
}

json graded_to_json(const std::vector<Mat>& levels) {
  json out = json::object();
  for (std::size_t n = 0; n < levels.size(); ++n) out[std::to_string(n)] = matrix_to_json(levels[n]);
  return out;
}

std::vector<Mat> graded_from_json(const json& j) {
  if (!j.is_object()) throw Error("graded JSON must be an object keyed by level");
  std::vector<Mat> levels;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const auto key = std::to_string(n);
    if (!j.contains(key)) throw Error("graded JSON: missing level " + key);
    levels.push_back(matrix_from_json(j.at(key)));
  }
  return levels;
}

json family_to_json(const DeformationFamily& family) {
  return json{{"kind", "deformation_family"},
              {"d", family.space.d()},
              {"N", family.space.N()},
              {"L", graded_to_json(family.L)}};
}

namespace {

TruncatedFockSpace space_header(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("N")) throw Error("JSON object needs d and N");
  return TruncatedFockSpace(j.at("d").get<int>(), j.at("N").get<int>());
}

}  // namespace

DeformationFamily family_from_json(const json& j) {
  const auto space = space_header(j);
  const char* key = j.contains("L") ? "L" : "pi";
  if (!j.contains(key)) throw Error("family JSON needs L");
  return make_family(space, graded_from_json(j.at(key)));
}

json projection_family_to_json(const ProjectionFamily& family) {
  return json{{"kind", "projection_family"},
              {"d", family.space.d()},
              {"N", family.space.N()},
              {"ranks", family.ranks},
              {"pi", graded_to_json(family.pi)}};
}

ProjectionFamily projection_family_from_json(const json& j) {
  const auto space = space_header(j);
  const char* key = j.contains("pi") ? "pi" : "L";
  if (!j.contains(key)) throw Error("projection family JSON needs pi");
  return make_projection_family(space, graded_from_json(j.at(key)));
}

json space_to_json(const InteractingSpace& space) {
  json creators = json::object();
  for (std::size_t n = 0; n < space.creators.size(); ++n) {
    json level = json::array();
    for (const auto& a : space.creators[n]) level.push_back(matrix_to_json(a));
    creators[std::to_string(n)] = level;
  }
  return json{{"kind", "interacting_space"},
              {"d", space.d()},
              {"N", space.N()},
              {"ranks", space.ranks},
              {"L", graded_to_json(space.L)},
              {"Lambda", graded_to_json(space.Lambda)},
              {"xi", graded_to_json(space.xi)},
              {"lambda", graded_to_json(space.lambda)},
              {"kappa", graded_to_json(squeezing_of(space).kappa)},
              {"creators", creators},
              {"well_definedness_residual", space.well_definedness_residual}};
}

InteractingSpace space_from_json(const json& j) {
  const auto space = space_header(j);
  if (!j.contains("Lambda") || !j.contains("xi")) throw Error("space JSON needs Lambda and xi");
  return from_parts(space, graded_from_json(j.at("Lambda")), graded_from_json(j.at("xi")));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void dump_into(std::ostringstream& os, const json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v)) os << format_double(v);
      else os << "null";
      break;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        break;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& e : j) flat = flat && !e.is_structured();
      os << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << ',';
        if (flat) {
          if (!first && indent > 0) os << ' ';
        } else {
          os << nl << pad;
        }
        dump_into(os, e, indent, depth + 1);
        first = false;
      }
      if (!flat) os << nl << close;
      os << ']';
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        break;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        os << nl << pad << json(it.key()).dump() << (indent > 0 ? ": " : ":");
        dump_into(os, it.value(), indent, depth + 1);
        first = false;
      }
      os << nl << close << '}';
      break;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

std::string dump_json(const json& j, int indent) {
  std::ostringstream os;
  dump_into(os, j, indent, 0);
  os << '\n';
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw Error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot rename '" + tmp.string() + "' to '" + path + "': " + ec.message());
  }
}

}  // namespace fock
