#include "qcemu/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace qcemu {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::int64_t require_int(const Json& doc, const char* key) {
  const Json& v = require(doc, key);
  if (!v.is_number_integer()) throw Error(ErrorKind::Parse, std::string("'") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

ClassicalDynamics dynamics_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "dynamics document must be an object");
  const Json& type = require(doc, "type");
  if (!type.is_string()) throw Error(ErrorKind::Parse, "'type' must be a string");
  const auto kind = type.get<std::string>();

  if (kind == "permutation") {
    const Json& img = require(doc, "image");
    if (!img.is_array()) throw Error(ErrorKind::Parse, "'image' must be an array");
    std::vector<State> image;
    image.reserve(img.size());
    for (const auto& v : img) {
      if (!v.is_number_integer()) throw Error(ErrorKind::Parse, "image entries must be integers");
      const auto x = v.get<std::int64_t>();
      if (x < 0 || x > static_cast<std::int64_t>(std::numeric_limits<State>::max()))
        throw Error(ErrorKind::NotBijective, "image entry out of range: " + std::to_string(x));
      image.push_back(static_cast<State>(x));
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    return ClassicalDynamics::from_permutation(std::move(image), std::move(labels));
  }
  if (kind == "shift") return from_particle_shift(require_int(doc, "sites"));
  if (kind == "lga") {
    const auto sites = require_int(doc, "sites");
    const Json& reflect = require(doc, "reflect");
    if (!reflect.is_boolean()) throw Error(ErrorKind::Parse, "'reflect' must be a boolean");
    if (sites > max_lga_sites) throw Error(ErrorKind::TooLarge, "lattice gas limited to 12 sites");
    return from_two_channel_lga(static_cast<int>(sites), reflect.get<bool>());
  }
  throw Error(ErrorKind::Parse, "unknown dynamics type '" + kind + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

ClassicalDynamics load_dynamics(const std::string& path) {
  return dynamics_from_json(read_json_file(path));
}

Json decomposition_to_json(const OrbitDecomposition& dec) {
  Json orbits = Json::array();
  for (const auto& o : dec.orbits) orbits.push_back({{"id", o.id}, {"members", o.members}});
  return {{"orbits", std::move(orbits)}};
}

Json state_to_json(const QuantumState& state) {
  std::vector<double> re(static_cast<std::size_t>(state.size()));
  std::vector<double> im(re.size());
  for (Index i = 0; i < state.size(); ++i) {
    re[i] = state.amplitudes(i).real();
    im[i] = state.amplitudes(i).imag();
  }
  return {{"orbit", state.orbit_id}, {"basis", to_string(state.basis)}, {"re", re}, {"im", im}};
}

QuantumState state_from_json(const Json& doc) {
  try {
    QuantumState s;
    s.orbit_id = doc.at("orbit").get<Index>();
    const auto basis = doc.at("basis").get<std::string>();
    if (basis == "configuration") s.basis = Basis::Configuration;
    else if (basis == "energy") s.basis = Basis::Energy;
    else throw Error(ErrorKind::Parse, "unknown basis '" + basis + "'");
    const auto re = doc.at("re").get<std::vector<double>>();
    const auto im = doc.at("im").get<std::vector<double>>();
    if (re.size() != im.size()) throw Error(ErrorKind::LengthMismatch, "re and im differ in length");
    s.amplitudes.resize(static_cast<Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i) s.amplitudes(i) = {re[i], im[i]};
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("state: ") + e.what());
  }
}

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size())
    throw Error(ErrorKind::LengthMismatch, "row width does not match table schema");
  rows.push_back(std::move(row));
}

void add_complex_column(std::vector<std::string>& columns, const std::string& name) {
  columns.push_back(name + "_re");
  columns.push_back(name + "_im");
}

void push_complex(std::vector<double>& row, std::complex<double> z) {
  row.push_back(z.real());
  row.push_back(z.imag());
}

std::string format_real(double x) {
  if (x == 0.0) return "0";  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_table(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_real(row[c]);
    out << '\n';
  }
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorKind::Io, "write to stdout failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write to " + path + " failed");
}

void emit_table(const Table& table, const std::string& path) {
  std::ostringstream ss;
  write_table(ss, table);
  emit_text(ss.str(), path);
}

}  // namespace qcemu
