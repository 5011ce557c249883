#ifndef QCEMU_IO_HPP
#define QCEMU_IO_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcemu/dynamics.hpp"
#include "qcemu/spectral.hpp"

namespace qcemu {

using Json = nlohmann::json;

/// Builds dynamics from one of
///   {"type":"permutation","image":[...]}
///   {"type":"shift","sites":N}
///   {"type":"lga","sites":s,"reflect":bool}
/// Throws Error(Parse) on schema violations and propagates builder errors
/// (NotBijective, TooLarge) unchanged.
ClassicalDynamics dynamics_from_json(const Json& doc);

Json read_json_file(const std::string& path);
ClassicalDynamics load_dynamics(const std::string& path);

/// {"orbits":[{"id":0,"members":[...]},...]}
Json decomposition_to_json(const OrbitDecomposition& dec);

/// {"orbit":d,"basis":"configuration","re":[...],"im":[...]}
Json state_to_json(const QuantumState& state);
QuantumState state_from_json(const Json& doc);

/// Column-oriented numeric table written as CSV.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

/// Appends "<name>_re" and "<name>_im" columns.
void add_complex_column(std::vector<std::string>& columns, const std::string& name);
void push_complex(std::vector<double>& row, std::complex<double> z);

/// Header row then one line per row, LF terminated, reals printed with 17
/// significant digits.
void write_table(std::ostream& out, const Table& table);

/// Writes to `path`, or to standard output when path is empty or "-".
void emit_table(const Table& table, const std::string& path);
void emit_text(const std::string& text, const std::string& path);

std::string format_real(double x);

}  // namespace qcemu

#endif  // QCEMU_IO_HPP
