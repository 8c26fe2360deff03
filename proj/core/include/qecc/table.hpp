#ifndef QECC_TABLE_HPP
#define QECC_TABLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qecc/code.hpp"
#include "qecc/quantum.hpp"

namespace qecc {

enum class RowKind { cyclic, constacyclic, polycyclic, gqp, qt, ls };

/// Printed parameter record [n,k,d] or [[n,k,d]].
struct ParamTriple {
  std::size_t n = 0;
  long long k = 0;
  int d = 0;
  std::string classical_string() const;
  std::string quantum_string(std::uint32_t q) const;
};

/// One transcribed line of a published table.
struct TableRow {
  int table_id = 0;
  int row_index = 0;
  std::uint32_t q = 0;
  RowKind kind = RowKind::cyclic;
  std::uint32_t n = 0;                  // block length for cyclic-family rows
  std::string lambda_str = "1";          // shift constant token
  std::vector<std::string> f_strs;       // moduli (polycyclic / gqp blocks)
  std::vector<std::string> g_strs;       // generators
  std::vector<long long> p_scalars;      // gqp block scaling constants
  std::optional<ParamTriple> classical;  // printed classical parameters
  ParamTriple quantum;                   // printed quantum parameters
  std::optional<ParamTriple> compared;   // the "compared codes" column
  bool star = false;                     // claimed improvement
  bool ambiguous = false;                // pre-marked unparseable
  std::string meta;                      // opaque extra columns
  std::string expect;                    // transcriber's expected verdict

  Field field() const;
};

enum class VerdictStatus { confirmed, mismatch, ambiguous, infeasible, inconsistent_row };
std::string to_string(VerdictStatus s);

/// Outcome of rebuilding one row. `confirmed` is only set when the rebuilt
/// classical and quantum parameters both equal the printed ones and every
/// construction precondition (divisibility, containment) held.
struct Verdict {
  TableRow row;
  std::optional<std::string> classical_rebuilt;
  std::optional<std::string> quantum_rebuilt;
  VerdictStatus status = VerdictStatus::mismatch;
  std::string notes;
};

Verdict verify_row(const TableRow& row, const DistanceBudget& budget = {});

/// Fixture format: a "qecc-tables v1" header line, then one row per line of
/// whitespace-separated key=value fields (# starts a comment). Strings with
/// spaces use ~ in place of each space.
std::vector<TableRow> load_fixture(const std::string& path);
TableRow parse_fixture_line(const std::string& line);

struct Report {
  std::vector<Verdict> verdicts; // sorted by (table, row)
  std::map<VerdictStatus, int> counts;
  std::map<int, std::map<VerdictStatus, int>> per_table;

  std::string to_text() const;
  std::string to_json() const;
  /// 0 when every row the fixture expects to confirm did confirm, else 1.
  int exit_code() const;
};

Report reproduce_table(const std::vector<TableRow>& rows, const DistanceBudget& budget = {},
                       unsigned jobs = 0);

} // namespace qecc

#endif
